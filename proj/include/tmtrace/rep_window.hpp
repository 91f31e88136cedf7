#pragma once

// Finite window of the representation on l^2(Z): basis v_n for -W <= n <= W,
// t_i v_n = v_{n-1} when omega_{n-1} = i and 0 otherwise. Shifts that would
// leave the window are dropped, so identities are checked on an interior band.

#include <cstddef>
#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

#include "tmtrace/rational.hpp"
#include "tmtrace/trace.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace {

inline constexpr std::int64_t kMaxHalfWidth = std::int64_t{1} << 20;

/// Integer matrix on the window with at most one nonzero entry per column.
class WindowOperator {
public:
	struct Entry {
		std::int64_t row;
		std::int64_t value;
	};

	explicit WindowOperator(std::int64_t half_width);
	static WindowOperator identity(std::int64_t half_width);

	std::int64_t half_width() const noexcept { return half_width_; }
	std::size_t dimension() const noexcept { return rows_.size(); }

	/// Nonzero entry of column n, if any.
	std::optional<Entry> column(std::int64_t n) const;
	std::int64_t at(std::int64_t row, std::int64_t col) const;
	/// Replaces whatever column `col` held.
	void set(std::int64_t row, std::int64_t col, std::int64_t value);

	/// Throws ConsistencyError if two columns share a row (the adjoint would
	/// leave the one-entry-per-column class).
	WindowOperator adjoint() const;

	friend WindowOperator operator*(const WindowOperator& a, const WindowOperator& b);
	/// Throws ConsistencyError if the result needs two entries in one column.
	friend WindowOperator operator+(const WindowOperator& a, const WindowOperator& b);
	friend WindowOperator operator-(const WindowOperator& a, const WindowOperator& b);

private:
	static constexpr std::int64_t kNone = INT64_MIN;
	std::size_t slot(std::int64_t n) const;
	WindowOperator combine(const WindowOperator& b, std::int64_t sign) const;

	std::int64_t half_width_;
	std::vector<std::int64_t> rows_; ///< kNone for an empty column
	std::vector<std::int64_t> values_;
};

/// Max |entry| of a - b over rows and columns in [lo, hi].
std::int64_t max_residual(const WindowOperator& a, const WindowOperator& b, std::int64_t lo, std::int64_t hi);

struct ShiftGenerators {
	WindowOperator t0;
	WindowOperator t1;

	const WindowOperator& operator[](int a) const { return a ? t1 : t0; }
};

ShiftGenerators build_generators(std::int64_t W);

/// t_{alpha_1} ... t_{alpha_k}; the identity for the empty word.
WindowOperator word_operator(const Word& alpha, std::int64_t W);

/// Diagonal projection onto span{v_n : omega_[n-|alpha|, n) = alpha}.
WindowOperator range_projection(const Word& alpha, std::int64_t W);
WindowOperator range_projection(const RangeFamily& A, std::int64_t W);

struct AxiomResiduals {
	std::int64_t lattice = 0;       ///< p_A p_B = p_{A n B}, p_{A u B} = p_A + p_B - p_{A n B}
	std::int64_t covariance = 0;    ///< p_A s_a = s_a p_{r(A, a)}
	std::int64_t isometry = 0;      ///< s_a^* s_a = p_{r(a)}, s_a^* s_b = 0
	std::int64_t cuntz_krieger = 0; ///< p_A = sum_a s_a p_{r(A, a)} s_a^*

	std::int64_t max() const;
};

/// Residuals of the representation relations over every factor up to
/// `maxlen`, on the band [-W + maxlen, W - maxlen].
AxiomResiduals axiom_residuals(std::int64_t W, std::size_t maxlen);

/// Fraction of band indices in the range of p_{r(alpha)}.
Rational empirical_trace(const Word& alpha, std::int64_t W);

} // namespace tmtrace
