#pragma once

// Finite-dimensional levels F_k of the gauge-fixed AF core and the Bratteli
// inclusions F_k -> F_{k+1}. F_k is commutative; its minimal projections
// s_alpha p_{r(beta alpha)} s_alpha^* are indexed by the length-2k factor
// mu = beta alpha.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tmtrace/rational.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace {

inline constexpr unsigned kDefaultMaxAfLevel = 12;

struct AfLevel {
	unsigned k = 0;
	std::vector<Word> basis; ///< length-2k factors, lexicographic

	std::size_t dimension() const noexcept { return basis.size(); }
	/// Position of mu in the basis; throws DomainError if absent.
	std::size_t index_of(const Word& mu) const;
};

/// d_{k+1} x d_k 0/1 matrix; entry (mu', mu) is 1 iff mu' = b mu a.
class InclusionMatrix {
public:
	InclusionMatrix(unsigned k, std::size_t rows, std::size_t cols);

	unsigned k() const noexcept { return k_; }
	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }

	std::uint8_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
	void set(std::size_t r, std::size_t c, std::uint8_t v) { entries_[r * cols_ + c] = v; }

	std::size_t column_sum(std::size_t c) const;
	std::size_t row_sum(std::size_t r) const;

	/// M^T v, for v indexed by the rows.
	std::vector<Rational> transpose_apply(const std::vector<Rational>& v) const;

private:
	unsigned k_;
	std::size_t rows_, cols_;
	std::vector<std::uint8_t> entries_;
};

AfLevel af_level(unsigned k, unsigned max_k = kDefaultMaxAfLevel);
InclusionMatrix inclusion_matrix(unsigned k, unsigned max_k = kDefaultMaxAfLevel);
std::vector<Rational> trace_vector(unsigned k, unsigned max_k = kDefaultMaxAfLevel);

/// Bratteli data for levels 1..k_max as DOT, one rank per level.
std::string bratteli_dot(unsigned k_max);

} // namespace tmtrace
