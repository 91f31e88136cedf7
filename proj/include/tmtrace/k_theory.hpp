#pragma once

// K_0 as the inductive limit of Z^2 under (x, y) -> (y, 2x + y), with a_n
// and b_n the classes of the range projections of 0^(n)1^(n)0^(n) and
// 0^(n)0^(n)1^(n). The relations a_n = 2 b_{n+1} and b_n = a_{n+1} + b_{n+1}
// are exactly that promotion map.

#include <cstdint>
#include <map>

#include "tmtrace/rational.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace {

/// x a_n + y b_n. Arithmetic results are in normal form (minimal level);
/// promote() deliberately is not.
struct K0Element {
	unsigned level = 0;
	std::int64_t x = 0;
	std::int64_t y = 0;

	friend bool operator==(const K0Element&, const K0Element&) = default;
};

inline K0Element generator_a(unsigned n) { return {n, 1, 0}; }
inline K0Element generator_b(unsigned n) { return {n, 0, 1}; }

/// The same element one level up: (x, y) -> (y, 2x + y).
K0Element promote(const K0Element& e);
K0Element promote_to(K0Element e, unsigned level);
K0Element normal_form(K0Element e);

K0Element k0_add(const K0Element& a, const K0Element& b);
K0Element k0_neg(const K0Element& e);
K0Element k0_scale(const K0Element& e, std::int64_t k);
bool k0_equal(const K0Element& a, const K0Element& b);

/// In the positive cone of the limit order. Promotion has eigenvalues 2 and
/// -1 with (1, 2) the positive eigenvector, so an element eventually has
/// both coordinates >= 0 iff x + y > 0, or it is zero.
bool is_positive(const K0Element& e);

/// A rational whose denominator divides 3 * 2^m.
class DyadicThirdRational {
public:
	/// Throws DomainError for any other denominator.
	explicit DyadicThirdRational(Rational q);
	const Rational& value() const noexcept { return value_; }
	friend bool operator==(const DyadicThirdRational&, const DyadicThirdRational&) = default;

private:
	Rational value_;
};

/// The trace homomorphism: a_n, b_n -> 1/(6 2^n).
DyadicThirdRational evaluate(const K0Element& e);

/// Class of p_{r(w)} in terms of the generators.
K0Element reduce_class(const Word& w);

/// Block words c of length 2..6 mapped to the class of p_{r(expansion of c
/// at level n)}, stored at relative level 2 (so the value at level n is the
/// stored pair read at level n + 2). Built once by exact elimination over
/// the left/right splitting and regrouping relations.
const std::map<Word, K0Element>& block_word_class_table();

/// Integer combination of characteristic functions chi_{r(w)}.
class FormalCombination {
public:
	FormalCombination() = default;

	/// Throws DomainError unless `w` is a factor.
	void add(const Word& w, std::int64_t coeff);
	std::int64_t coefficient(const Word& w) const;
	const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
	bool empty() const noexcept { return terms_.empty(); }

	friend bool operator==(const FormalCombination&, const FormalCombination&) = default;

private:
	std::map<Word, std::int64_t> terms_;
};

/// chi_{r(w)} -> chi_{r(w)} - chi_{r(w0)} - chi_{r(w1)}, dropping empty ranges.
FormalCombination apply_i_minus_phi(const FormalCombination& c);

/// Sum of coefficient * reduce_class(word).
K0Element class_of(const FormalCombination& c);

} // namespace tmtrace
