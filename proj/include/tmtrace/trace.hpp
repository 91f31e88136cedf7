#pragma once

// The unique tracial state, evaluated exactly on range projections p_{r(w)}.
//
// On words of length 3 the value is 1/6. A longer word i.w' either has the
// same value as w' (when ibar.w' is not a factor) or half of it. Shorter
// words are sums over their left extensions to length 3. The value of a word
// equals its frequency in the Thue-Morse sequence.

#include <cstddef>
#include <cstdint>
#include <set>

#include "tmtrace/rational.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace {

/// A finite disjoint union of ranges r(w_1) u ... u r(w_K), all |w_i| equal.
class RangeFamily {
public:
	/// Throws DomainError if `words` is empty, mixes lengths, or holds a non-factor.
	explicit RangeFamily(std::set<Word> words);
	/// Same, but permits the empty family (the empty set) at the given length.
	RangeFamily(std::size_t word_length, std::set<Word> words);

	std::size_t word_length() const noexcept { return length_; }
	const std::set<Word>& words() const noexcept { return words_; }
	bool empty() const noexcept { return words_.empty(); }

	/// The same set written with words of length m >= word_length(),
	/// using r(w) = r(0w) u r(1w).
	RangeFamily lifted(std::size_t m) const;

	/// r(A, a) = { r(wa) : w in A }.
	RangeFamily relative_range(int a) const;

	friend RangeFamily intersect(const RangeFamily& a, const RangeFamily& b);
	friend RangeFamily unite(const RangeFamily& a, const RangeFamily& b);
	friend bool operator==(const RangeFamily&, const RangeFamily&) = default;

private:
	void validate() const;

	std::size_t length_ = 0;
	std::set<Word> words_;
};

Rational trace_range(const Word& w);
Rational trace_family(const RangeFamily& A);

/// Trace of s_alpha p_A s_beta^*: zero unless alpha = beta, and then the trace
/// of p_{A n r(alpha)}. An empty alpha means s_alpha is the unit.
Rational trace_spanning(const Word& alpha, const Word& beta, const RangeFamily& A);

/// Closed form for p_{r(i^(n) j^(n))}: 1/(6 2^n) if i = j, else 1/(3 2^n).
Rational block_trace(int i, int j, unsigned n);

/// Traces of 0^(n)0^(n) and 0^(n)1^(n) for a candidate state with t = value at 00.
struct BlockTraces {
	Rational equal;
	Rational mixed;
	friend bool operator==(const BlockTraces&, const BlockTraces&) = default;
};

/// Evaluated by the closed form and by iterating the 2x2 step matrix;
/// throws ConsistencyError if the two disagree.
BlockTraces matrix_iterate(const Rational& t, unsigned n);
BlockTraces matrix_iterate_closed_form(const Rational& t, unsigned n);
BlockTraces matrix_iterate_by_steps(const Rational& t, unsigned n);

struct OpenInterval {
	Rational lower;
	Rational upper;

	bool contains(const Rational& x) const { return lower < x && x < upper; }
	Rational width() const { return upper - lower; }
};

/// The t values keeping every block trace strictly positive up to level N.
OpenInterval uniqueness_interval(unsigned N);

/// Exact occurrence frequency of w in omega_[0, N).
Rational frequency(const Word& w, std::int64_t N, std::int64_t max_length = kDefaultMaxSlice);

} // namespace tmtrace
