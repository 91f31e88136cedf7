#include "tmtrace/trace.hpp"

#include <algorithm>
#include <string>

#include "tmtrace/errors.hpp"
#include "tmtrace/extension.hpp"

namespace tmtrace {

namespace {

std::size_t common_length(const std::set<Word>& words) {
	if (words.empty())
		throw DomainError("a range family needs at least one word");
	return words.begin()->size();
}

} // namespace

RangeFamily::RangeFamily(std::set<Word> words) : length_(common_length(words)), words_(std::move(words)) {
	validate();
}

RangeFamily::RangeFamily(std::size_t word_length, std::set<Word> words)
    : length_(word_length), words_(std::move(words)) {
	validate();
}

void RangeFamily::validate() const {
	if (length_ == 0)
		throw DomainError("range family words must have length >= 1");
	for (const Word& w : words_) {
		if (w.size() != length_)
			throw DomainError("range family mixes word lengths");
		if (!is_factor(w))
			throw DomainError("range family member is not a factor: " + w.str());
	}
}

RangeFamily RangeFamily::lifted(std::size_t m) const {
	if (m < length_)
		throw DomainError("cannot lift a range family to shorter words");
	std::set<Word> out;
	for (const Word& w : words_)
		out.merge(extension_set(w, m - length_, 0));
	return RangeFamily(m, std::move(out));
}

RangeFamily RangeFamily::relative_range(int a) const {
	std::set<Word> out;
	for (const Word& w : words_)
		if (Word v = w + letter(a); is_factor(v))
			out.insert(std::move(v));
	return RangeFamily(length_ + 1, std::move(out));
}

RangeFamily intersect(const RangeFamily& a, const RangeFamily& b) {
	const std::size_t m = std::max(a.length_, b.length_);
	RangeFamily la = a.lifted(m), lb = b.lifted(m);
	std::set<Word> out;
	for (const Word& w : la.words_)
		if (lb.words_.contains(w))
			out.insert(w);
	return RangeFamily(m, std::move(out));
}

RangeFamily unite(const RangeFamily& a, const RangeFamily& b) {
	const std::size_t m = std::max(a.length_, b.length_);
	RangeFamily la = a.lifted(m), lb = b.lifted(m);
	la.words_.merge(lb.words_);
	return la;
}

Rational trace_range(const Word& w) {
	if (w.empty() || !is_factor(w))
		throw DomainError("not a factor: " + w.str());
	if (w.size() < 3) {
		Rational sum = 0;
		for (int a : {0, 1})
			if (Word v = letter(a) + w; is_factor(v))
				sum += trace_range(v);
		return sum;
	}
	Rational value(1, 6);
	// Peel leading letters, shortest suffix first.
	for (std::size_t k = w.size() - 3; k-- > 0;) {
		std::string probe = w.str().substr(k);
		probe[0] = probe[0] == '0' ? '1' : '0';
		if (is_factor(probe))
			value /= 2;
	}
	return value;
}

Rational trace_family(const RangeFamily& A) {
	Rational sum = 0;
	for (const Word& w : A.words())
		sum += trace_range(w);
	return sum;
}

Rational trace_spanning(const Word& alpha, const Word& beta, const RangeFamily& A) {
	if (alpha != beta)
		return 0;
	if (alpha.empty())
		return trace_family(A);
	if (!is_factor(alpha))
		return 0;
	return trace_family(intersect(A, RangeFamily({alpha})));
}

Rational block_trace(int i, int j, unsigned n) {
	if ((i != 0 && i != 1) || (j != 0 && j != 1))
		throw DomainError("block letters must be 0 or 1");
	if (n > kDefaultMaxBlockLevel)
		throw ResourceError("block level exceeds limit");
	return pow_half(n) / (i == j ? 6 : 3);
}

BlockTraces matrix_iterate_closed_form(const Rational& t, unsigned n) {
	const Rational drift = (3 * t - Rational(1, 2)) * (n % 2 == 0 ? 1 : -1);
	return {(pow_half(n + 1) + drift) / 3, (pow_half(n) - drift) / 3};
}

BlockTraces matrix_iterate_by_steps(const Rational& t, unsigned n) {
	// (b_{n+1,1}, b_{n+1,2}) = [[-1/2, 1/2], [1, 0]] (b_{n,1}, b_{n,2})
	BlockTraces b{t, Rational(1, 2) - t};
	for (unsigned k = 0; k < n; ++k)
		b = {(b.mixed - b.equal) / 2, b.equal};
	return b;
}

BlockTraces matrix_iterate(const Rational& t, unsigned n) {
	if (t < 0 || t > Rational(1, 2))
		throw DomainError("t must lie in [0, 1/2]");
	BlockTraces closed = matrix_iterate_closed_form(t, n);
	if (closed != matrix_iterate_by_steps(t, n))
		throw ConsistencyError("closed form and step iteration disagree at n = " + std::to_string(n));
	return closed;
}

OpenInterval uniqueness_interval(unsigned N) {
	if (N == 0)
		throw DomainError("uniqueness_interval needs N >= 1");
	// With u = 3t - 1/2, positivity at level n reads
	//   n even: -(1/2)^(n+1) < u < (1/2)^n
	//   n odd:  -(1/2)^n     < u < (1/2)^(n+1)
	Rational lo = -1, hi = 1;
	for (unsigned n = 0; n <= N; ++n) {
		Rational l = n % 2 == 0 ? -pow_half(n + 1) : -pow_half(n);
		Rational h = n % 2 == 0 ? pow_half(n) : pow_half(n + 1);
		if (l > lo)
			lo = l;
		if (h < hi)
			hi = h;
	}
	return {(lo + Rational(1, 2)) / 3, (hi + Rational(1, 2)) / 3};
}

Rational frequency(const Word& w, std::int64_t N, std::int64_t max_length) {
	if (w.empty() || !is_factor(w))
		throw DomainError("not a factor: " + w.str());
	if (N < static_cast<std::int64_t>(w.size()))
		throw DomainError("frequency window shorter than the word");
	auto hits = occurrences(w, {0, N}, max_length);
	return Rational(static_cast<std::int64_t>(hits.size()), N - static_cast<std::int64_t>(w.size()) + 1);
}

} // namespace tmtrace
