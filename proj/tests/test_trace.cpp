#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "tmtrace/errors.hpp"
#include "tmtrace/extension.hpp"
#include "tmtrace/rational.hpp"
#include "tmtrace/trace.hpp"

using namespace tmtrace;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

RangeFamily family(std::initializer_list<const char*> words) {
	std::set<Word> s;
	for (const char* w : words)
		s.insert(Word(w));
	return RangeFamily(std::move(s));
}

} // namespace

TEST_CASE("rational text form") {
	CHECK(to_string(q(1, 6)) == "1/6");
	CHECK(to_string(q(-4, 2)) == "-2");
	CHECK(to_string(q(0)) == "0");
	CHECK(parse_rational("3/12") == q(1, 4));
	CHECK(parse_rational("-7") == q(-7));
	CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
	CHECK_THROWS_AS(parse_rational("x"), DomainError);
	CHECK_THROWS_AS(parse_rational("1/"), DomainError);
	CHECK(pow_half(3) == q(1, 8));
}

TEST_CASE("trace_range examples") {
	CHECK(trace_range(Word("010")) == q(1, 6));
	CHECK(trace_range(Word("00")) == q(1, 6));
	CHECK(trace_range(Word("11")) == q(1, 6));
	CHECK(trace_range(Word("01")) == q(1, 3));
	CHECK(trace_range(Word("10")) == q(1, 3));
	CHECK(trace_range(Word("0")) == q(1, 2));
	CHECK(trace_range(tm_slice({10, 32})) == q(1, 48));
	CHECK(trace_range(Word("0110")) == q(1, 6));
	CHECK(trace_range(Word("101101")) == q(1, 24));
	for (const Word& w : factors_of_length(3))
		CHECK(trace_range(w) == q(1, 6));
	CHECK_THROWS_AS(trace_range(Word("000")), DomainError);
	CHECK_THROWS_AS(trace_range(Word()), DomainError);
}

TEST_CASE("trace_range equals the limiting frequency") {
	for (std::size_t L = 1; L <= 12; ++L)
		for (const Word& w : factors_of_length(L))
			REQUIRE_MESSAGE(trace_range(w) == oracle::trace(w.str()), w.str());
}

TEST_CASE("trace state properties up to length 16") {
	for (std::size_t L = 1; L <= 16; ++L) {
		Rational total = 0;
		for (const Word& w : factors_of_length(L)) {
			const Rational t = trace_range(w);
			total += t;
			CHECK(t > 0);
			CHECK(trace_range(reverse(w)) == t);
			CHECK(trace_range(complement(w)) == t);
			Rational left = 0, right = 0;
			for (const Word& u : extension_set(w, 1, 0))
				left += trace_range(u);
			for (const Word& u : extension_set(w, 0, 1))
				right += trace_range(u);
			CHECK(left == t);
			CHECK(right == t);
			if (L >= 4) {
				const Rational tail = trace_range(w.substr(1));
				CHECK((t == tail || t == tail / 2));
			}
		}
		CHECK(total == 1);
	}
}

TEST_CASE("range families") {
	CHECK(trace_family(family({"00", "01"})) == q(1, 2));
	CHECK(trace_family(family({"00", "10"})) == q(1, 2));
	CHECK(trace_family(family({"0110"})) == trace_range(Word("0110")));
	CHECK(trace_family(RangeFamily(factors_of_length(4))) == 1);

	const RangeFamily zero = family({"0"});
	CHECK(zero.lifted(2) == family({"00", "10"}));
	CHECK(zero.relative_range(1) == family({"01"}));
	CHECK(family({"00"}).relative_range(0).empty());

	CHECK(intersect(family({"0"}), family({"01", "11"})) == RangeFamily(2, {}));
	CHECK(intersect(family({"0"}), family({"10", "11"})) == family({"10"}));
	CHECK(unite(family({"0"}), family({"11"})) == family({"00", "10", "11"}));

	CHECK_THROWS_AS(RangeFamily(std::set<Word>{}), DomainError);
	CHECK_THROWS_AS(family({"0", "01"}), DomainError);
	CHECK_THROWS_AS(family({"000"}), DomainError);
	CHECK_THROWS_AS(zero.lifted(0), DomainError);
}

TEST_CASE("families obey inclusion-exclusion") {
	const auto f2 = factors_of_length(2), f3 = factors_of_length(3);
	for (const Word& a : f2)
		for (const Word& b : f3) {
			const RangeFamily A({a}), B({b});
			CHECK(trace_family(unite(A, B)) ==
			      trace_family(A) + trace_family(B) - trace_family(intersect(A, B)));
		}
}

TEST_CASE("trace_spanning") {
	const RangeFamily all2 = RangeFamily(factors_of_length(2));
	CHECK(trace_spanning(Word("01"), Word("10"), all2) == 0);
	CHECK(trace_spanning(Word("01"), Word("01"), family({"1001"})) == q(1, 6));
	CHECK(trace_spanning(Word(), Word(), all2) == 1);
	CHECK(trace_spanning(Word("11"), Word("11"), family({"1001"})) == 0);
	for (const Word& a : factors_of_length(3))
		CHECK(trace_spanning(a, a, RangeFamily(factors_of_length(5))) == trace_range(a));
}

TEST_CASE("block traces") {
	CHECK(block_trace(0, 0, 0) == q(1, 6));
	CHECK(block_trace(0, 1, 3) == q(1, 24));
	for (unsigned n = 0; n <= 8; ++n) {
		CHECK(block_trace(1, 0, n) == block_trace(0, 1, n));
		for (int i : {0, 1}) {
			const Rational same = trace_range(block(i, n) + block(i, n));
			const Rational mixed = trace_range(block(i, n) + block(1 - i, n));
			CHECK(same == block_trace(i, i, n));
			CHECK(mixed == block_trace(i, 1 - i, n));
			CHECK(same < mixed);
		}
	}
	CHECK_THROWS_AS(block_trace(2, 0, 1), DomainError);
	CHECK_THROWS_AS(block_trace(0, 0, 31), ResourceError);
}

TEST_CASE("matrix_iterate") {
	CHECK(matrix_iterate(q(1, 6), 0) == BlockTraces{q(1, 6), q(1, 3)});
	CHECK(matrix_iterate(q(1, 6), 3) == BlockTraces{q(1, 48), q(1, 24)});
	// b_{1,1} = 0 shows 1/4 is not a trace
	CHECK(matrix_iterate(q(1, 4), 1) == BlockTraces{q(0), q(1, 4)});
	for (const Rational& t : {q(0), q(1, 6), q(1, 4), q(1, 2)})
		for (unsigned n = 0; n <= 40; ++n)
			CHECK(matrix_iterate_closed_form(t, n) == matrix_iterate_by_steps(t, n));
	for (unsigned n = 0; n <= 30; ++n)
		CHECK(matrix_iterate(q(1, 6), n) == BlockTraces{pow_half(n) / 6, pow_half(n) / 3});
	CHECK_THROWS_AS(matrix_iterate(q(-1, 8), 2), DomainError);
	CHECK_THROWS_AS(matrix_iterate(q(3, 4), 2), DomainError);
}

TEST_CASE("uniqueness interval") {
	const OpenInterval first = uniqueness_interval(1);
	CHECK(first.contains(q(1, 6)));
	CHECK_FALSE(first.contains(q(1, 4)));
	OpenInterval prev = first;
	for (unsigned N = 1; N <= 30; ++N) {
		const OpenInterval I = uniqueness_interval(N);
		CHECK(I.contains(q(1, 6)));
		CHECK(I.width() <= pow_half(N));
		CHECK(I.lower >= prev.lower);
		CHECK(I.upper <= prev.upper);
		prev = I;
		// the interval is exactly the set of t with positive block traces
		for (const Rational& t : {I.lower, I.upper, Rational((I.lower + I.upper) / 2)}) {
			bool positive = true;
			for (unsigned n = 0; n <= N; ++n) {
				const BlockTraces b = matrix_iterate_by_steps(t, n);
				positive = positive && b.equal > 0 && b.mixed > 0;
			}
			CHECK(positive == I.contains(t));
		}
	}
	CHECK_THROWS_AS(uniqueness_interval(0), DomainError);
}

TEST_CASE("frequency") {
	CHECK(frequency(Word("0"), 1 << 20) == q(1, 2));
	CHECK(abs(frequency(Word("01"), 1 << 20) - q(1, 3)) <= q(1, 100));
	CHECK(abs(frequency(Word("00"), 1 << 20) - q(1, 6)) <= q(1, 100));
	CHECK(frequency(Word("0110"), 8) == q(1, 5));
	CHECK_THROWS_AS(frequency(Word("000"), 100), DomainError);
	CHECK_THROWS_AS(frequency(Word("0"), 1 << 20, 1 << 10), ResourceError);
}
