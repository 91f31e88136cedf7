#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "tmtrace/block_parse.hpp"
#include "tmtrace/errors.hpp"

using namespace tmtrace;

namespace {

const Word kAlpha("00101101001011001101001100101100");

struct Split {
	std::string gamma0, blocks, gamma1;
};

// Every way to read w as (suffix of a block) (full blocks) (prefix of a
// block) at level n, with at least two full blocks.
std::vector<Split> all_splits(const std::string& w, unsigned n) {
	const std::size_t len = std::size_t{1} << n;
	const std::string b0 = oracle::block(0, n), b1 = oracle::block(1, n);
	std::vector<Split> out;
	for (std::size_t off = 0; off < len && off < w.size(); ++off) {
		const std::size_t k = (w.size() - off) / len;
		if (k < 2)
			continue;
		Split s{w.substr(0, off), "", w.substr(off + k * len)};
		bool ok = true;
		for (std::size_t j = 0; j < k && ok; ++j) {
			const std::string piece = w.substr(off + j * len, len);
			if (piece == b0)
				s.blocks += '0';
			else if (piece == b1)
				s.blocks += '1';
			else
				ok = false;
		}
		const auto suffix_of_block = [&](const std::string& g) {
			return b0.ends_with(g) || b1.ends_with(g);
		};
		const auto prefix_of_block = [&](const std::string& g) {
			return b0.starts_with(g) || b1.starts_with(g);
		};
		if (ok && suffix_of_block(s.gamma0) && prefix_of_block(s.gamma1))
			out.push_back(s);
	}
	return out;
}

} // namespace

TEST_CASE("decompose examples") {
	const BlockDecomposition d = decompose(kAlpha, 3);
	CHECK(d.level == 3);
	CHECK(d.gamma0.str() == "0010110");
	CHECK(d.blocks.str() == "101");
	CHECK(d.gamma1.str() == "0");

	const BlockDecomposition e = decompose(Word("01101"), 1);
	CHECK(e.gamma0.empty());
	CHECK(e.blocks.str() == "01");
	CHECK(e.gamma1.str() == "1");

	const BlockDecomposition z = decompose(Word("0110"), 0);
	CHECK(z == BlockDecomposition{0, Word(), Word("0110"), Word()});
}

TEST_CASE("decompose errors") {
	CHECK_THROWS_AS(decompose(Word("000"), 0), DomainError);
	CHECK_THROWS_AS(decompose(Word("0"), 0), DomainError);
	CHECK_THROWS_AS(decompose(Word("01101"), 2), LevelError);
	CHECK_THROWS_AS(decompose(kAlpha, 4), LevelError);
	// 010 fits two level-1 blocks on neither grid
	CHECK_THROWS_AS(decompose(Word("010"), 1), LevelError);
}

TEST_CASE("choose_level") {
	CHECK(choose_level(kAlpha) == 3);
	CHECK(choose_level(Word("01101")) == 1);
	CHECK(choose_level(Word("0110")) == 1);
	CHECK(choose_level(Word("00")) == 0);
}

TEST_CASE("recompose") {
	CHECK(recompose(decompose(Word("01101001"), 1)).str() == "01101001");
	CHECK(recompose({3, Word("0010110"), Word("101"), Word("0")}) == kAlpha);
	CHECK(recompose({0, Word(), Word("0110"), Word()}).str() == "0110");
}

TEST_CASE("decomposition is the unique grid, exhaustively up to length 48") {
	for (std::size_t L = 2; L <= 48; ++L) {
		for (const std::string& w : oracle::factors(L)) {
			for (unsigned n = 1; (L >> n) >= 2; ++n) {
				const auto splits = all_splits(w, n);
				if (splits.size() == 1) {
					const BlockDecomposition d = decompose(Word(w), n);
					REQUIRE_MESSAGE(d.gamma0.str() == splits[0].gamma0, w);
					REQUIRE(d.blocks.str() == splits[0].blocks);
					REQUIRE(d.gamma1.str() == splits[0].gamma1);
					REQUIRE(recompose(d).str() == w);
				} else {
					// ambiguous grids only occur for very short words
					REQUIRE_MESSAGE((splits.empty() || L < 5), w);
					CHECK_THROWS_AS(decompose(Word(w), n), LevelError);
				}
			}
			const unsigned top = choose_level(Word(w));
			const auto blocks = decompose(Word(w), top).blocks.size();
			CHECK(blocks >= 2);
			CHECK(blocks <= 4);
			for (unsigned n = top + 1; (L >> n) >= 2; ++n) {
				const auto s = all_splits(w, n);
				CHECK_FALSE((s.size() == 1 && s[0].blocks.size() <= 4));
			}
		}
	}
}

TEST_CASE("complete_boundaries") {
	const BlockDecomposition c = complete_boundaries(decompose(kAlpha, 3));
	CHECK(c.level == 3);
	CHECK(c.gamma0.empty());
	CHECK(c.gamma1.empty());
	CHECK(c.blocks.str() == "11010");
	CHECK(recompose(c).str() == oracle::slice(8, 48));

	const BlockDecomposition full = decompose(Word("01101001"), 1);
	CHECK(complete_boundaries(full) == full);

	const BlockDecomposition right = complete_boundaries({3, Word(), Word("10"), Word("0")});
	CHECK(recompose(right).str().ends_with(oracle::block(0, 3)));
}

TEST_CASE("completion is forced and keeps the grid") {
	for (std::size_t L = 5; L <= 40; ++L) {
		for (const std::string& w : oracle::factors(L)) {
			const BlockDecomposition d = decompose(Word(w), choose_level(Word(w)));
			const BlockDecomposition c = complete_boundaries(d);
			const std::string full = recompose(c).str();
			const std::size_t left = left_completion_length(d);
			REQUIRE(full.substr(left, w.size()) == w);
			REQUIRE(oracle::is_factor(full));
			REQUIRE(c.blocks.size() <= 6);
			// no other completion of the same lengths is a factor
			for (const std::string& f : oracle::factors(full.size()))
				if (f.substr(left, w.size()) == w)
					REQUIRE(f == full);
		}
	}
}

TEST_CASE("two full blocks force the next block") {
	for (unsigned n = 1; n <= 3; ++n) {
		const std::size_t len = std::size_t{1} << n;
		for (int i1 : {0, 1})
			for (int i2 : {0, 1}) {
				const std::string head = oracle::block(i1, n) + oracle::block(i2, n);
				for (const std::string& f : oracle::factors(3 * len)) {
					if (f.starts_with(head)) {
						const std::string tail = f.substr(2 * len);
						CHECK((tail == oracle::block(0, n) || tail == oracle::block(1, n)));
					}
					if (f.ends_with(head)) {
						const std::string lead = f.substr(0, len);
						CHECK((lead == oracle::block(0, n) || lead == oracle::block(1, n)));
					}
				}
			}
	}
}

TEST_CASE("expansion of a block word is a factor iff the block word is") {
	for (unsigned n = 0; n <= 4; ++n)
		for (std::size_t L = 1; L <= 8; ++L)
			for (std::uint32_t code = 0; code < (1u << L); ++code) {
				std::string c, expanded;
				for (std::size_t j = L; j-- > 0;) {
					const int bit = static_cast<int>((code >> j) & 1);
					c += static_cast<char>('0' + bit);
					expanded += oracle::block(bit, n);
				}
				REQUIRE(oracle::is_factor(c) == oracle::is_factor(expanded));
				REQUIRE(is_factor(Word(expanded)) == oracle::is_factor(expanded));
			}
}

TEST_CASE("rewrite_five") {
	using Form = FiveBlockRegrouping::Form;
	using Piece = FiveBlockRegrouping::Piece;

	const FiveBlockRegrouping lead = rewrite_five(Word("01100"), 2);
	CHECK(lead.form == Form::Leading);
	CHECK(lead.pieces == std::vector<Piece>{{0, 3}, {1, 3}, {0, 2}});

	const FiveBlockRegrouping trail = rewrite_five(Word("11010"), 3);
	CHECK(trail.form == Form::Trailing);
	CHECK(trail.pieces == std::vector<Piece>{{1, 3}, {1, 4}, {1, 4}});

	CHECK_THROWS_AS(rewrite_five(Word("00100"), 1), DomainError);
	CHECK_THROWS_AS(rewrite_five(Word("0110"), 1), DomainError);

	// every five-letter factor regroups, and the regrouping expands back
	for (const std::string& c : oracle::factors(5)) {
		for (unsigned n = 0; n <= 3; ++n) {
			const FiveBlockRegrouping r = rewrite_five(Word(c), n);
			std::string expanded, original;
			for (const Piece& p : r.pieces)
				expanded += oracle::block(p.letter, p.level);
			for (char ch : c)
				original += oracle::block(ch - '0', n);
			CHECK(expanded == original);
		}
	}
}
