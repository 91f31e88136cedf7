#pragma once

// Canonical decomposition of a factor into level-n blocks i^(n):
//
//     w = gamma0 . i_1^(n) ... i_k^(n) . gamma1
//
// where gamma0 is a proper suffix and gamma1 a proper prefix of some level-n
// block. For a fixed level the decomposition is unique.

#include <optional>
#include <vector>

#include "tmtrace/word.hpp"

namespace tmtrace {

struct BlockDecomposition {
	unsigned level = 0;
	Word gamma0;
	Word blocks; ///< letter j stands for the full block blocks[j]^(level)
	Word gamma1;

	friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Throws DomainError if `w` is not a factor (or shorter than 2), LevelError
/// if the level-n grid does not hold at least two full blocks or is not
/// determined by `w`.
BlockDecomposition decompose(const Word& w, unsigned n);

/// Largest n whose decomposition has between 2 and 4 full blocks.
unsigned choose_level(const Word& w);

Word recompose(const BlockDecomposition& d);

/// Extends both partial blocks to full ones. The completions are forced:
/// once two full blocks are present, every extension of the word by the
/// missing letters turns the partial block into a full one.
BlockDecomposition complete_boundaries(const BlockDecomposition& d);

/// Number of letters prepended by complete_boundaries.
std::size_t left_completion_length(const BlockDecomposition& d);

/// The two ways five consecutive level-n blocks regroup one level up.
struct FiveBlockRegrouping {
	enum class Form {
		Leading,  ///< i1^(n+1) i3^(n+1) i5^(n)
		Trailing, ///< i1^(n) i2^(n+1) i4^(n+1)
	};
	struct Piece {
		int letter;
		unsigned level;
		friend bool operator==(const Piece&, const Piece&) = default;
	};

	Form form;
	std::vector<Piece> pieces;
};

FiveBlockRegrouping rewrite_five(const Word& blocks, unsigned n);

} // namespace tmtrace
