#include "tmtrace/block_parse.hpp"

#include <bit>
#include <string>

#include "tmtrace/errors.hpp"

namespace tmtrace {

namespace {

bool suffix_of_a_block(const Word& g, unsigned n) {
	return g.empty() || block(0, n).ends_with(g) || block(1, n).ends_with(g);
}

bool prefix_of_a_block(const Word& g, unsigned n) {
	return g.empty() || block(0, n).starts_with(g) || block(1, n).starts_with(g);
}

// Level-1 grids: phase 0 starts a pair at the first letter, phase 1 at the second.
std::vector<BlockDecomposition> level_one_candidates(const Word& w) {
	std::vector<BlockDecomposition> out;
	for (std::size_t phase = 0; phase < 2; ++phase) {
		BlockDecomposition d{1, w.substr(0, phase), {}, {}};
		std::size_t i = phase;
		bool ok = true;
		for (; i + 1 < w.size(); i += 2) {
			if (w[i] == w[i + 1]) {
				ok = false;
				break;
			}
			d.blocks.push_back(w[i]);
		}
		if (!ok || d.blocks.size() < 2)
			continue;
		d.gamma1 = w.substr(i);
		out.push_back(std::move(d));
	}
	return out;
}

// Regroups a level-m decomposition into level m+1 with the given parity.
std::optional<BlockDecomposition> group_up(const BlockDecomposition& d, std::size_t parity) {
	const unsigned m = d.level;
	const Word& c = d.blocks;
	if (c.size() < parity + 4)
		return std::nullopt;
	BlockDecomposition up{m + 1, d.gamma0, {}, {}};
	std::size_t i = 0;
	if (parity == 1) {
		// gamma0 followed by c0^(m) is a tail of cbar0^(m) c0^(m).
		if (!d.gamma0.empty() && !block(1 - c[0], m).ends_with(d.gamma0))
			return std::nullopt;
		up.gamma0 += block(c[0], m);
		i = 1;
	}
	for (; i + 1 < c.size(); i += 2) {
		if (c[i] == c[i + 1])
			return std::nullopt;
		up.blocks.push_back(c[i]);
	}
	if (i < c.size()) {
		// c_last^(m) followed by gamma1 is a head of c_last^(m) cbar_last^(m).
		if (!d.gamma1.empty() && !block(1 - c[i], m).starts_with(d.gamma1))
			return std::nullopt;
		up.gamma1 = block(c[i], m) + d.gamma1;
	} else {
		up.gamma1 = d.gamma1;
	}
	if (up.blocks.size() < 2)
		return std::nullopt;
	return up;
}

std::optional<BlockDecomposition> unique_candidate(std::vector<BlockDecomposition> cands, unsigned n) {
	if (cands.empty())
		return std::nullopt;
	if (cands.size() > 1)
		throw LevelError("level-" + std::to_string(n) + " grid is not determined by the word");
	return std::move(cands.front());
}

} // namespace

BlockDecomposition decompose(const Word& w, unsigned n) {
	if (w.size() < 2)
		throw DomainError("decompose needs a word of length >= 2");
	if (!is_factor(w))
		throw DomainError("not a factor: " + w.str());
	if (n == 0)
		return {0, {}, w, {}};
	if ((w.size() >> n) < 2)
		throw LevelError("fewer than two level-" + std::to_string(n) + " blocks fit in a word of length " +
		                 std::to_string(w.size()));

	auto current = unique_candidate(level_one_candidates(w), 1);
	for (unsigned m = 1; current && m < n; ++m) {
		std::vector<BlockDecomposition> next;
		for (std::size_t parity = 0; parity < 2; ++parity)
			if (auto up = group_up(*current, parity))
				next.push_back(std::move(*up));
		current = unique_candidate(std::move(next), m + 1);
	}
	if (!current)
		throw LevelError("no level-" + std::to_string(n) + " decomposition of " + w.str());
	return std::move(*current);
}

unsigned choose_level(const Word& w) {
	if (w.size() < 2)
		throw DomainError("choose_level needs a word of length >= 2");
	if (!is_factor(w))
		throw DomainError("not a factor: " + w.str());
	for (auto n = static_cast<unsigned>(std::bit_width(w.size() / 2) - 1);; --n) {
		try {
			auto d = decompose(w, n);
			if (d.blocks.size() >= 2 && d.blocks.size() <= 4)
				return n;
		} catch (const LevelError&) {
		}
		if (n == 0)
			break;
	}
	throw LevelError("no level with 2 to 4 full blocks for " + w.str());
}

Word recompose(const BlockDecomposition& d) {
	Word out = d.gamma0;
	const Word zero = block(0, d.level);
	const Word one = block(1, d.level);
	for (std::size_t j = 0; j < d.blocks.size(); ++j)
		out += d.blocks[j] ? one : zero;
	out += d.gamma1;
	return out;
}

std::size_t left_completion_length(const BlockDecomposition& d) {
	return d.gamma0.empty() ? 0 : (std::size_t{1} << d.level) - d.gamma0.size();
}

BlockDecomposition complete_boundaries(const BlockDecomposition& d) {
	if (d.blocks.size() < 2)
		throw LevelError("boundary completion needs at least two full blocks");
	if (!suffix_of_a_block(d.gamma0, d.level) || !prefix_of_a_block(d.gamma1, d.level))
		throw DomainError("partial blocks do not match level " + std::to_string(d.level));

	BlockDecomposition out{d.level, {}, {}, {}};
	if (!d.gamma0.empty())
		out.blocks.push_back(block(0, d.level).ends_with(d.gamma0) ? 0 : 1);
	out.blocks += d.blocks;
	if (!d.gamma1.empty())
		out.blocks.push_back(block(0, d.level).starts_with(d.gamma1) ? 0 : 1);

	if (!is_factor(out.blocks))
		throw ConsistencyError("boundary completion of " + recompose(d).str() + " is not a factor");
	return out;
}

FiveBlockRegrouping rewrite_five(const Word& blocks, unsigned n) {
	if (blocks.size() != 5)
		throw DomainError("rewrite_five takes exactly five blocks");
	if (!is_factor(blocks))
		throw DomainError("block word is not a factor: " + blocks.str());
	auto pairs = [&](std::size_t a, std::size_t b) { return blocks[a] != blocks[a + 1] && blocks[b] != blocks[b + 1]; };
	const bool leading = pairs(0, 2);
	const bool trailing = pairs(1, 3);
	if (leading == trailing)
		throw DomainError("five-block word " + blocks.str() + " has no unique regrouping");
	if (leading)
		return {FiveBlockRegrouping::Form::Leading, {{blocks[0], n + 1}, {blocks[2], n + 1}, {blocks[4], n}}};
	return {FiveBlockRegrouping::Form::Trailing, {{blocks[0], n}, {blocks[1], n + 1}, {blocks[3], n + 1}}};
}

} // namespace tmtrace
