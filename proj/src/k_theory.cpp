#include "tmtrace/k_theory.hpp"

#include <optional>
#include <string>
#include <vector>

#include "exact_linalg.hpp"
#include "tmtrace/block_parse.hpp"
#include "tmtrace/errors.hpp"

namespace tmtrace {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
	std::int64_t r;
	if (__builtin_add_overflow(a, b, &r))
		throw ResourceError("K0 coefficient overflow");
	return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
	std::int64_t r;
	if (__builtin_mul_overflow(a, b, &r))
		throw ResourceError("K0 coefficient overflow");
	return r;
}

} // namespace

K0Element promote(const K0Element& e) {
	return {e.level + 1, e.y, checked_add(checked_mul(2, e.x), e.y)};
}

K0Element promote_to(K0Element e, unsigned level) {
	if (level < e.level)
		throw DomainError("cannot promote to a lower level");
	while (e.level < level)
		e = promote(e);
	return e;
}

K0Element normal_form(K0Element e) {
	// (x, y) at level n is the promotion of ((y - x)/2, x) whenever y - x is even.
	while (e.level > 0 && (e.y - e.x) % 2 == 0)
		e = {e.level - 1, (e.y - e.x) / 2, e.x};
	return e;
}

K0Element k0_add(const K0Element& a, const K0Element& b) {
	const unsigned level = std::max(a.level, b.level);
	K0Element pa = promote_to(a, level), pb = promote_to(b, level);
	return normal_form({level, checked_add(pa.x, pb.x), checked_add(pa.y, pb.y)});
}

K0Element k0_neg(const K0Element& e) {
	return normal_form({e.level, -e.x, -e.y});
}

K0Element k0_scale(const K0Element& e, std::int64_t k) {
	return normal_form({e.level, checked_mul(k, e.x), checked_mul(k, e.y)});
}

bool k0_equal(const K0Element& a, const K0Element& b) {
	return normal_form(a) == normal_form(b);
}

bool is_positive(const K0Element& e) {
	return (e.x == 0 && e.y == 0) || checked_add(e.x, e.y) > 0;
}

DyadicThirdRational::DyadicThirdRational(Rational q) : value_(std::move(q)) {
	BigInt den = boost::multiprecision::denominator(value_);
	while (den % 2 == 0)
		den /= 2;
	if (den != 1 && den != 3)
		throw DomainError("denominator is not of the form 2^m or 3 * 2^m: " + to_string(value_));
}

DyadicThirdRational evaluate(const K0Element& e) {
	BigInt den = 6;
	den <<= e.level;
	return DyadicThirdRational(Rational(BigInt(e.x) + BigInt(e.y), den));
}

namespace {

Word flip_letter(int a) { return letter(1 - a); }

// Class of a three-block word at relative level 0.
K0Element three_block_generator(const Word& c) {
	if (c.str() == "010" || c.str() == "101")
		return generator_a(0);
	if (c.str() == "000" || c.str() == "111")
		throw ConsistencyError("three-block word is not a factor: " + c.str());
	return generator_b(0);
}

// The level-(n+1) block word a level-n block word c regroups into, for the
// given parity, after completing the boundary half blocks. Empty if the
// parity does not give at least two full level-(n+1) blocks.
std::optional<Word> regroup(const Word& c, std::size_t parity) {
	const Word body = c.substr(parity);
	const std::size_t pairs = body.size() / 2;
	if (pairs < 2)
		return std::nullopt;
	Word up;
	if (parity == 1)
		up += flip_letter(c[0]);
	for (std::size_t i = 0; i < pairs; ++i) {
		if (body[2 * i] == body[2 * i + 1])
			return std::nullopt;
		up.push_back(body[2 * i]);
	}
	if (body.size() % 2 == 1)
		up.push_back(body.back());
	return up;
}

std::map<Word, K0Element> build_class_table() {
	std::vector<Word> words;
	std::map<Word, std::size_t> index;
	for (std::size_t len = 2; len <= 6; ++len)
		for (const Word& w : factors_of_length(len)) {
			index.emplace(w, words.size());
			words.push_back(w);
		}
	const std::size_t unknowns = 2 * words.size();
	auto var = [&](const Word& w, int comp) {
		auto it = index.find(w);
		if (it == index.end())
			throw ConsistencyError("block word outside the class table: " + w.str());
		return 2 * it->second + static_cast<std::size_t>(comp);
	};

	detail::RationalMatrix a;
	std::vector<Rational> b;
	auto equation = [&](std::vector<std::pair<std::size_t, Rational>> terms, Rational rhs) {
		std::vector<Rational> row(unknowns, Rational(0));
		for (auto& [v, k] : terms)
			row[v] += k;
		a.push_back(std::move(row));
		b.push_back(std::move(rhs));
	};

	// Unknowns are coordinates at relative level 2: a_0 = (2, 2), b_0 = (1, 3).
	for (const Word& c : words) {
		if (c.size() == 3) {
			K0Element g = promote_to(three_block_generator(c), 2);
			equation({{var(c, 0), 1}}, g.x);
			equation({{var(c, 1), 1}}, g.y);
		}
		if (c.size() <= 5) {
			// Left extension splits the range set; right extension is the K0 relation.
			for (int side = 0; side < 2; ++side)
				for (int comp = 0; comp < 2; ++comp) {
					std::vector<std::pair<std::size_t, Rational>> terms{{var(c, comp), 1}};
					for (int d : {0, 1}) {
						Word ext = side == 0 ? letter(d) + c : c + letter(d);
						if (is_factor(ext))
							terms.emplace_back(var(ext, comp), -1);
					}
					equation(std::move(terms), 0);
				}
		}
		// Regrouping one level up: t_c = demote(t_up), demote(x, y) = ((y - x)/2, x).
		for (std::size_t parity = 0; parity < 2; ++parity) {
			auto up = regroup(c, parity);
			if (!up)
				continue;
			equation({{var(c, 0), 1}, {var(*up, 1), Rational(-1, 2)}, {var(*up, 0), Rational(1, 2)}}, 0);
			equation({{var(c, 1), 1}, {var(*up, 0), -1}}, 0);
		}
	}

	std::vector<Rational> sol = detail::solve_unique(std::move(a), std::move(b), unknowns);
	std::map<Word, K0Element> table;
	for (std::size_t i = 0; i < words.size(); ++i) {
		const Rational& x = sol[2 * i];
		const Rational& y = sol[2 * i + 1];
		if (boost::multiprecision::denominator(x) != 1 || boost::multiprecision::denominator(y) != 1)
			throw ConsistencyError("non-integral class for block word " + words[i].str());
		table.emplace(words[i], K0Element{2, static_cast<std::int64_t>(boost::multiprecision::numerator(x)),
		                                  static_cast<std::int64_t>(boost::multiprecision::numerator(y))});
	}
	return table;
}

K0Element at_level(K0Element relative, unsigned n) {
	relative.level += n;
	return relative;
}

} // namespace

const std::map<Word, K0Element>& block_word_class_table() {
	static const std::map<Word, K0Element> table = build_class_table();
	return table;
}

K0Element reduce_class(const Word& w) {
	if (w.empty() || !is_factor(w))
		throw DomainError("not a factor: " + w.str());
	if (w.size() <= 2) {
		K0Element sum;
		for (int a : {0, 1})
			if (Word v = letter(a) + w; is_factor(v))
				sum = k0_add(sum, reduce_class(v));
		return sum;
	}

	const unsigned n = choose_level(w);
	const Word c = complete_boundaries(decompose(w, n)).blocks;
	if (c.size() == 3)
		return normal_form(at_level(three_block_generator(c), n));
	if (c.size() == 2) {
		// The next full block is forced to be one of the right extensions.
		K0Element sum;
		for (int d : {0, 1})
			if (Word v = c + letter(d); is_factor(v))
				sum = k0_add(sum, at_level(three_block_generator(v), n));
		return sum;
	}
	const auto& table = block_word_class_table();
	auto it = table.find(c);
	if (it == table.end())
		throw ConsistencyError("completed block word out of range: " + c.str());
	return normal_form(at_level(it->second, n));
}

void FormalCombination::add(const Word& w, std::int64_t coeff) {
	if (w.empty() || !is_factor(w))
		throw DomainError("formal combination term is not a factor: " + w.str());
	std::int64_t& slot = terms_[w];
	slot = checked_add(slot, coeff);
	if (slot == 0)
		terms_.erase(w);
}

std::int64_t FormalCombination::coefficient(const Word& w) const {
	auto it = terms_.find(w);
	return it == terms_.end() ? 0 : it->second;
}

FormalCombination apply_i_minus_phi(const FormalCombination& c) {
	FormalCombination out;
	for (const auto& [w, k] : c.terms()) {
		if (w.empty() || !is_factor(w))
			throw DomainError("not a factor: " + w.str());
		out.add(w, k);
		for (int a : {0, 1})
			if (Word v = w + letter(a); is_factor(v))
				out.add(v, -k);
	}
	return out;
}

K0Element class_of(const FormalCombination& c) {
	K0Element sum;
	for (const auto& [w, k] : c.terms())
		sum = k0_add(sum, k0_scale(reduce_class(w), k));
	return sum;
}

} // namespace tmtrace
