#include "tmtrace/word.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "tmtrace/errors.hpp"

namespace tmtrace {

Word::Word(std::string_view bits) : bits_(bits) {
	for (char c : bits_)
		if (c != '0' && c != '1')
			throw DomainError("word may only contain '0' and '1': \"" + bits_ + "\"");
}

Word Word::from_bits(const std::vector<int>& bits) {
	std::string s;
	s.reserve(bits.size());
	for (int b : bits) {
		if (b != 0 && b != 1)
			throw DomainError("bit out of range");
		s.push_back(static_cast<char>('0' + b));
	}
	return Word(std::move(s), Unchecked{});
}

Word Word::substr(std::size_t pos, std::size_t len) const {
	return Word(bits_.substr(pos, len), Unchecked{});
}

Word word_unchecked(std::string bits) {
	return Word(std::move(bits), Word::Unchecked{});
}

int tm_letter(std::int64_t i) noexcept {
	auto n = static_cast<std::uint64_t>(i >= 0 ? i : -(i + 1));
	return std::popcount(n) & 1;
}

Word tm_slice(IndexRange r, std::int64_t max_length) {
	if (r.hi < r.lo)
		throw DomainError("index range with hi < lo");
	if (r.length() > max_length)
		throw ResourceError("slice of length " + std::to_string(r.length()) + " exceeds limit " + std::to_string(max_length));
	std::string s(static_cast<std::size_t>(r.length()), '0');
	for (std::int64_t i = r.lo; i < r.hi; ++i)
		s[static_cast<std::size_t>(i - r.lo)] = static_cast<char>('0' + tm_letter(i));
	return word_unchecked(std::move(s));
}

Word block(int i, unsigned n, unsigned max_level) {
	if (i != 0 && i != 1)
		throw DomainError("block letter must be 0 or 1");
	if (n > max_level)
		throw ResourceError("block level " + std::to_string(n) + " exceeds limit " + std::to_string(max_level));
	// 0^(n) is the length-2^n prefix of the one-sided sequence.
	std::string s(std::size_t{1} << n, '0');
	for (std::size_t j = 0; j < s.size(); ++j)
		s[j] = static_cast<char>('0' + ((std::popcount(j) + i) & 1));
	return word_unchecked(std::move(s));
}

Word keane_product(const Word& b, const Word& c) {
	if (b.empty() || c.empty())
		throw DomainError("keane product of an empty word");
	Word bbar = complement(b);
	std::string s;
	s.reserve(b.size() * c.size());
	for (std::size_t j = 0; j < c.size(); ++j)
		s += c[j] ? bbar.str() : b.str();
	return word_unchecked(std::move(s));
}

Word transform(const Word& w, Transform kind) {
	std::string s = w.str();
	switch (kind) {
	case Transform::Reverse:
		std::reverse(s.begin(), s.end());
		break;
	case Transform::Complement:
		for (char& c : s)
			c = c == '0' ? '1' : '0';
		break;
	}
	return word_unchecked(std::move(s));
}

namespace {

constexpr std::size_t kBaseLength = 8;
constexpr std::int64_t kBaseWindow = 1024;

// Every factor of length <= 8, read off a fixed prefix.
const std::unordered_set<std::string_view>& base_factors() {
	static const std::string prefix = tm_slice({0, kBaseWindow}).str();
	static const std::unordered_set<std::string_view> set = [] {
		std::unordered_set<std::string_view> s;
		std::string_view p = prefix;
		for (std::size_t len = 1; len <= kBaseLength; ++len)
			for (std::size_t i = 0; i + len <= p.size(); ++i)
				s.insert(p.substr(i, len));
		return s;
	}();
	return set;
}

char flip(char c) { return c == '0' ? '1' : '0'; }

// The Thue-Morse morphism maps a to a a-bar, so each aligned pair must be
// 01 or 10 and contributes its first letter to the parent. A dangling
// leading letter x is the tail of a parent letter x-bar; a dangling trailing
// letter x is the head of a parent letter x.
bool factor_rec(std::string_view w) {
	if (w.size() <= kBaseLength)
		return base_factors().contains(w);
	std::string parent;
	parent.reserve(w.size() / 2 + 2);
	for (std::size_t phase = 0; phase < 2; ++phase) {
		parent.clear();
		std::size_t i = 0;
		if (phase == 1) {
			parent.push_back(flip(w[0]));
			i = 1;
		}
		bool ok = true;
		for (; i + 1 < w.size(); i += 2) {
			if (w[i] == w[i + 1]) {
				ok = false;
				break;
			}
			parent.push_back(w[i]);
		}
		if (!ok)
			continue;
		if (i < w.size())
			parent.push_back(w[i]);
		if (factor_rec(parent))
			return true;
	}
	return false;
}

} // namespace

bool is_factor(std::string_view bits) {
	if (bits.empty())
		throw DomainError("is_factor of the empty word");
	return factor_rec(bits);
}

bool is_factor(const Word& w) { return is_factor(w.view()); }

std::set<Word> factors_of_length(std::size_t L, std::size_t max_length) {
	if (L == 0)
		throw DomainError("factor length must be positive");
	if (L > max_length)
		throw ResourceError("factor length " + std::to_string(L) + " exceeds limit " + std::to_string(max_length));
	auto window = static_cast<std::int64_t>(10 * L + 64);
	const std::string s = tm_slice({0, window}).str();
	std::set<Word> out;
	for (std::size_t i = 0; i + L <= s.size(); ++i)
		out.insert(word_unchecked(s.substr(i, L)));
	return out;
}

std::vector<std::int64_t> occurrences(const Word& w, IndexRange r, std::int64_t max_length) {
	if (w.empty())
		throw DomainError("occurrences of the empty word");
	std::vector<std::int64_t> out;
	if (r.length() < static_cast<std::int64_t>(w.size()))
		return out;
	const std::string s = tm_slice(r, max_length).str();
	for (auto pos = s.find(w.str()); pos != std::string::npos; pos = s.find(w.str(), pos + 1))
		out.push_back(r.lo + static_cast<std::int64_t>(pos));
	return out;
}

} // namespace tmtrace
