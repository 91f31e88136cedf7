#pragma once

// Brute-force reference implementations for the tests. Everything here is
// derived from the substitution 0 -> 01, 1 -> 10 applied to a long prefix,
// independently of the popcount formula and the de-substitution routines
// used by the library.

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "tmtrace/rational.hpp"

namespace oracle {

inline constexpr std::size_t kPrefixLength = std::size_t{1} << 18;

inline std::string flip(std::string s) {
	for (char& c : s)
		c = c == '0' ? '1' : '0';
	return s;
}

inline const std::string& prefix() {
	static const std::string s = [] {
		std::string t = "0";
		while (t.size() < kPrefixLength)
			t += flip(t);
		return t;
	}();
	return s;
}

inline int letter(std::int64_t i) {
	const std::size_t k = i < 0 ? static_cast<std::size_t>(-i - 1) : static_cast<std::size_t>(i);
	return prefix().at(k) - '0';
}

inline std::string slice(std::int64_t lo, std::int64_t hi) {
	std::string out;
	for (std::int64_t i = lo; i < hi; ++i)
		out += static_cast<char>('0' + letter(i));
	return out;
}

/// i^(n) by n rounds of the substitution.
inline std::string block(int i, unsigned n) {
	std::string s(1, static_cast<char>('0' + i));
	for (unsigned k = 0; k < n; ++k) {
		std::string t;
		for (char c : s)
			t += c == '0' ? "01" : "10";
		s = t;
	}
	return s;
}

/// Factors of length L seen in the first 2^16 letters; the language is
/// closed under reversal, so the two-sided sequence adds nothing.
inline const std::set<std::string>& factors(std::size_t L) {
	static std::map<std::size_t, std::set<std::string>> cache;
	auto it = cache.find(L);
	if (it != cache.end())
		return it->second;
	std::set<std::string> out;
	const std::string_view s(prefix().data(), std::size_t{1} << 16);
	for (std::size_t i = 0; i + L <= s.size(); ++i)
		out.emplace(s.substr(i, L));
	return cache.emplace(L, std::move(out)).first->second;
}

inline bool is_factor(const std::string& w) { return factors(w.size()).contains(w); }

inline std::size_t count(const std::string& w, std::size_t n) {
	std::size_t c = 0;
	for (std::size_t i = 0; i + w.size() <= n; ++i)
		c += prefix().compare(i, w.size(), w) == 0;
	return c;
}

/// Exact trace from the observed frequency: traces are k / (3 2^m), and at
/// 2^18 letters the frequency error is far below half the grid spacing.
inline tmtrace::Rational trace(const std::string& w) {
	constexpr std::int64_t grid = 3 << 12;
	const std::size_t n = prefix().size();
	const double f = static_cast<double>(count(w, n)) / static_cast<double>(n - w.size() + 1);
	const auto k = static_cast<std::int64_t>(f * grid + 0.5);
	return tmtrace::Rational(k, grid);
}

} // namespace oracle
