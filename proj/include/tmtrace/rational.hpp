#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tmtrace {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// 1 / 2^n.
Rational pow_half(unsigned n);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p". Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

} // namespace tmtrace
