#include "tmtrace/rational.hpp"

#include <charconv>

#include "tmtrace/errors.hpp"

namespace tmtrace {

Rational pow_half(unsigned n) {
	BigInt den = 1;
	den <<= n;
	return Rational(BigInt(1), den);
}

std::string to_string(const Rational& q) {
	const BigInt& den = boost::multiprecision::denominator(q);
	std::string s = boost::multiprecision::numerator(q).str();
	if (den != 1)
		s += "/" + den.str();
	return s;
}

namespace {

BigInt parse_integer(std::string_view s) {
	std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
	if (i == s.size())
		throw DomainError("malformed rational: empty integer");
	for (std::size_t j = i; j < s.size(); ++j)
		if (s[j] < '0' || s[j] > '9')
			throw DomainError("malformed rational: \"" + std::string(s) + "\"");
	BigInt v(std::string(s.substr(i)));
	return s[0] == '-' ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text) {
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(text));
	BigInt num = parse_integer(text.substr(0, slash));
	BigInt den = parse_integer(text.substr(slash + 1));
	if (den == 0)
		throw DomainError("rational with zero denominator");
	return Rational(num, den);
}

} // namespace tmtrace
