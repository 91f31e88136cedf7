#pragma once

// Thue-Morse sequence and exact factor-language primitives.
//
// The two-sided sequence is indexed by all integers; for i >= 0, omega_i is
// the parity of the binary digit sum of i, and omega_{-i} = omega_{i-1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tmtrace {

/// A finite word over {0, 1}, stored as ASCII '0'/'1'.
class Word {
public:
	Word() = default;

	/// Throws DomainError if `bits` contains anything but '0' or '1'.
	explicit Word(std::string_view bits);

	static Word from_bits(const std::vector<int>& bits);

	std::size_t size() const noexcept { return bits_.size(); }
	bool empty() const noexcept { return bits_.empty(); }

	int operator[](std::size_t i) const { return bits_[i] - '0'; }
	int front() const { return bits_.front() - '0'; }
	int back() const { return bits_.back() - '0'; }

	const std::string& str() const noexcept { return bits_; }
	std::string_view view() const noexcept { return bits_; }

	Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
	bool starts_with(const Word& w) const noexcept { return view().starts_with(w.view()); }
	bool ends_with(const Word& w) const noexcept { return view().ends_with(w.view()); }

	void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
	Word& operator+=(const Word& w) { bits_ += w.bits_; return *this; }
	friend Word operator+(Word a, const Word& b) { a += b; return a; }

	friend bool operator==(const Word&, const Word&) = default;
	friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.bits_ <=> b.bits_; }

private:
	struct Unchecked {};
	Word(std::string bits, Unchecked) : bits_(std::move(bits)) {}
	friend Word word_unchecked(std::string bits);

	std::string bits_;
};

/// Builds a word from a string already known to hold only '0'/'1'.
Word word_unchecked(std::string bits);

/// Single letter word.
inline Word letter(int bit) { return word_unchecked(bit ? "1" : "0"); }

/// Half-open interval [lo, hi) of two-sided indices.
struct IndexRange {
	std::int64_t lo = 0;
	std::int64_t hi = 0;

	std::int64_t length() const noexcept { return hi - lo; }
};

inline constexpr std::int64_t kDefaultMaxSlice = std::int64_t{1} << 26;
inline constexpr unsigned kDefaultMaxBlockLevel = 30;
inline constexpr std::size_t kDefaultMaxFactorLength = 64;

int tm_letter(std::int64_t i) noexcept;

/// Throws ResourceError when the range exceeds `max_length`, DomainError when hi < lo.
Word tm_slice(IndexRange r, std::int64_t max_length = kDefaultMaxSlice);

/// i^(n): the image of letter i under n applications of 0 -> 01, 1 -> 10.
Word block(int i, unsigned n, unsigned max_level = kDefaultMaxBlockLevel);

/// |c| copies of b or its complement, the j-th being b iff c_j = 0.
Word keane_product(const Word& b, const Word& c);

enum class Transform { Reverse, Complement };

Word transform(const Word& w, Transform kind);
inline Word reverse(const Word& w) { return transform(w, Transform::Reverse); }
inline Word complement(const Word& w) { return transform(w, Transform::Complement); }

/// Membership in the factor language of the Thue-Morse sequence.
/// Exact for every length: short words are looked up, longer ones are
/// de-substituted to their unique parent under each of the two phases.
bool is_factor(const Word& w);
bool is_factor(std::string_view bits);

/// All factors of length L, sorted.
std::set<Word> factors_of_length(std::size_t L, std::size_t max_length = kDefaultMaxFactorLength);

/// Start indices of `w` inside the range, ascending.
std::vector<std::int64_t> occurrences(const Word& w, IndexRange r, std::int64_t max_length = kDefaultMaxSlice);

} // namespace tmtrace

template <>
struct std::hash<tmtrace::Word> {
	std::size_t operator()(const tmtrace::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
