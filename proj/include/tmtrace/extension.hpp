#pragma once

#include <cstddef>
#include <set>

#include "tmtrace/word.hpp"

namespace tmtrace {

inline constexpr std::size_t kDefaultMaxExtensionLength = 4096;

/// A^m w A^n: every factor u w v with |u| = m and |v| = n, in lexicographic order.
std::set<Word> extension_set(const Word& w, std::size_t m, std::size_t n,
                             std::size_t max_total = kDefaultMaxExtensionLength);

/// |A w A|. One of {1, 2, 4} for |w| >= 2; 3 for single letters.
std::size_t classify_extension_count(const Word& w);

} // namespace tmtrace
