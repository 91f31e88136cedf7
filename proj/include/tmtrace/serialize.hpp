#pragma once

// JSON forms of the public types. Rationals are "p/q" strings, words are
// '0'/'1' strings, and sets of words are sorted arrays.

#include <set>

#include <json.hpp>

#include "tmtrace/block_parse.hpp"
#include "tmtrace/k_theory.hpp"
#include "tmtrace/rational.hpp"
#include "tmtrace/rep_window.hpp"
#include "tmtrace/trace.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace {

using Json = nlohmann::ordered_json;

Json to_json_value(const Word& w);
Json to_json_value(const Rational& q);
Json to_json_value(const DyadicThirdRational& q);
Json to_json_value(const BlockDecomposition& d);
Json to_json_value(const K0Element& e);
Json to_json_value(const std::set<Word>& words);
Json to_json_value(const RangeFamily& A);
Json to_json_value(const AxiomResiduals& r);
Json to_json_value(const BlockTraces& b);

/// {"levels": [{"k", "dimension", "basis"}], "matrices": [{"k", "rows"}]}
/// for levels 1..k_max.
Json bratteli_json(unsigned k_max);

/// Single-line dump; object keys keep insertion order so output is stable.
std::string dump_line(const Json& j);

} // namespace tmtrace
