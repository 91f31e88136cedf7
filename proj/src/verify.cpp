#include "tmtrace/verify.hpp"

#include <bit>
#include <exception>
#include <functional>
#include <optional>

#include "tmtrace/af_core.hpp"
#include "tmtrace/block_parse.hpp"
#include "tmtrace/errors.hpp"
#include "tmtrace/extension.hpp"
#include "tmtrace/k_theory.hpp"
#include "tmtrace/rational.hpp"
#include "tmtrace/rep_window.hpp"
#include "tmtrace/trace.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace {

bool VerifyReport::all_passed() const {
	for (const CheckResult& c : checks)
		if (!c.passed)
			return false;
	return true;
}

namespace {

const Rational kTolerance(1, 100);

struct Sizes {
	std::size_t trace_len;
	std::size_t extension_len;
	std::size_t decompose_len;
	std::size_t k0_len;
	unsigned af_k;
	std::int64_t freq_n;
	std::size_t freq_len;
	std::int64_t axiom_w;
	std::size_t axiom_len;
	std::int64_t window_w;
	std::size_t window_len;
	std::int64_t overlap_scan;
};

constexpr Sizes kQuick{10, 10, 24, 8, 5, std::int64_t{1} << 16, 5, std::int64_t{1} << 10, 4, std::int64_t{1} << 14, 4, 512};
constexpr Sizes kFull{16, 14, 48, 12, 8, std::int64_t{1} << 22, 8, std::int64_t{1} << 14, 8, std::int64_t{1} << 16, 6, 4096};

// nullopt on success, else a description of the failure.
using Check = std::function<std::optional<std::string>()>;

std::optional<std::string> check_trace_values() {
	const std::pair<const char*, Rational> known[] = {
	    {"00", Rational(1, 6)}, {"11", Rational(1, 6)}, {"01", Rational(1, 3)}, {"10", Rational(1, 3)},
	    {"0", Rational(1, 2)},  {"1", Rational(1, 2)},
	};
	for (const auto& [w, v] : known)
		if (trace_range(Word(w)) != v)
			return std::string("trace(") + w + ") = " + to_string(trace_range(Word(w)));
	for (const Word& w : factors_of_length(3))
		if (trace_range(w) != Rational(1, 6))
			return "trace(" + w.str() + ") != 1/6";
	if (trace_range(tm_slice({10, 32})) != Rational(1, 48))
		return std::string("trace(omega_[10,32)) != 1/48");
	return std::nullopt;
}

std::optional<std::string> check_trace_state(std::size_t max_len) {
	for (std::size_t L = 1; L <= max_len; ++L) {
		Rational total = 0;
		for (const Word& w : factors_of_length(L)) {
			const Rational t = trace_range(w);
			total += t;
			if (t <= 0)
				return "nonpositive trace at " + w.str();
			if (trace_range(reverse(w)) != t || trace_range(complement(w)) != t)
				return "symmetry fails at " + w.str();
			Rational left = 0, right = 0;
			for (const Word& u : extension_set(w, 1, 0))
				left += trace_range(u);
			for (const Word& u : extension_set(w, 0, 1))
				right += trace_range(u);
			if (left != t || right != t)
				return "additivity fails at " + w.str();
		}
		if (total != 1)
			return "traces at length " + std::to_string(L) + " sum to " + to_string(total);
	}
	return std::nullopt;
}

std::optional<std::string> check_block_traces() {
	for (unsigned n = 0; n <= 8; ++n)
		for (int i : {0, 1})
			for (int j : {0, 1})
				if (trace_range(block(i, n) + block(j, n)) != block_trace(i, j, n))
					return "block trace mismatch at n = " + std::to_string(n);
	return std::nullopt;
}

std::optional<std::string> check_uniqueness() {
	const Rational sixth(1, 6);
	std::optional<OpenInterval> prev;
	for (unsigned N = 1; N <= 30; ++N) {
		const OpenInterval I = uniqueness_interval(N);
		if (!I.contains(sixth) || I.width() > pow_half(N))
			return "interval at N = " + std::to_string(N);
		if (prev && (I.lower < prev->lower || I.upper > prev->upper))
			return "intervals not nested at N = " + std::to_string(N);
		prev = I;
	}
	for (unsigned n = 0; n <= 30; ++n) {
		const BlockTraces b = matrix_iterate(sixth, n);
		if (b.equal != pow_half(n) / 6 || b.mixed != pow_half(n) / 3)
			return "matrix_iterate(1/6, " + std::to_string(n) + ")";
	}
	return std::nullopt;
}

std::optional<std::string> check_extensions(std::size_t max_len) {
	for (std::size_t L = 2; L <= max_len; ++L) {
		for (const Word& w : factors_of_length(L)) {
			const std::size_t c = classify_extension_count(w);
			if (c != 1 && c != 2 && c != 4)
				return "extension count " + std::to_string(c) + " at " + w.str();
			const bool is_block = std::has_single_bit(L) && (w == block(0, std::bit_width(L) - 1) || w == block(1, std::bit_width(L) - 1));
			if ((c == 4) != is_block)
				return "four-extension family mismatch at " + w.str();
		}
	}
	return std::nullopt;
}

std::optional<std::string> check_decomposition(std::size_t max_len) {
	for (std::size_t L = 2; L <= max_len; ++L) {
		for (const Word& w : factors_of_length(L)) {
			const unsigned n = choose_level(w);
			const BlockDecomposition d = decompose(w, n);
			if (recompose(d) != w || d.blocks.size() < 2 || d.blocks.size() > 4)
				return "decomposition of " + w.str();
			const BlockDecomposition c = complete_boundaries(d);
			const Word full = recompose(c);
			if (full.substr(left_completion_length(d), w.size()) != w || !is_factor(full))
				return "completion of " + w.str();
		}
	}
	return std::nullopt;
}

std::optional<std::string> check_overlap_free(std::int64_t scan) {
	const std::string s = tm_slice({-scan, scan}).str();
	// An overlap is x v x v x: a window of length 2p + 1 with period p.
	for (std::size_t i = 0; i < s.size(); ++i)
		for (std::size_t p = 1; i + 2 * p < s.size(); ++p) {
			std::size_t k = 0;
			while (k <= p && s[i + k] == s[i + k + p])
				++k;
			if (k > p)
				return "overlap at offset " + std::to_string(i) + " period " + std::to_string(p);
		}
	return std::nullopt;
}

std::optional<std::string> check_k0(std::size_t max_len) {
	for (std::size_t L = 1; L <= max_len; ++L)
		for (const Word& w : factors_of_length(L))
			if (evaluate(reduce_class(w)).value() != trace_range(w))
				return "K0 class of " + w.str() + " evaluates wrongly";
	for (unsigned n = 0; n <= 10; ++n) {
		if (!k0_equal(generator_a(n), k0_scale(generator_b(n + 1), 2)))
			return "a_n != 2 b_{n+1} at n = " + std::to_string(n);
		if (!k0_equal(generator_b(n), k0_add(generator_a(n + 1), generator_b(n + 1))))
			return "b_n != a_{n+1} + b_{n+1} at n = " + std::to_string(n);
	}
	if (!k0_equal(k0_add(reduce_class(Word("0")), reduce_class(Word("1"))), K0Element{0, 2, 4}))
		return std::string("order unit mismatch");
	const K0Element diff{0, 1, -1};
	if (evaluate(diff).value() != 0 || is_positive(diff) || is_positive(k0_neg(diff)))
		return std::string("a_0 - b_0 is ordered");
	return std::nullopt;
}

std::optional<std::string> check_af(unsigned max_k) {
	const std::size_t expected[] = {4, 10, 16};
	for (unsigned k = 1; k <= 3 && k <= max_k; ++k)
		if (af_level(k).dimension() != expected[k - 1])
			return "d_" + std::to_string(k) + " = " + std::to_string(af_level(k).dimension());
	for (unsigned k = 1; k <= max_k; ++k)
		if (inclusion_matrix(k).transpose_apply(trace_vector(k + 1)) != trace_vector(k))
			return "trace vectors incompatible at k = " + std::to_string(k);
	return std::nullopt;
}

std::optional<std::string> check_frequency(std::int64_t N, std::size_t max_len) {
	for (std::size_t L = 1; L <= max_len; ++L)
		for (const Word& w : factors_of_length(L))
			if (abs(trace_range(w) - frequency(w, N)) > kTolerance)
				return "frequency of " + w.str() + " far from trace";
	return std::nullopt;
}

std::optional<std::string> check_axioms(std::int64_t W, std::size_t maxlen) {
	const AxiomResiduals r = axiom_residuals(W, maxlen);
	if (r.max() != 0)
		return "nonzero residual " + std::to_string(r.max());
	return std::nullopt;
}

std::optional<std::string> check_window_trace(std::int64_t W, std::size_t max_len) {
	for (std::size_t L = 1; L <= max_len; ++L)
		for (const Word& w : factors_of_length(L))
			if (abs(empirical_trace(w, W) - trace_range(w)) > kTolerance)
				return "window trace of " + w.str() + " far from trace";
	return std::nullopt;
}

} // namespace

VerifyReport run_verification(VerifyProfile profile) {
	const Sizes& s = profile == VerifyProfile::Full ? kFull : kQuick;
	const std::vector<std::pair<std::string, Check>> checks = {
	    {"trace_values", check_trace_values},
	    {"trace_state", [&] { return check_trace_state(s.trace_len); }},
	    {"block_traces", check_block_traces},
	    {"uniqueness_interval", check_uniqueness},
	    {"extension_classification", [&] { return check_extensions(s.extension_len); }},
	    {"block_decomposition", [&] { return check_decomposition(s.decompose_len); }},
	    {"overlap_free", [&] { return check_overlap_free(s.overlap_scan); }},
	    {"k0_soundness", [&] { return check_k0(s.k0_len); }},
	    {"af_trace_vectors", [&] { return check_af(s.af_k); }},
	    {"frequency", [&] { return check_frequency(s.freq_n, s.freq_len); }},
	    {"rep_axioms", [&] { return check_axioms(s.axiom_w, s.axiom_len); }},
	    {"window_trace", [&] { return check_window_trace(s.window_w, s.window_len); }},
	};
	VerifyReport report;
	for (const auto& [name, run] : checks) {
		CheckResult result{name, false, ""};
		try {
			const auto failure = run();
			result.passed = !failure;
			result.detail = failure.value_or("ok");
		} catch (const std::exception& e) {
			result.detail = std::string("exception: ") + e.what();
		}
		report.checks.push_back(std::move(result));
	}
	return report;
}

} // namespace tmtrace
