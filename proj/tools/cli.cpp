#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <CLI11.hpp>

#include "tmtrace/af_core.hpp"
#include "tmtrace/block_parse.hpp"
#include "tmtrace/errors.hpp"
#include "tmtrace/extension.hpp"
#include "tmtrace/k_theory.hpp"
#include "tmtrace/rational.hpp"
#include "tmtrace/rep_window.hpp"
#include "tmtrace/serialize.hpp"
#include "tmtrace/trace.hpp"
#include "tmtrace/verify.hpp"
#include "tmtrace/word.hpp"

namespace tmtrace::cli {

namespace {

const CLI::Validator kBits(
    [](std::string& s) -> std::string {
	    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; }))
		    return "word must be a nonempty string of 0 and 1";
	    return {};
    },
    "BITS");

const CLI::Validator kRational(
    [](std::string& s) -> std::string {
	    try {
		    parse_rational(s);
	    } catch (const DomainError&) {
		    return "expected a rational p/q";
	    }
	    return {};
    },
    "P/Q");

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Thue-Morse trace and K-theory toolkit", "tmtrace"};
	app.require_subcommand(1);

	// Each subcommand stores its action here; it runs after parsing succeeds.
	std::function<Json()> action;
	std::function<void()> raw_action;
	bool verify_failed = false;

	std::string word;
	std::vector<std::string> words;
	std::int64_t lo = 0, hi = 0, n_index = 0;
	std::size_t length = 0, left = 0, right = 0, maxlen = 8;
	unsigned level = 0, k_max = 4, steps = 0;
	std::optional<unsigned> level_opt;
	bool complete = false, dot = false, quick = false, full = false;
	std::int64_t a = 0, b = 0, half_width = std::int64_t{1} << 14;
	std::string t_text = "1/6";

	auto* slice = app.add_subcommand("slice", "omega on the half-open range [lo, hi)");
	slice->add_option("lo", lo)->required()->allow_extra_args(false);
	slice->add_option("hi", hi)->required();
	slice->callback([&] { action = [&] { return Json{{"word", tm_slice({lo, hi}).str()}}; }; });

	auto* factor = app.add_subcommand("factor", "membership in the factor language");
	factor->add_option("word", word)->required()->check(kBits);
	factor->callback([&] { action = [&] { return Json{{"is_factor", is_factor(Word(word))}}; }; });

	auto* factors = app.add_subcommand("factors", "all factors of a given length");
	factors->add_option("length", length)->required()->check(CLI::Range(1, 64));
	factors->callback([&] {
		action = [&] {
			const auto set = factors_of_length(length);
			return Json{{"length", length}, {"count", set.size()}, {"factors", to_json_value(set)}};
		};
	});

	auto* dec = app.add_subcommand("decompose", "block decomposition (maximal level by default)");
	dec->add_option("word", word)->required()->check(kBits);
	dec->add_option("--level", level_opt, "decompose at this level");
	dec->add_flag("--complete", complete, "extend the partial blocks to full ones");
	dec->callback([&] {
		action = [&] {
			const Word w(word);
			BlockDecomposition d = decompose(w, level_opt ? *level_opt : choose_level(w));
			if (complete)
				d = complete_boundaries(d);
			return to_json_value(d);
		};
	});

	auto* ext = app.add_subcommand("extensions", "the set A^m w A^n");
	ext->add_option("word", word)->required()->check(kBits);
	ext->add_option("-m,--left", left, "letters added on the left")->capture_default_str();
	ext->add_option("-n,--right", right, "letters added on the right")->capture_default_str();
	ext->callback([&] {
		action = [&] {
			const auto set = extension_set(Word(word), left, right);
			return Json{{"count", set.size()}, {"extensions", to_json_value(set)}};
		};
	});

	auto* tr = app.add_subcommand("trace", "trace of a range projection, or of a disjoint family");
	tr->add_option("words", words)->required()->check(kBits);
	tr->callback([&] {
		action = [&] {
			if (words.size() == 1)
				return Json{{"value", to_string(trace_range(Word(words.front())))}};
			std::set<Word> family;
			for (const auto& s : words)
				family.insert(Word(s));
			return Json{{"value", to_string(trace_family(RangeFamily(std::move(family))))}};
		};
	});

	auto* freq = app.add_subcommand("freq", "occurrence frequency in omega_[0, N)");
	freq->add_option("word", word)->required()->check(kBits);
	freq->add_option("-N,--length", n_index, "prefix length")->default_val(std::int64_t{1} << 20);
	freq->callback([&] {
		action = [&] {
			const Word w(word);
			const Rational f = frequency(w, n_index);
			return Json{{"frequency", to_string(f)}, {"approx", static_cast<double>(f)}};
		};
	});

	auto* mat = app.add_subcommand("matrix", "block traces of a candidate state, and the uniqueness interval");
	mat->add_option("-t,--t", t_text, "value at 00")->check(kRational)->capture_default_str();
	mat->add_option("-n,--level", steps, "level n")->capture_default_str();
	mat->callback([&] {
		action = [&] {
			const BlockTraces bt = matrix_iterate(parse_rational(t_text), steps);
			Json j{{"equal", to_string(bt.equal)}, {"mixed", to_string(bt.mixed)}};
			if (steps >= 1) {
				const OpenInterval I = uniqueness_interval(steps);
				j["interval"] = {{"lower", to_string(I.lower)}, {"upper", to_string(I.upper)}};
			}
			return j;
		};
	});

	auto* brat = app.add_subcommand("bratteli", "Bratteli diagram of the AF core");
	brat->add_option("-k,--k-max", k_max, "deepest level")->check(CLI::Range(1u, kDefaultMaxAfLevel))->capture_default_str();
	brat->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");
	brat->callback([&] {
		if (dot)
			raw_action = [&] { out << bratteli_dot(k_max); };
		else
			action = [&] { return bratteli_json(k_max); };
	});

	auto* k0r = app.add_subcommand("k0-reduce", "K0 class of a range projection");
	k0r->add_option("word", word)->required()->check(kBits);
	k0r->callback([&] { action = [&] { return to_json_value(reduce_class(Word(word))); }; });

	auto* k0e = app.add_subcommand("k0-eval", "trace of x a_n + y b_n");
	k0e->add_option("--a", a, "coefficient of a_n")->required();
	k0e->add_option("--b", b, "coefficient of b_n")->required();
	k0e->add_option("--level", level, "level n")->capture_default_str();
	k0e->callback([&] {
		action = [&] {
			const K0Element e{level, a, b};
			return Json{{"value", to_json_value(evaluate(e))}};
		};
	});

	auto* rep = app.add_subcommand("rep-check", "representation relations on a finite window");
	rep->add_option("-W,--half-width", half_width, "window half-width")->capture_default_str();
	rep->add_option("--maxlen", maxlen, "longest factor checked")->capture_default_str();
	rep->add_option("--word", word, "report the window trace of this word instead")->check(kBits);
	rep->callback([&] {
		action = [&] {
			if (!word.empty()) {
				const Word w(word);
				return Json{{"empirical_trace", to_string(empirical_trace(w, half_width))},
				            {"trace", to_string(trace_range(w))}};
			}
			return to_json_value(axiom_residuals(half_width, maxlen));
		};
	});

	auto* ver = app.add_subcommand("verify", "run the invariant suite");
	auto* quick_flag = ver->add_flag("--quick", quick, "small sizes (default)");
	ver->add_flag("--full", full, "full sizes")->excludes(quick_flag);
	ver->callback([&] {
		action = [&] {
			const VerifyReport report = run_verification(full ? VerifyProfile::Full : VerifyProfile::Quick);
			Json checks = Json::array();
			for (const CheckResult& c : report.checks)
				checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
			verify_failed = !report.all_passed();
			return Json{{"profile", full ? "full" : "quick"}, {"passed", !verify_failed}, {"checks", std::move(checks)}};
		};
	});

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(std::move(reversed));
	} catch (const CLI::CallForHelp& e) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::CallForAllHelp& e) {
		out << app.help("", CLI::AppFormatMode::All);
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n" << "run with --help for usage\n";
		return kExitUsage;
	}

	try {
		if (raw_action) {
			raw_action();
			return kExitOk;
		}
		out << dump_line(action()) << "\n";
	} catch (const std::exception& e) {
		out << dump_line(Json{{"error", e.what()}}) << "\n";
		return kExitFailure;
	}
	return verify_failed ? kExitFailure : kExitOk;
}

} // namespace tmtrace::cli
