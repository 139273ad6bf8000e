#pragma once

// The zphi command line. run() takes the argument vector and output streams
// so tests can drive it in-process.
//
// Exit codes: 0 success / true / pass, 1 false / empty / counterexample,
// 2 usage or runtime error.

#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zphi/zphi.hpp"

namespace zphi::cli {

enum class OutputMode { human, json, csv };

namespace detail {

struct Printer {
    std::ostream& out;
    OutputMode mode;

    // One scalar result; `value` is either a decimal integer or a word.
    void scalar(const std::string& command, const std::string& value, bool numeric) const {
        switch (mode) {
            case OutputMode::human: out << value << '\n'; break;
            case OutputMode::json:
                out << "{\"command\":" << nlohmann::json(command).dump()
                    << ",\"result\":" << (numeric ? value : nlohmann::json(value).dump()) << "}\n";
                break;
            case OutputMode::csv: out << "result\n" << value << '\n'; break;
        }
    }

    void list(const std::string& command, const std::vector<std::string>& values) const {
        switch (mode) {
            case OutputMode::human:
                for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
                out << '\n';
                break;
            case OutputMode::json: {
                out << "{\"command\":" << nlohmann::json(command).dump() << ",\"result\":[";
                for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
                out << "]}\n";
                break;
            }
            case OutputMode::csv:
                out << "index,result\n";
                for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
                break;
        }
    }
};

inline const char* ordering_symbol(std::strong_ordering o) {
    return o < 0 ? "<" : (o > 0 ? ">" : "=");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic over the integers with f(x) = floor(phi x)", "zphi"};
    app.require_subcommand(1);
    std::string output = "human";
    app.add_option("-o,--output", output, "Output mode")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    std::vector<std::string> operands;
    int exit_code = 0;
    std::function<void(const detail::Printer&)> action;

    auto arg = [&](std::size_t i) { return parse_int(operands.at(i)); };
    auto unary_command = [&](const std::string& name, const std::string& help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("N", operands, "integer")->required()->expected(1);
        sub->callback([&, fn, name] {
            action = [&, fn, name](const detail::Printer& p) { p.scalar(name, to_string(fn(arg(0))), true); };
        });
        return sub;
    };

    unary_command("f", "floor(phi N)", [](const Int& n) { return beatty_f(n); });
    unary_command("fbar", "N + f(N)", [](const Int& n) { return fbar(n); });
    unary_command("fibfloor", "largest even-index Fibonacci number <= N", [](const Int& n) { return fibfloor(n); });
    unary_command("g", "largest odd-index Fibonacci number <= N", [](const Int& n) { return g_func(n); });

    bool inverse_of_bar = false;
    auto* finv = app.add_subcommand("finv", "the x with f(x) = N, if any");
    finv->add_option("N", operands, "integer")->required()->expected(1);
    finv->add_flag("--bar", inverse_of_bar, "invert fbar instead of f");
    finv->callback([&] {
        action = [&](const detail::Printer& p) {
            const Int y = arg(0);
            const auto x = inverse_of_bar ? fbar_inverse(y) : f_inverse(y);
            if (x) {
                p.scalar("finv", to_string(*x), true);
            } else {
                p.scalar("finv", "none", false);
                exit_code = 1;
            }
        };
    });

    bool compare_frac = false;
    auto* cmp = app.add_subcommand("cmp", "compare X and Y numerically, or their fractional parts");
    cmp->add_option("XY", operands, "integers")->required()->expected(2);
    cmp->add_flag("--frac", compare_frac, "compare {phi X} with {phi Y}");
    cmp->callback([&] {
        action = [&](const detail::Printer& p) {
            const Int x = arg(0), y = arg(1);
            const auto o = compare_frac ? frac_compare(x, y) : (x < y ? std::strong_ordering::less : (y < x ? std::strong_ordering::greater : std::strong_ordering::equal));
            p.scalar("cmp", detail::ordering_symbol(o), false);
        };
    });

    auto* zeck = app.add_subcommand("zeckendorf", "Fibonacci indices of the Zeckendorf representation");
    zeck->add_option("N", operands, "integer")->required()->expected(1);
    zeck->callback([&] {
        action = [&](const detail::Printer& p) {
            std::vector<std::string> indices;
            for (auto i : zeckendorf(arg(0))) indices.push_back(std::to_string(i));
            p.list("zeckendorf", indices);
        };
    });

    auto* witness = app.add_subcommand("witness", "w with {phi X} < {phi w} < {phi Y}");
    witness->add_option("XY", operands, "integers")->required()->expected(2);
    witness->callback([&] {
        action = [&](const detail::Printer& p) { p.scalar("witness", to_string(kronecker_witness(arg(0), arg(1))), true); };
    });

    auto* refine_cmd = app.add_subcommand("refine", "K iterated witnesses approaching {phi X}");
    refine_cmd->add_option("XYK", operands, "integers")->required()->expected(3);
    refine_cmd->callback([&] {
        action = [&](const detail::Printer& p) {
            const Int k = arg(2);
            if (k < 1 || k > 100000) throw DomainError("refine: K must lie in [1, 100000]");
            std::vector<std::string> chain;
            for (const auto& w : refine(arg(0), arg(1), static_cast<std::size_t>(k))) chain.push_back(to_string(w));
            p.list("refine", chain);
        };
    });

    bool want_min = false, want_max = false;
    std::optional<std::string> above, below;
    auto* extrema = app.add_subcommand("extrema", "point of least/greatest fractional part in (LO, HI)");
    auto* min_flag = extrema->add_flag("--min", want_min, "least fractional part");
    auto* max_flag = extrema->add_flag("--max", want_max, "greatest fractional part");
    min_flag->excludes(max_flag);
    extrema->add_option("BOUNDS", operands, "open interval bounds")->required()->expected(2);
    extrema->add_option("--above", above, "only points with fractional part above that of C");
    extrema->add_option("--below", below, "only points with fractional part below that of D");
    extrema->callback([&] {
        if (!want_min && !want_max) throw CLI::ValidationError("extrema", "one of --min or --max is required");
        action = [&](const detail::Printer& p) {
            const Interval<Int> iv{arg(0), arg(1)};
            const std::optional<Int> c = above ? std::optional<Int>(parse_int(*above)) : std::nullopt;
            const std::optional<Int> d = below ? std::optional<Int>(parse_int(*below)) : std::nullopt;
            std::optional<Int> point;
            if (want_min) {
                point = c ? constrained_min(iv, *c) : std::optional<Int>(arg_min_frac(iv));
                if (point && d && frac_compare(*point, *d) >= 0) point.reset();
            } else {
                point = d ? constrained_max(iv, *d) : std::optional<Int>(arg_max_frac(iv));
                if (point && c && frac_compare(*point, *c) <= 0) point.reset();
            }
            if (point) {
                p.scalar("extrema", to_string(*point), true);
            } else {
                p.scalar("extrema", "none", false);
                exit_code = 1;
            }
        };
    });

    std::string formula_text;
    auto* decide_cmd = app.add_subcommand("decide", "truth value of a bounded sentence");
    decide_cmd->add_option("FORMULA", formula_text, "sentence")->required();
    decide_cmd->callback([&] {
        action = [&](const detail::Printer& p) {
            const bool truth = formula::decide(*formula::parse(formula_text));
            p.scalar("decide", truth ? "true" : "false", false);
            exit_code = truth ? 0 : 1;
        };
    });

    std::vector<std::string> bindings;
    auto* eval_cmd = app.add_subcommand("eval", "truth value of a formula under variable bindings");
    eval_cmd->add_option("FORMULA", formula_text, "formula")->required();
    eval_cmd->add_option("--bind", bindings, "NAME=VALUE")->allow_extra_args(false);
    eval_cmd->callback([&] {
        action = [&](const detail::Printer& p) {
            formula::Env env;
            formula::ParseOptions options;
            for (const auto& b : bindings) {
                const auto eq = b.find('=');
                if (eq == std::string::npos || eq == 0) throw DomainError("malformed binding '" + b + "'");
                const std::string name = b.substr(0, eq);
                env[name] = parse_int(b.substr(eq + 1));
                options.free_variables.insert(name);
            }
            const bool truth = formula::eval(*formula::parse(formula_text, options), env);
            p.scalar("eval", truth ? "true" : "false", false);
            exit_code = truth ? 0 : 1;
        };
    });

    check::CheckSpec spec;
    bool as_printed = false;
    auto* check_cmd = app.add_subcommand("check", "run the verification suites");
    check_cmd->add_option("--bound", spec.exhaustive_bound, "exhaustive bound")->check(CLI::Range(0, 100000));
    check_cmd->add_option("--random", spec.random_trials, "random trials per property");
    check_cmd->add_option("--seed", spec.seed, "random seed");
    check_cmd->add_option("--witness-bound", spec.witness_bound, "pair range of the witness sweep")
        ->check(CLI::Range(0, 100000));
    check_cmd->add_option("--interval-bound", spec.interval_bound, "range of the constrained-extrema sweep")
        ->check(CLI::Range(0, 100000));
    check_cmd->add_option("--constant-bound", spec.constant_bound, "|c|, |d| range of constrained extrema")
        ->check(CLI::Range(0, 100000));
    check_cmd->add_flag("--paper-literal", as_printed, "also check the forms as first published (expected to fail)");
    check_cmd->callback([&] {
        action = [&](const detail::Printer& p) {
            const auto reports = check::check_all(spec, as_printed);
            for (const auto& r : reports) {
                switch (p.mode) {
                    case OutputMode::json: p.out << check::to_json(r) << '\n'; break;
                    case OutputMode::csv:
                        if (&r == &reports.front()) p.out << "name,instances,counterexamples,pass\n";
                        p.out << r.name << ',' << r.instances << ',' << r.counterexamples.size() << ','
                              << (r.pass() ? "true" : "false") << '\n';
                        break;
                    case OutputMode::human:
                        p.out << (r.pass() ? "PASS " : "FAIL ") << r.name << "  instances=" << r.instances
                              << "  counterexamples=" << r.counterexamples.size() << '\n';
                        for (const auto& c : r.counterexamples) {
                            p.out << "    (";
                            for (std::size_t i = 0; i < c.size(); ++i) p.out << (i ? ", " : "") << c[i];
                            p.out << ")\n";
                        }
                        for (const auto& n : r.notes) p.out << "    note: " << n << '\n';
                        break;
                }
            }
            exit_code = check::all_pass(reports) ? 0 : 1;
        };
    });

    std::string from_text, to_text, plot_format;
    unsigned digits = 12;
    auto* plot = app.add_subcommand("plot", "points (n, f(n), {phi n}) for n in [A, B]");
    plot->add_option("--from", from_text, "first n")->required();
    plot->add_option("--to", to_text, "last n")->required();
    plot->add_option("--digits", digits, "decimal digits of the fractional part")->check(CLI::Range(0u, 1000u));
    plot->add_option("--format", plot_format, "csv or svg-points")
        ->required()
        ->check(CLI::IsMember({"csv", "svg-points"}));
    plot->callback([&] {
        action = [&](const detail::Printer& p) {
            const Int from = parse_int(from_text), to = parse_int(to_text);
            if (to - from > 10'000'000) throw DomainError("plot: range exceeds 10^7 points");
            write_plot(p.out, from, to, digits, plot_format == "csv" ? PlotFormat::csv : PlotFormat::svg_points);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "zphi: " << e.what() << '\n';
        return 2;
    }

    const OutputMode mode =
        output == "json" ? OutputMode::json : (output == "csv" ? OutputMode::csv : OutputMode::human);
    try {
        action(detail::Printer{out, mode});
    } catch (const formula::ParseError& e) {
        err << "zphi: syntax error at " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "zphi: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

}  // namespace zphi::cli
