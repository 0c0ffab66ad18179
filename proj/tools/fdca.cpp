#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdca/core.hpp"
#include "fdca/dynamics.hpp"
#include "fdca/export.hpp"
#include "fdca/reversibility.hpp"
#include "fdca/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // meaningful negative verdict
constexpr int kExitUsage = 2;

std::vector<std::int64_t> parse_states(const std::string& text) {
    std::vector<std::int64_t> states;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        states.push_back(std::stoll(tok));
    if (states.empty()) throw std::invalid_argument("empty configuration");
    return states;
}

std::string format_states(const fdca::Configuration& config) {
    std::string out;
    for (std::size_t i = 0; i < config.cells.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(config.cells[i]);
    }
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::uint32_t largest_feasible_n(std::int64_t d, std::uint64_t cap) {
    std::uint32_t n = 0;
    std::uint64_t size = 1;
    while (size <= cap / static_cast<std::uint64_t>(d)) {
        size *= static_cast<std::uint64_t>(d);
        ++n;
    }
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-state first-degree cellular automata under null boundary"};
    app.require_subcommand(1);

    std::string rule_text, config_text, out_path, format = "text";
    std::int64_t d = 0;
    std::uint32_t n = 0, n_min = 0, n_max = 0;
    std::uint64_t steps = 0, cap = fdca::kDefaultNodeCap;
    std::uint64_t seed = fdca::kDefaultSampleSeed;
    std::int64_t sample = -1;
    unsigned jobs = 1;
    bool count_only = false, highlight = false, digit_labels = false;

    auto* check = app.add_subcommand("check", "decide reversibility for all n from the coefficients");
    check->add_option("--rule", rule_text, "rule as d:c0,...,c7")->required();

    auto* step = app.add_subcommand("step", "apply one global step");
    step->add_option("--rule", rule_text)->required();
    step->add_option("--config", config_text, "comma-separated cell states")->required();

    auto* run = app.add_subcommand("run", "print a trajectory");
    run->add_option("--rule", rule_text)->required();
    run->add_option("--config", config_text)->required();
    run->add_option("--steps", steps)->required();

    auto* graph = app.add_subcommand("graph", "emit the transition graph as DOT");
    graph->add_option("--rule", rule_text)->required();
    graph->add_option("--n", n)->required();
    graph->add_option("--cap", cap);
    graph->add_option("--out", out_path);
    graph->add_flag("--highlight", highlight, "mark in-degree 0 and >= 2 nodes");
    graph->add_flag("--digits", digit_labels, "add base-d digit labels");

    auto* synth = app.add_subcommand("synthesize", "enumerate all reversible rules for d");
    synth->add_option("--d", d)->required();
    synth->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
    synth->add_option("--out", out_path);
    synth->add_flag("--count-only", count_only);

    auto* classify = app.add_subcommand("classify", "oracle evidence over an n-range");
    classify->add_option("--rule", rule_text)->required();
    classify->add_option("--n-min", n_min)->required();
    classify->add_option("--n-max", n_max)->required();
    classify->add_option("--cap", cap);

    auto* verify = app.add_subcommand("verify", "cross-validate the algebraic check against the oracle");
    verify->add_option("--d", d)->required();
    verify->add_option("--n-max", n_max);
    verify->add_option("--sample", sample, "tuple sample size (default: exhaustive for d <= 4)");
    verify->add_option("--seed", seed);
    verify->add_option("--cap", cap);
    verify->add_option("--jobs", jobs);
    verify->add_option("--out", out_path);

    auto* table = app.add_subcommand("table", "coefficient table of reversible domains for d");
    table->add_option("--d", d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) {
            const auto verdict = fdca::check_algebraic(fdca::parse_rule(rule_text));
            if (verdict.reversible) {
                std::cout << "reversible\n";
                return kExitOk;
            }
            std::cout << "not reversible for all n: " << verdict.describe() << "\n";
            return kExitNegative;
        }
        if (*step || *run) {
            const auto rule = fdca::parse_rule(rule_text);
            const fdca::Configuration config(rule.d, parse_states(config_text));
            if (*step) {
                std::cout << format_states(fdca::global_step(rule, config)) << "\n";
            } else {
                for (const auto& c : fdca::trajectory(rule, config, steps))
                    std::cout << format_states(c) << "\n";
            }
            return kExitOk;
        }
        if (*graph) {
            const auto rule = fdca::parse_rule(rule_text);
            const auto g = fdca::build_transition_graph(rule, n, cap);
            write_output(out_path, fdca::graph_to_dot(g, highlight, digit_labels));
            return kExitOk;
        }
        if (*synth) {
            const fdca::StateCount state_count(d);
            if (count_only) {
                std::cout << fdca::count_reversible(state_count) << "\n";
                return kExitOk;
            }
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!out_path.empty()) {
                file.open(out_path, std::ios::binary);
                if (!file) throw std::runtime_error("cannot open output file: " + out_path);
                out = &file;
            }
            if (format == "jsonl" ) {
                fdca::enumerate_reversible(state_count, [&](const fdca::FdcaRule& r) {
                    *out << fdca::rules_to_jsonl({r});
                });
            } else {
                *out << "d,c0,c1,c2,c3,c4,c5,c6,c7\n";
                fdca::enumerate_reversible(state_count, [&](const fdca::FdcaRule& r) {
                    *out << r.d.d;
                    for (auto ci : r.c) *out << ',' << ci;
                    *out << '\n';
                });
            }
            return kExitOk;
        }
        if (*classify) {
            if (n_min < 1 || n_min > n_max) {
                std::cerr << "classify: need 1 <= n-min <= n-max\n";
                return kExitUsage;
            }
            const auto rule = fdca::parse_rule(rule_text);
            const auto result = fdca::classify_empirical(rule, n_min, n_max, cap);
            for (const auto& [size, bij] : result.per_n)
                std::cout << "n=" << size << ": " << (bij ? "reversible" : "irreversible")
                          << "\n";
            switch (result.label) {
                case fdca::EmpiricalLabel::AllReversibleTested:
                    std::cout << "label: all-reversible-tested\n";
                    return kExitOk;
                case fdca::EmpiricalLabel::AllIrreversibleTested:
                    std::cout << "label: all-irreversible-tested\n";
                    return kExitNegative;
                case fdca::EmpiricalLabel::MixedTested:
                    std::cout << "label: mixed-tested\n";
                    return kExitNegative;
            }
        }
        if (*verify) {
            const fdca::StateCount state_count(d);
            std::optional<std::uint64_t> sample_opt;
            if (sample >= 0)
                sample_opt = static_cast<std::uint64_t>(sample);
            else if (d >= 5)
                sample_opt = 10'000;  // exhaustive d^8 is only feasible for d <= 4
            if (verify->count("--n-max") == 0) {
                if (d == 2) n_max = 10;
                else if (d == 3) n_max = 7;
                else if (d == 4) n_max = 6;
                else n_max = largest_feasible_n(d, cap);
            }
            std::cerr << "verify: d=" << d << " n_max=" << n_max << " "
                      << (sample_opt ? "sample=" + std::to_string(*sample_opt)
                                     : std::string("exhaustive"))
                      << "\n";
            const auto report = fdca::cross_validate(state_count, n_max, sample_opt, seed,
                                                     cap, jobs);
            write_output(out_path, fdca::report_to_json(report));
            return report.violations.empty() ? kExitOk : kExitNegative;
        }
        if (*table) {
            std::cout << fdca::table_to_text(fdca::table_row(fdca::StateCount(d)));
            return kExitOk;
        }
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
