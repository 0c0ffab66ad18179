#include "fdca/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace fdca {

Configuration global_step(const FdcaRule& rule, const Configuration& config) {
    if (config.d != rule.d)
        throw std::invalid_argument("global_step: rule and configuration disagree on d");
    const std::size_t n = config.size();
    std::vector<std::int64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t left = (i == 0) ? 0 : config.cells[i - 1];
        const std::int64_t right = (i + 1 == n) ? 0 : config.cells[i + 1];
        next[i] = evaluate_local(rule, left, config.cells[i], right);
    }
    return Configuration(config.d, std::move(next));
}

std::uint64_t encode(const Configuration& config) {
    std::uint64_t code = 0;
    const auto d = static_cast<std::uint64_t>(config.d.d);
    for (auto v : config.cells) code = code * d + static_cast<std::uint64_t>(v);
    return code;
}

Configuration decode(StateCount d, std::uint32_t n, std::uint64_t code) {
    if (n == 0) throw std::invalid_argument("decode: n must be >= 1");
    std::vector<std::int64_t> cells(n);
    const auto base = static_cast<std::uint64_t>(d.d);
    for (std::uint32_t i = n; i-- > 0;) {
        cells[i] = static_cast<std::int64_t>(code % base);
        code /= base;
    }
    if (code != 0) throw std::out_of_range("decode: code >= d^n");
    return Configuration(d, std::move(cells));
}

std::uint64_t configuration_count(StateCount d, std::uint32_t n, std::uint64_t cap) {
    std::uint64_t total = 1;
    const auto base = static_cast<std::uint64_t>(d.d);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (total > cap / base)
            throw std::length_error("node budget exceeded: d^n needs more than cap=" +
                                    std::to_string(cap) + " nodes");
        total *= base;
    }
    if (total > cap)
        throw std::length_error("node budget exceeded: d^n = " + std::to_string(total) +
                                " > cap = " + std::to_string(cap));
    return total;
}

TransitionGraph build_transition_graph(const FdcaRule& rule, std::uint32_t n,
                                       std::uint64_t cap) {
    const std::uint64_t total = configuration_count(rule.d, n, cap);
    TransitionGraph graph{rule.d, n, std::vector<std::uint64_t>(total)};
    // Walk codes in order, stepping the digit vector as an odometer.
    Configuration config = decode(rule.d, n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        graph.successor[code] = encode(global_step(rule, config));
        for (std::uint32_t i = n; i-- > 0;) {
            if (++config.cells[i] < rule.d.d) break;
            config.cells[i] = 0;
        }
    }
    return graph;
}

std::vector<Configuration> trajectory(const FdcaRule& rule, const Configuration& config,
                                      std::uint64_t steps) {
    std::vector<Configuration> path;
    path.reserve(steps + 1);
    path.push_back(config);
    for (std::uint64_t i = 0; i < steps; ++i) path.push_back(global_step(rule, path.back()));
    return path;
}

std::vector<std::uint64_t> in_degrees(const TransitionGraph& graph) {
    std::vector<std::uint64_t> degree(graph.successor.size(), 0);
    for (auto s : graph.successor) ++degree[s];
    return degree;
}

}  // namespace fdca
