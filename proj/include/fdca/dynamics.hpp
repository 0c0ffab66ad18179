#pragma once

#include <cstdint>
#include <vector>

#include "fdca/core.hpp"

namespace fdca {

// Explicit table of the global map: successor[i] is the encoding of the
// successor of configuration i. Out-degree of every node is exactly 1.
struct TransitionGraph {
    StateCount d;
    std::uint32_t n;
    std::vector<std::uint64_t> successor;
};

// One synchronous update under null boundary: missing neighbors are state 0.
Configuration global_step(const FdcaRule& rule, const Configuration& config);

// Base-d positional encoding with cell 0 as the most significant digit.
std::uint64_t encode(const Configuration& config);
Configuration decode(StateCount d, std::uint32_t n, std::uint64_t code);

// Number of length-n configurations, d^n. Throws when it exceeds cap.
std::uint64_t configuration_count(StateCount d, std::uint32_t n, std::uint64_t cap);

TransitionGraph build_transition_graph(const FdcaRule& rule, std::uint32_t n,
                                       std::uint64_t cap = kDefaultNodeCap);

// [config, G(config), ..., G^steps(config)].
std::vector<Configuration> trajectory(const FdcaRule& rule, const Configuration& config,
                                      std::uint64_t steps);

// In-degree of every node of the graph.
std::vector<std::uint64_t> in_degrees(const TransitionGraph& graph);

}  // namespace fdca
