#pragma once

#include <string>
#include <vector>

#include "fdca/core.hpp"
#include "fdca/dynamics.hpp"
#include "fdca/reversibility.hpp"
#include "fdca/synthesis.hpp"

namespace fdca {

// DOT text: one node per configuration labeled with its decimal encoding,
// one edge per node. With highlight_collisions, in-degree >= 2 and
// in-degree 0 nodes carry distinguishing attributes. with_digit_labels
// appends the base-d digit string as a secondary label.
std::string graph_to_dot(const TransitionGraph& graph, bool highlight_collisions = false,
                         bool with_digit_labels = false);

// Header "d,c0,c1,c2,c3,c4,c5,c6,c7", one line per rule. Throws on mixed d.
std::string rules_to_csv(const std::vector<FdcaRule>& rules);
std::string rules_to_jsonl(const std::vector<FdcaRule>& rules);

std::string report_to_json(const ValidationReport& report);

// Text rendering of the coefficient table, one row per c4 value.
std::string table_to_text(const CoefficientTable& table);

}  // namespace fdca
