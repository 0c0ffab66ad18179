#include "fdca/export.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fdca {

std::string graph_to_dot(const TransitionGraph& graph, bool highlight_collisions,
                         bool with_digit_labels) {
    const std::vector<std::uint64_t> degree =
        highlight_collisions ? in_degrees(graph) : std::vector<std::uint64_t>{};
    std::ostringstream out;
    out << "digraph fdca {\n";
    out << "  // d=" << graph.d.d << " n=" << graph.n << "\n";
    for (std::uint64_t code = 0; code < graph.successor.size(); ++code) {
        out << "  \"" << code << "\"";
        std::vector<std::string> attrs;
        if (with_digit_labels) {
            const Configuration config = decode(graph.d, graph.n, code);
            std::string digits;
            for (auto v : config.cells) digits += std::to_string(v);
            attrs.push_back("label=\"" + std::to_string(code) + "\\n" + digits + "\"");
        }
        if (highlight_collisions && degree[code] >= 2)
            attrs.push_back("style=filled fillcolor=orange");
        if (highlight_collisions && degree[code] == 0)
            attrs.push_back("style=filled fillcolor=lightgray");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                out << (i ? " " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    for (std::uint64_t code = 0; code < graph.successor.size(); ++code)
        out << "  \"" << code << "\" -> \"" << graph.successor[code] << "\";\n";
    out << "}\n";
    return out.str();
}

namespace {

void require_homogeneous(const std::vector<FdcaRule>& rules) {
    for (const auto& r : rules)
        if (r.d != rules.front().d)
            throw std::invalid_argument("rule stream mixes state counts");
}

}  // namespace

std::string rules_to_csv(const std::vector<FdcaRule>& rules) {
    require_homogeneous(rules);
    std::ostringstream out;
    out << "d,c0,c1,c2,c3,c4,c5,c6,c7\n";
    for (const auto& r : rules) {
        out << r.d.d;
        for (auto ci : r.c) out << ',' << ci;
        out << '\n';
    }
    return out.str();
}

std::string rules_to_jsonl(const std::vector<FdcaRule>& rules) {
    require_homogeneous(rules);
    std::ostringstream out;
    for (const auto& r : rules) {
        nlohmann::ordered_json obj;
        obj["d"] = r.d.d;
        for (int i = 0; i < 8; ++i) obj["c" + std::to_string(i)] = r.c[i];
        out << obj.dump() << '\n';
    }
    return out.str();
}

std::string report_to_json(const ValidationReport& report) {
    nlohmann::ordered_json obj;
    obj["d"] = report.d;
    obj["n_min"] = report.n_min;
    obj["n_max"] = report.n_max;
    obj["tuples_tested"] = report.tuples_tested;
    if (report.exhaustive) {
        obj["mode"] = "exhaustive";
    } else {
        obj["mode"] = "sample";
        obj["seed"] = report.seed;
    }
    obj["reversible_count"] = report.reversible_count;
    obj["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        nlohmann::ordered_json entry;
        entry["coefficients"] = v.coeffs;
        entry["n"] = v.n;
        obj["violations"].push_back(entry);
    }
    obj["witnessed_irreversible_fraction"] = report.witnessed_irreversible_fraction;
    obj["elapsed_ms"] = report.elapsed_ms;
    return obj.dump(2) + "\n";
}

namespace {

// Compresses runs of consecutive values: {0,1,2,3} -> "0-3", {0,2,4} -> "0,2,4".
std::string format_set(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < values.size()) {
        std::size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
        if (!first) out << ',';
        if (j - i >= 2)
            out << values[i] << '-' << values[j];
        else if (j > i)
            out << values[i] << ',' << values[j];
        else
            out << values[i];
        first = false;
        i = j + 1;
    }
    return out.str();
}

}  // namespace

std::string table_to_text(const CoefficientTable& table) {
    std::ostringstream out;
    out << "d = " << table.d.d << "\n";
    out << "c0,c1,c2,c3: {" << format_set(table.degree_coeff_values) << "}\n";
    out << "c4 | c5 | c6 | c7\n";
    for (const auto& row : table.rows) {
        out << row.c4 << " | " << format_set(row.c5_values) << " | "
            << format_set(row.c6_values) << " | " << format_set(row.c7_values) << "\n";
    }
    return out.str();
}

}  // namespace fdca
