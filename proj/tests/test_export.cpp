#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fdca/export.hpp"

using namespace fdca;

namespace {

FdcaRule make_rule(std::int64_t d, std::array<std::int64_t, 8> c) {
    return FdcaRule(StateCount(d), c);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("graph_to_dot emits one node and one edge per configuration") {
    const auto g = build_transition_graph(make_rule(2, {0, 0, 0, 0, 1, 1, 0, 1}), 4);
    const auto dot = graph_to_dot(g, true);
    CHECK(dot.substr(0, 8) == "digraph ");
    CHECK(dot.back() == '\n');
    CHECK(count_occurrences(dot, "->") == 16);
    // bijective: nothing highlighted
    CHECK(count_occurrences(dot, "fillcolor") == 0);
    CHECK(count_occurrences(dot, "{") == count_occurrences(dot, "}"));
}

TEST_CASE("graph_to_dot highlights unreachable nodes of an irreversible rule") {
    const auto g = build_transition_graph(make_rule(5, {2, 0, 0, 0, 2, 3, 0, 4}), 3);
    const auto dot = graph_to_dot(g, true);
    CHECK(count_occurrences(dot, "fillcolor=lightgray") >= 1);  // in-degree 0
    CHECK(count_occurrences(dot, "fillcolor=orange") >= 1);     // in-degree >= 2
}

TEST_CASE("graph_to_dot identity-like single cell gives two self-loops") {
    const auto g = build_transition_graph(make_rule(2, {0, 0, 0, 0, 0, 1, 0, 0}), 1);
    const auto dot = graph_to_dot(g);
    CHECK(count_occurrences(dot, "\"0\" -> \"0\"") == 1);
    CHECK(count_occurrences(dot, "\"1\" -> \"1\"") == 1);
}

TEST_CASE("graph_to_dot secondary digit labels") {
    const auto g = build_transition_graph(make_rule(2, {0, 0, 0, 0, 1, 1, 0, 1}), 4);
    const auto dot = graph_to_dot(g, false, true);
    CHECK(count_occurrences(dot, "label=\"10\\n1010\"") == 1);
}

TEST_CASE("rules_to_csv") {
    const auto csv = rules_to_csv({make_rule(8, {2, 4, 0, 6, 3, 3, 2, 1})});
    CHECK(csv == "d,c0,c1,c2,c3,c4,c5,c6,c7\n8,2,4,0,6,3,3,2,1\n");
    CHECK(rules_to_csv({}) == "d,c0,c1,c2,c3,c4,c5,c6,c7\n");
}

TEST_CASE("rules_to_csv rejects mixed d") {
    CHECK_THROWS_AS(rules_to_csv({make_rule(8, {0, 0, 0, 0, 0, 1, 0, 0}),
                                  make_rule(6, {0, 0, 0, 0, 0, 1, 0, 0})}),
                    std::invalid_argument);
}

TEST_CASE("csv and jsonl round-trip through parse_rule") {
    std::vector<FdcaRule> rules;
    for (std::int64_t c4 = 0; c4 < 7; ++c4)
        rules.push_back(make_rule(7, {0, 0, 0, 0, c4, 3, 0, 5}));

    std::istringstream csv(rules_to_csv(rules));
    std::string line;
    std::getline(csv, line);  // header
    for (const auto& rule : rules) {
        REQUIRE(std::getline(csv, line));
        const auto comma = line.find(',');
        std::string text = line.substr(0, comma) + ':' + line.substr(comma + 1);
        CHECK(parse_rule(text) == rule);
    }

    std::istringstream jsonl(rules_to_jsonl(rules));
    for (const auto& rule : rules) {
        REQUIRE(std::getline(jsonl, line));
        const auto obj = nlohmann::json::parse(line);
        CHECK(obj.at("d").get<std::int64_t>() == rule.d.d);
        for (int i = 0; i < 8; ++i)
            CHECK(obj.at("c" + std::to_string(i)).get<std::int64_t>() == rule.c[i]);
    }
}

TEST_CASE("report_to_json field order and content") {
    const auto report = cross_validate(StateCount(3), 4);
    const auto text = report_to_json(report);
    const auto obj = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (auto it = obj.begin(); it != obj.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"d", "n_min", "n_max", "tuples_tested", "mode",
                                           "reversible_count", "violations",
                                           "witnessed_irreversible_fraction", "elapsed_ms"});
    CHECK(obj["d"] == 3);
    CHECK(obj["tuples_tested"] == 6561);
    CHECK(obj["mode"] == "exhaustive");
    CHECK(obj["violations"].empty());

    const auto sampled = cross_validate(StateCount(5), 3, 10, 99);
    const auto sampled_obj = nlohmann::ordered_json::parse(report_to_json(sampled));
    CHECK(sampled_obj["mode"] == "sample");
    CHECK(sampled_obj["seed"] == 99);
    CHECK(sampled_obj["tuples_tested"] == 10);
}

TEST_CASE("table_to_text spot checks") {
    const auto text = table_to_text(table_row(StateCount(6)));
    CHECK(text.find("c0,c1,c2,c3: {0}") != std::string::npos);
    CHECK(text.find("3 | 1,5 | 0,2,4 | 0-5") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
    const auto g = build_transition_graph(make_rule(3, {0, 0, 0, 0, 1, 1, 1, 0}), 2);
    CHECK(graph_to_dot(g, true) == graph_to_dot(g, true));
}
