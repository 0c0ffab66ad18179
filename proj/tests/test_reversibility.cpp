#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fdca/dynamics.hpp"
#include "fdca/reversibility.hpp"

using namespace fdca;

namespace {

FdcaRule make_rule(std::int64_t d, std::array<std::int64_t, 8> c) {
    return FdcaRule(StateCount(d), c);
}

}  // namespace

TEST_CASE("check_algebraic worked verdicts") {
    auto v1 = check_algebraic(make_rule(8, {2, 4, 0, 6, 3, 3, 2, 1}));
    CHECK(v1.reversible);

    auto v2 = check_algebraic(make_rule(6, {0, 0, 0, 0, 0, 3, 0, 1}));
    CHECK_FALSE(v2.reversible);
    CHECK(v2.failed_condition == FailedCondition::C5NotCoprime);

    auto v3 = check_algebraic(make_rule(8, {0, 1, 0, 0, 5, 1, 2, 0}));
    CHECK_FALSE(v3.reversible);
    CHECK(v3.failed_condition == FailedCondition::DegreeCoeffNotMultipleOfRad);
    CHECK(v3.coeff_index == 1);

    auto v4 = check_algebraic(make_rule(12, {0, 0, 0, 0, 5, 1, 1, 0}));
    CHECK_FALSE(v4.reversible);
    CHECK(v4.failed_condition == FailedCondition::C4C6ProductNotMultipleOfRad);

    auto v5 = check_algebraic(make_rule(5, {2, 0, 0, 0, 2, 3, 0, 4}));
    CHECK_FALSE(v5.reversible);
    CHECK(v5.failed_condition == FailedCondition::DegreeCoeffNotMultipleOfRad);
    CHECK(v5.coeff_index == 0);
}

TEST_CASE("failed conditions report in check order") {
    // violates all three conditions; condition 1 wins
    auto v = check_algebraic(make_rule(6, {1, 1, 1, 1, 1, 2, 1, 0}));
    CHECK(v.failed_condition == FailedCondition::C5NotCoprime);
    // violates 2 and 3; c0 wins over c2 and over condition 3
    auto w = check_algebraic(make_rule(6, {0, 0, 1, 1, 1, 1, 1, 0}));
    CHECK(w.failed_condition == FailedCondition::DegreeCoeffNotMultipleOfRad);
    CHECK(w.coeff_index == 2);
}

TEST_CASE("brute_force_reversible worked values") {
    CHECK(brute_force_reversible(make_rule(2, {0, 0, 0, 0, 1, 1, 0, 1}), 4));
    CHECK_FALSE(brute_force_reversible(make_rule(5, {2, 0, 0, 0, 2, 3, 0, 4}), 3));
    CHECK_FALSE(brute_force_reversible(make_rule(6, {0, 0, 0, 0, 0, 3, 0, 1}), 3));
}

TEST_CASE("oracle equals in-degree-1 over the transition graph") {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 60; ++i) {
        const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 4);
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 4);
        std::array<std::int64_t, 8> c{};
        for (auto& ci : c) ci = static_cast<std::int64_t>(rng() % d);
        const auto rule = make_rule(d, c);
        const auto deg = in_degrees(build_transition_graph(rule, n));
        const bool all_one =
            std::all_of(deg.begin(), deg.end(), [](std::uint64_t k) { return k == 1; });
        CHECK(brute_force_reversible(rule, n) == all_one);
    }
}

TEST_CASE("mirror symmetry of the oracle verdict") {
    // swapping c1<->c3 and c4<->c6 mirrors the lattice, preserving bijectivity
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 5);
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 5);
        std::array<std::int64_t, 8> c{};
        for (auto& ci : c) ci = static_cast<std::int64_t>(rng() % d);
        const auto rule = make_rule(d, c);
        const auto mirror = make_rule(d, {c[0], c[3], c[2], c[1], c[6], c[5], c[4], c[7]});
        CHECK(brute_force_reversible(rule, n) == brute_force_reversible(mirror, n));
    }
}

TEST_CASE("classify_empirical worked values") {
    auto a = classify_empirical(make_rule(5, {0, 0, 0, 0, 2, 3, 0, 4}), 2, 4);
    CHECK(a.label == EmpiricalLabel::AllReversibleTested);

    auto b = classify_empirical(make_rule(5, {2, 0, 0, 0, 2, 3, 0, 4}), 3, 5);
    CHECK_FALSE(b.per_n.at(3));
    CHECK_FALSE(b.per_n.at(5));

    auto c = classify_empirical(make_rule(6, {0, 0, 0, 0, 0, 3, 0, 1}), 1, 5);
    CHECK(c.label == EmpiricalLabel::AllIrreversibleTested);
}

TEST_CASE("classify_empirical is monotone in evidence") {
    const auto rule = make_rule(5, {2, 0, 0, 0, 2, 3, 0, 4});
    const auto narrow = classify_empirical(rule, 2, 4);
    const auto wide = classify_empirical(rule, 2, 6);
    for (const auto& [n, bij] : narrow.per_n) CHECK(wide.per_n.at(n) == bij);
}

TEST_CASE("classify_empirical argument checks") {
    const auto rule = make_rule(5, {0, 0, 0, 0, 0, 1, 0, 0});
    CHECK_THROWS_AS(classify_empirical(rule, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_empirical(rule, 1, 30), std::length_error);
}

TEST_CASE("cross_validate d=2 exhaustive") {
    const auto report = cross_validate(StateCount(2), 10);
    CHECK(report.tuples_tested == 256);
    CHECK(report.exhaustive);
    CHECK(report.violations.empty());
    CHECK(report.reversible_count == 6);
}

TEST_CASE("cross_validate is deterministic across job counts") {
    const auto one = cross_validate(StateCount(2), 6, std::nullopt, kDefaultSampleSeed,
                                    kDefaultNodeCap, 1);
    const auto three = cross_validate(StateCount(2), 6, std::nullopt, kDefaultSampleSeed,
                                      kDefaultNodeCap, 3);
    CHECK(one.reversible_count == three.reversible_count);
    CHECK(one.witnessed_irreversible == three.witnessed_irreversible);
    CHECK(one.violations.size() == three.violations.size());
}

TEST_CASE("cross_validate sampled runs are reproducible") {
    const auto a = cross_validate(StateCount(5), 4, 200, 42);
    const auto b = cross_validate(StateCount(5), 4, 200, 42);
    CHECK(a.tuples_tested == 200);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.reversible_count == b.reversible_count);
    CHECK(a.witnessed_irreversible == b.witnessed_irreversible);
    CHECK(a.violations.empty());
}

TEST_CASE("cross_validate with an empty sample") {
    const auto report = cross_validate(StateCount(7), 3, 0);
    CHECK(report.tuples_tested == 0);
    CHECK(report.violations.empty());
    CHECK(report.witnessed_irreversible_fraction == 0.0);
}
