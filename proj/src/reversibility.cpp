#include "fdca/reversibility.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "fdca/dynamics.hpp"

namespace fdca {

namespace {

// Encoded successor of the cell row, without building a Configuration.
std::uint64_t step_code(const FdcaRule& rule, const std::vector<std::int64_t>& cells) {
    const auto d = static_cast<std::uint64_t>(rule.d.d);
    const std::size_t n = cells.size();
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t left = (i == 0) ? 0 : cells[i - 1];
        const std::int64_t right = (i + 1 == n) ? 0 : cells[i + 1];
        code = code * d + static_cast<std::uint64_t>(
                              evaluate_local(rule, left, cells[i], right));
    }
    return code;
}

bool advance_odometer(std::vector<std::int64_t>& cells, std::int64_t d) {
    for (std::size_t i = cells.size(); i-- > 0;) {
        if (++cells[i] < d) return true;
        cells[i] = 0;
    }
    return false;
}

}  // namespace

bool brute_force_reversible(const FdcaRule& rule, std::uint32_t n, std::uint64_t cap) {
    if (n == 0) throw std::invalid_argument("brute_force_reversible: n must be >= 1");
    const std::uint64_t total = configuration_count(rule.d, n, cap);
    std::vector<bool> seen(total, false);
    std::vector<std::int64_t> cells(n, 0);
    // Injectivity on a finite set is bijectivity: stop at the first collision.
    do {
        const std::uint64_t image = step_code(rule, cells);
        if (seen[image]) return false;
        seen[image] = true;
    } while (advance_odometer(cells, rule.d.d));
    return true;
}

EmpiricalClass classify_empirical(const FdcaRule& rule, std::uint32_t n_min,
                                  std::uint32_t n_max, std::uint64_t cap) {
    if (n_min < 1 || n_min > n_max)
        throw std::invalid_argument("classify_empirical: need 1 <= n_min <= n_max");
    try {
        configuration_count(rule.d, n_max, cap);
    } catch (const std::length_error&) {
        std::uint32_t feasible = 0;
        for (std::uint64_t size = 1; size <= cap / static_cast<std::uint64_t>(rule.d.d);)
            size *= static_cast<std::uint64_t>(rule.d.d), ++feasible;
        throw std::length_error("classify_empirical: d^n_max exceeds cap; largest feasible n is " +
                                std::to_string(feasible));
    }
    EmpiricalClass result{n_min, n_max, {}, EmpiricalLabel::MixedTested};
    bool all_true = true, all_false = true;
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
        const bool bij = brute_force_reversible(rule, n, cap);
        result.per_n[n] = bij;
        all_true = all_true && bij;
        all_false = all_false && !bij;
    }
    result.label = all_true ? EmpiricalLabel::AllReversibleTested
                 : all_false ? EmpiricalLabel::AllIrreversibleTested
                             : EmpiricalLabel::MixedTested;
    return result;
}

namespace {

struct TupleOutcome {
    bool algebraic_reversible = false;
    bool witnessed_irreversible = false;
    std::optional<std::uint32_t> violation_n;
};

// One tuple against the oracle for n = 1..n_max, with early exits.
TupleOutcome validate_tuple(const FdcaRule& rule, std::uint32_t n_max, std::uint64_t cap) {
    TupleOutcome out;
    out.algebraic_reversible = check_algebraic(rule).reversible;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const bool bij = brute_force_reversible(rule, n, cap);
        if (out.algebraic_reversible && !bij) {
            out.violation_n = n;  // algebraic check and oracle disagree
            return out;
        }
        if (!out.algebraic_reversible && !bij) {
            out.witnessed_irreversible = true;
            return out;
        }
    }
    return out;
}

std::array<std::int64_t, 8> tuple_from_index(std::uint64_t index, std::int64_t d) {
    std::array<std::int64_t, 8> c{};
    for (int i = 8; i-- > 0;) {
        c[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(d));
        index /= static_cast<std::uint64_t>(d);
    }
    return c;
}

struct ChunkResult {
    std::uint64_t reversible = 0;
    std::uint64_t witnessed = 0;
    std::vector<Violation> violations;
};

}  // namespace

ValidationReport cross_validate(StateCount d, std::uint32_t n_max,
                                std::optional<std::uint64_t> sample, std::uint64_t seed,
                                std::uint64_t cap, unsigned jobs) {
    const auto started = std::chrono::steady_clock::now();
    if (n_max >= 1) configuration_count(d, n_max, cap);

    std::vector<std::array<std::int64_t, 8>> tuples;
    if (sample) {
        tuples.reserve(*sample);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> coeff(0, d.d - 1);
        for (std::uint64_t t = 0; t < *sample; ++t) {
            std::array<std::int64_t, 8> c{};
            for (auto& ci : c) ci = coeff(rng);
            tuples.push_back(c);
        }
    } else {
        std::uint64_t total = 1;
        for (int i = 0; i < 8; ++i) total *= static_cast<std::uint64_t>(d.d);
        tuples.reserve(total);
        for (std::uint64_t t = 0; t < total; ++t) tuples.push_back(tuple_from_index(t, d.d));
    }

    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(tuples.size(), 1));
    std::vector<ChunkResult> results(jobs);
    auto worker = [&](unsigned job) {
        ChunkResult& res = results[job];
        for (std::size_t t = job; t < tuples.size(); t += jobs) {
            const FdcaRule rule(d, tuples[t]);
            const TupleOutcome out = validate_tuple(rule, n_max, cap);
            if (out.algebraic_reversible) ++res.reversible;
            if (out.witnessed_irreversible) ++res.witnessed;
            if (out.violation_n) res.violations.push_back({tuples[t], *out.violation_n});
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (auto& th : threads) th.join();
    }

    ValidationReport report{};
    report.d = d.d;
    report.n_min = 1;
    report.n_max = n_max;
    report.tuples_tested = tuples.size();
    report.exhaustive = !sample.has_value();
    report.seed = seed;
    for (const auto& res : results) {
        report.reversible_count += res.reversible;
        report.witnessed_irreversible += res.witnessed;
        report.violations.insert(report.violations.end(), res.violations.begin(),
                                 res.violations.end());
    }
    report.irreversible_count = report.tuples_tested - report.reversible_count;
    // Ascending tuple order keeps the report independent of job count.
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) { return a.coeffs < b.coeffs; });
    report.witnessed_irreversible_fraction =
        report.irreversible_count == 0
            ? 0.0
            : static_cast<double>(report.witnessed_irreversible) /
                  static_cast<double>(report.irreversible_count);
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started)
            .count());
    return report;
}

}  // namespace fdca
