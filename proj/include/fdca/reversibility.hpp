#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdca/core.hpp"

namespace fdca {

// Which of the three coefficient conditions failed, in check order:
// condition 1 (gcd), then c0..c3 in index order, then condition 3 (c4*c6).
enum class FailedCondition {
    C5NotCoprime,
    DegreeCoeffNotMultipleOfRad,  // coeff_index names which of c0..c3
    C4C6ProductNotMultipleOfRad,
};

struct ReversibilityVerdict {
    bool reversible;
    std::optional<FailedCondition> failed_condition;
    int coeff_index = -1;  // 0..3 when failed_condition is DegreeCoeffNotMultipleOfRad

    std::string describe() const;
};

// Constant-time algebraic decision. Depends on (d, c0..c7) only; never
// touches configurations or any lattice size.
ReversibilityVerdict check_algebraic(const FdcaRule& rule);

// True iff the global map on all d^n configurations is a bijection,
// decided by a visited-bitmap sweep over encoded successors.
bool brute_force_reversible(const FdcaRule& rule, std::uint32_t n,
                            std::uint64_t cap = kDefaultNodeCap);

enum class EmpiricalLabel { AllReversibleTested, AllIrreversibleTested, MixedTested };

// Finite-range evidence only; never extrapolates beyond [n_min, n_max].
struct EmpiricalClass {
    std::uint32_t n_min;
    std::uint32_t n_max;
    std::map<std::uint32_t, bool> per_n;  // n -> bijective at n
    EmpiricalLabel label;
};

EmpiricalClass classify_empirical(const FdcaRule& rule, std::uint32_t n_min,
                                  std::uint32_t n_max, std::uint64_t cap = kDefaultNodeCap);

struct Violation {
    std::array<std::int64_t, 8> coeffs;
    std::uint32_t n;  // first tested lattice size where bijectivity failed
};

struct ValidationReport {
    std::int64_t d;
    std::uint32_t n_min;
    std::uint32_t n_max;
    std::uint64_t tuples_tested;
    bool exhaustive;
    std::uint64_t seed;  // meaningful only when !exhaustive
    std::uint64_t reversible_count;       // tuples passing check_algebraic
    std::uint64_t irreversible_count;     // tuples failing check_algebraic
    std::uint64_t witnessed_irreversible; // of those, non-bijective at some tested n
    std::vector<Violation> violations;    // algebraic-reversible yet non-bijective
    double witnessed_irreversible_fraction;
    std::uint64_t elapsed_ms;
};

inline constexpr std::uint64_t kDefaultSampleSeed = 0xfdca2025;

// Compares check_algebraic against the brute-force oracle for n = 1..n_max,
// over all d^8 tuples or a seeded uniform sample. Deterministic for fixed
// arguments regardless of the number of jobs.
ValidationReport cross_validate(StateCount d, std::uint32_t n_max,
                                std::optional<std::uint64_t> sample = std::nullopt,
                                std::uint64_t seed = kDefaultSampleSeed,
                                std::uint64_t cap = kDefaultNodeCap, unsigned jobs = 1);

}  // namespace fdca
