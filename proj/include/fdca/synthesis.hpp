#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fdca/core.hpp"

namespace fdca {

// The per-coefficient value sets implied by the three reversibility
// conditions; picking one value from each set yields a reversible rule.
struct CoefficientDomains {
    StateCount d;
    std::vector<std::int64_t> degree_coeff_values;  // c0..c3: multiples of rad(d)
    std::vector<std::int64_t> c5_values;            // units mod d
    std::vector<std::vector<std::int64_t>> c4c6_pairs;  // [c4] -> valid c6 values
    std::vector<std::int64_t> c7_values;            // all of Z_d
};

CoefficientDomains coefficient_domains(StateCount d);

// Yields every reversible rule for d exactly once, in lexicographic order
// of (c0..c7). Chunked through a callback so large d streams without
// materializing.
void enumerate_reversible(StateCount d, const std::function<void(const FdcaRule&)>& sink);

// Collects the stream; intended for small d (tests, d=2..4 scale).
std::vector<FdcaRule> enumerate_reversible_all(StateCount d);

// #{(a,b) in Z_d^2 : a*b = 0 mod rad(d)}. Double loop for d <= 10^4,
// per-prime counting above, the two agree on the overlap.
std::uint64_t zero_product_pairs(StateCount d);

// (d/rad(d))^4 * phi(d) * d * zero_product_pairs(d); equals the stream length.
std::uint64_t count_reversible(StateCount d);

// Table layout: shared c0..c3 set, then one row per c4 listing c5/c6/c7 sets.
struct TableRow {
    std::int64_t c4;
    std::vector<std::int64_t> c5_values;
    std::vector<std::int64_t> c6_values;
    std::vector<std::int64_t> c7_values;
};

struct CoefficientTable {
    StateCount d;
    std::vector<std::int64_t> degree_coeff_values;
    std::vector<TableRow> rows;
};

CoefficientTable table_row(StateCount d);

}  // namespace fdca
