#include "fdca/synthesis.hpp"

#include <numeric>

namespace fdca {

CoefficientDomains coefficient_domains(StateCount d) {
    CoefficientDomains domains{d, {}, {}, {}, {}};
    const std::int64_t rad = radical(d.d);
    for (std::int64_t v = 0; v < d.d; v += rad) domains.degree_coeff_values.push_back(v);
    for (std::int64_t v = 1; v < d.d; ++v)
        if (std::gcd(v, d.d) == 1) domains.c5_values.push_back(v);
    domains.c4c6_pairs.resize(d.d);
    for (std::int64_t c4 = 0; c4 < d.d; ++c4)
        for (std::int64_t c6 = 0; c6 < d.d; ++c6)
            if ((c4 * c6) % rad == 0) domains.c4c6_pairs[c4].push_back(c6);
    domains.c7_values.resize(d.d);
    std::iota(domains.c7_values.begin(), domains.c7_values.end(), 0);
    return domains;
}

void enumerate_reversible(StateCount d, const std::function<void(const FdcaRule&)>& sink) {
    const CoefficientDomains dom = coefficient_domains(d);
    std::array<std::int64_t, 8> c{};
    for (std::int64_t c0 : dom.degree_coeff_values)
        for (std::int64_t c1 : dom.degree_coeff_values)
            for (std::int64_t c2 : dom.degree_coeff_values)
                for (std::int64_t c3 : dom.degree_coeff_values)
                    for (std::int64_t c4 = 0; c4 < d.d; ++c4)
                        for (std::int64_t c5 : dom.c5_values)
                            for (std::int64_t c6 : dom.c4c6_pairs[c4])
                                for (std::int64_t c7 = 0; c7 < d.d; ++c7) {
                                    c = {c0, c1, c2, c3, c4, c5, c6, c7};
                                    sink(FdcaRule(d, c));
                                }
}

std::vector<FdcaRule> enumerate_reversible_all(StateCount d) {
    std::vector<FdcaRule> rules;
    enumerate_reversible(d, [&](const FdcaRule& r) { rules.push_back(r); });
    return rules;
}

std::uint64_t zero_product_pairs(StateCount d) {
    const std::int64_t rad = radical(d.d);
    if (d.d <= 10'000) {
        std::uint64_t count = 0;
        for (std::int64_t a = 0; a < d.d; ++a)
            for (std::int64_t b = 0; b < d.d; ++b)
                if ((a * b) % rad == 0) ++count;
        return count;
    }
    // Per prime p | d the residues a,b mod p are uniform over the d residues,
    // so pairs with p | ab number d^2 * (2p-1)/p^2; the primes are independent.
    std::uint64_t count = static_cast<std::uint64_t>(d.d) * static_cast<std::uint64_t>(d.d);
    std::int64_t rest = rad;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            count = count / static_cast<std::uint64_t>(p * p) *
                    static_cast<std::uint64_t>(2 * p - 1);
            rest /= p;
        }
    }
    if (rest > 1)
        count = count / static_cast<std::uint64_t>(rest * rest) *
                static_cast<std::uint64_t>(2 * rest - 1);
    return count;
}

std::uint64_t count_reversible(StateCount d) {
    const std::int64_t rad = radical(d.d);
    const std::uint64_t degree_choices = static_cast<std::uint64_t>(d.d / rad);
    std::uint64_t count = 1;
    for (int i = 0; i < 4; ++i) count *= degree_choices;
    count *= static_cast<std::uint64_t>(euler_totient(d.d));
    count *= static_cast<std::uint64_t>(d.d);  // c7 free
    count *= zero_product_pairs(d);
    return count;
}

CoefficientTable table_row(StateCount d) {
    const CoefficientDomains dom = coefficient_domains(d);
    CoefficientTable table{d, dom.degree_coeff_values, {}};
    for (std::int64_t c4 = 0; c4 < d.d; ++c4)
        table.rows.push_back({c4, dom.c5_values, dom.c4c6_pairs[c4], dom.c7_values});
    return table;
}

}  // namespace fdca
