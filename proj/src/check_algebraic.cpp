// The algebraic decision lives in its own translation unit on purpose:
// it must stay independent of the configuration-space machinery.
#include "fdca/core.hpp"
#include "fdca/reversibility.hpp"

namespace fdca {

std::string ReversibilityVerdict::describe() const {
    if (reversible) return "reversible";
    switch (*failed_condition) {
        case FailedCondition::C5NotCoprime:
            return "condition 1: gcd(c5, d) != 1";
        case FailedCondition::DegreeCoeffNotMultipleOfRad:
            return "condition 2: c" + std::to_string(coeff_index) +
                   " is not a multiple of rad(d)";
        case FailedCondition::C4C6ProductNotMultipleOfRad:
            return "condition 3: c4*c6 is not a multiple of rad(d)";
    }
    return "unknown";
}

ReversibilityVerdict check_algebraic(const FdcaRule& rule) {
    const std::int64_t d = rule.d.d;
    const auto& c = rule.c;
    if (gcd(c[5], d) != 1)
        return {false, FailedCondition::C5NotCoprime, -1};
    const std::int64_t rad = radical(d);
    for (int i = 0; i < 4; ++i)
        if (c[i] % rad != 0)
            return {false, FailedCondition::DegreeCoeffNotMultipleOfRad, i};
    if ((c[4] * c[6]) % rad != 0)
        return {false, FailedCondition::C4C6ProductNotMultipleOfRad, -1};
    return {true, std::nullopt, -1};
}

}  // namespace fdca
