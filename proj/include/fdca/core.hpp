#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fdca {

// Number of cell states. States are the residues 0..d-1.
struct StateCount {
    std::int64_t d;

    explicit StateCount(std::int64_t d_);

    friend bool operator==(const StateCount&, const StateCount&) = default;
};

// Largest d accepted by radical(); keeps trial division effectively constant cost.
inline constexpr std::int64_t kDefaultStateCap = 1'000'000;

// Default node budget for anything that materializes all d^n configurations.
inline constexpr std::uint64_t kDefaultNodeCap = std::uint64_t{1} << 24;

// Product of the distinct primes dividing d, by trial division.
std::int64_t radical(std::int64_t d, std::int64_t cap = kDefaultStateCap);

// Euclid. Requires not both zero.
std::int64_t gcd(std::int64_t a, std::int64_t b);

// Euler totient, by trial-division factorization.
std::int64_t euler_totient(std::int64_t d, std::int64_t cap = kDefaultStateCap);

// A d-state rule R(x,y,z) = c0 xyz + c1 xy + c2 xz + c3 yz + c4 x + c5 y + c6 z + c7 (mod d).
// Coefficients are stored reduced mod d.
struct FdcaRule {
    StateCount d;
    std::array<std::int64_t, 8> c;

    FdcaRule(StateCount d_, std::array<std::int64_t, 8> coeffs);

    friend bool operator==(const FdcaRule&, const FdcaRule&) = default;
};

// A length-n row of cells over Z_d, indexed 0..n-1.
struct Configuration {
    StateCount d;
    std::vector<std::int64_t> cells;

    Configuration(StateCount d_, std::vector<std::int64_t> cells_);

    std::size_t size() const { return cells.size(); }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// R(x,y,z) mod d. Rejects arguments outside [0, d-1].
std::int64_t evaluate_local(const FdcaRule& rule, std::int64_t x, std::int64_t y,
                            std::int64_t z);

// "d:c0,c1,c2,c3,c4,c5,c6,c7"; coefficients are reduced mod d on input.
FdcaRule parse_rule(const std::string& text);
std::string format_rule(const FdcaRule& rule);

}  // namespace fdca
