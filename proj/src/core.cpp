#include "fdca/core.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fdca {

StateCount::StateCount(std::int64_t d_) : d(d_) {
    if (d < 2) throw std::invalid_argument("state count d must be >= 2");
}

std::int64_t radical(std::int64_t d, std::int64_t cap) {
    if (d < 2) throw std::invalid_argument("radical requires d >= 2");
    if (d > cap) throw std::invalid_argument("radical: d exceeds configured cap");
    std::int64_t rad = 1;
    std::int64_t rest = d;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rad *= p;
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) rad *= rest;
    return rad;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0,0) is undefined");
    if (a < 0 || b < 0) throw std::invalid_argument("gcd requires non-negative inputs");
    return std::gcd(a, b);
}

std::int64_t euler_totient(std::int64_t d, std::int64_t cap) {
    if (d < 1) throw std::invalid_argument("euler_totient requires d >= 1");
    if (d > cap) throw std::invalid_argument("euler_totient: d exceeds configured cap");
    std::int64_t phi = d;
    std::int64_t rest = d;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            phi -= phi / p;
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) phi -= phi / rest;
    return phi;
}

FdcaRule::FdcaRule(StateCount d_, std::array<std::int64_t, 8> coeffs) : d(d_), c(coeffs) {
    for (auto& ci : c) {
        ci %= d.d;
        if (ci < 0) ci += d.d;
    }
}

Configuration::Configuration(StateCount d_, std::vector<std::int64_t> cells_)
    : d(d_), cells(std::move(cells_)) {
    if (cells.empty()) throw std::invalid_argument("configuration must have n >= 1 cells");
    for (auto v : cells)
        if (v < 0 || v >= d.d)
            throw std::invalid_argument("cell state out of range [0, d-1]");
}

std::int64_t evaluate_local(const FdcaRule& rule, std::int64_t x, std::int64_t y,
                            std::int64_t z) {
    const std::int64_t d = rule.d.d;
    if (x < 0 || x >= d || y < 0 || y >= d || z < 0 || z >= d)
        throw std::invalid_argument("evaluate_local: neighbor state out of range");
    const auto& c = rule.c;
    // Reduce after each product so every intermediate stays below d^2 < 2^63.
    auto mul = [d](std::int64_t a, std::int64_t b) { return (a * b) % d; };
    std::int64_t acc = mul(mul(mul(c[0], x), y), z);
    acc = (acc + mul(mul(c[1], x), y)) % d;
    acc = (acc + mul(mul(c[2], x), z)) % d;
    acc = (acc + mul(mul(c[3], y), z)) % d;
    acc = (acc + mul(c[4], x)) % d;
    acc = (acc + mul(c[5], y)) % d;
    acc = (acc + mul(c[6], z)) % d;
    acc = (acc + c[7]) % d;
    return acc;
}

namespace {

std::int64_t parse_int(std::string_view tok, const char* what) {
    std::int64_t value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || tok.empty())
        throw std::invalid_argument(std::string("rule text: bad ") + what);
    return value;
}

}  // namespace

FdcaRule parse_rule(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("rule text must look like d:c0,c1,c2,c3,c4,c5,c6,c7");
    const std::int64_t d = parse_int(std::string_view(text).substr(0, colon), "state count");
    if (d < 2) throw std::invalid_argument("rule text: d must be >= 2");

    std::array<std::int64_t, 8> coeffs{};
    std::string_view rest = std::string_view(text).substr(colon + 1);
    for (int i = 0; i < 8; ++i) {
        const auto comma = rest.find(',');
        if (i < 7 && comma == std::string_view::npos)
            throw std::invalid_argument("rule text: expected 8 coefficients");
        if (i == 7 && comma != std::string_view::npos)
            throw std::invalid_argument("rule text: too many coefficients");
        const auto tok = (i < 7) ? rest.substr(0, comma) : rest;
        coeffs[i] = parse_int(tok, "coefficient");
        if (i < 7) rest = rest.substr(comma + 1);
    }
    return FdcaRule(StateCount(d), coeffs);
}

std::string format_rule(const FdcaRule& rule) {
    std::ostringstream out;
    out << rule.d.d << ':';
    for (int i = 0; i < 8; ++i) {
        if (i) out << ',';
        out << rule.c[i];
    }
    return out.str();
}

}  // namespace fdca
