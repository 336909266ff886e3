#pragma once

#include <cstdint>

namespace overq {

// Exponent triple for the formal variables d, x, q.
struct Monomial {
    std::uint32_t d = 0;
    std::uint32_t x = 0;
    std::uint32_t q = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// (q, x, d)-lexicographic order; also the serialization order, so iterating
// a term map already yields the output ordering.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.q != b.q) return a.q < b.q;
        if (a.x != b.x) return a.x < b.x;
        return a.d < b.d;
    }
};

// Truncation window: q exponents up to q_max, x exponents up to x_max.
// d exponents carry no independent bound; every object handled here attaches
// at least one q to each d, so the q bound already limits d.
struct Window {
    std::uint32_t q_max = 0;
    std::uint32_t x_max = 0;

    friend bool operator==(const Window&, const Window&) = default;
};

}
