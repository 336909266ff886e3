#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "overq/monomial.hpp"

namespace overq {

using BigInt = mpz_class;
using TermMap = std::map<Monomial, BigInt, MonomialOrder>;

// Exact sparse polynomial in (d, x, q) over arbitrary-precision integers.
// No truncation: meant for objects that are honest polynomials (Gaussian
// binomials, weighted subset-sum polynomials, coefficient families) whose
// identities must hold exactly, independent of any series window.
class Poly {
public:
    Poly() = default;

    static Poly constant(const BigInt& c);
    static Poly one() { return constant(1); }
    static Poly monomial(const Monomial& m, const BigInt& c = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }
    BigInt coeff(const Monomial& m) const;

    std::uint32_t degree_d() const noexcept;
    std::uint32_t degree_x() const noexcept;
    std::uint32_t degree_q() const noexcept;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Substitute q -> q^s.
    Poly q_scaled(std::uint32_t s) const;
    // Evaluate at q = 1, collapsing q exponents onto (d, x).
    Poly at_q_one() const;

    // Adds c at m (accumulating); drops the term if the sum is zero.
    void add_term(const Monomial& m, const BigInt& c);

private:
    TermMap terms_;
};

// Gaussian binomial [m, r] in base q^step, as an exact polynomial.
// Zero unless 0 <= r <= m. Computed from the product definition with exact
// polynomial division; a nonzero remainder is a bug and raises
// InexactDivision.
Poly qbinom_poly(std::int64_t m, std::int64_t r, std::uint32_t step);

}
