#pragma once

#include <cstdint>

#include "overq/poly.hpp"

namespace overq {

// Truncated formal power series in (d, x, q): coefficients are exact inside
// the window {q_exp <= q_max, x_exp <= x_max}; terms outside are dropped.
// Ring operations preserve window-exactness because all exponents are
// nonnegative: a product coefficient inside the window depends only on
// factor coefficients inside the window.
class Series {
public:
    explicit Series(Window w) : win_(w) {}

    static Series zero(Window w) { return Series(w); }
    static Series one(Window w) { return monomial(w, Monomial{}); }
    // Drops the term silently if m lies outside w.
    static Series monomial(Window w, const Monomial& m, const BigInt& c = 1);
    // Truncates p into w.
    static Series from_poly(const Poly& p, Window w);

    Window window() const noexcept { return win_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Stored coefficient, zero if absent; OutsideWindow beyond the window.
    BigInt coefficient(const Monomial& m) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator-() const;

    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b) {
        return a.win_ == b.win_ && a.terms_ == b.terms_;
    }

    // x -> x q^t: maps d^a x^m q^n to d^a x^m q^{n + t m}.
    Series subst_x(std::uint32_t t) const;

    // Sums coefficients over x_exp; result has window (q_max, 0). Only exact
    // when the represented object has no terms with x_exp > x_max at
    // q_exp <= q_max; that is the caller's contract (not detectable here; in
    // particular do not call this on anything with a pole at x = 1).
    Series eval_x_one() const;

    // Clips terms into a new window. Exact iff the represented object has no
    // terms inside w that the old window had already dropped.
    Series rewindowed(Window w) const;

    // Adds c at m (accumulating) if m lies inside the window.
    void add_term(const Monomial& m, const BigInt& c);

private:
    Window win_;
    TermMap terms_;

    void require_same_window(const Series& o) const;
};

// sum_{j >= 0} u^j, the inverse of (1 - u). Every monomial of u must have
// x_exp + q_exp >= 1 so the sum terminates inside the window; otherwise
// NonzeroConstantTerm (a pure-d monomial is constant in the (x, q) grading
// and equally uninvertible here).
Series invert_one_minus(const Series& u);

// Product over n >= 0 of (1 + sign * [d] * [x] * q^{step*n + offset}),
// or its reciprocal when numerator == false. Factors whose q exponent
// exceeds q_max contribute nothing inside the window and are skipped.
// Requires offset >= 1 or x_attached (DivergentAtWindow otherwise: with
// neither a positive q exponent nor an attached x the n = 0 factor has no
// valuation and the reciprocal cannot be truncated).
Series pochhammer_product(Window w, int sign, bool d_attached, bool x_attached,
                          std::uint32_t offset, std::uint32_t step, bool numerator);

// Gaussian binomial [m, r] in base q^step as a Series on the tight window
// that holds the whole polynomial.
Series qbinom(std::int64_t m, std::int64_t r, std::uint32_t step);

}
