#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overq/poly.hpp"

using namespace overq;

namespace {

Poly q_power_sum(std::initializer_list<std::pair<std::uint32_t, int>> coeffs) {
    Poly p;
    for (const auto& [e, c] : coeffs) p.add_term({0, 0, e}, c);
    return p;
}

}

TEST_CASE("gaussian binomial 4 choose 2") {
    CHECK(qbinom_poly(4, 2, 1) == q_power_sum({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
}

TEST_CASE("gaussian binomial edge rows") {
    CHECK(qbinom_poly(5, 0, 1) == Poly::one());
    CHECK(qbinom_poly(5, 5, 1) == Poly::one());
    CHECK(qbinom_poly(0, 0, 7) == Poly::one());
}

TEST_CASE("gaussian binomial vanishes outside the triangle") {
    CHECK(qbinom_poly(3, 4, 1).is_zero());
    CHECK(qbinom_poly(3, -1, 1).is_zero());
    CHECK(qbinom_poly(-2, 0, 1).is_zero());
    CHECK(qbinom_poly(-2, -3, 1).is_zero());
}

TEST_CASE("gaussian binomial at q=1 is the binomial coefficient") {
    CHECK(qbinom_poly(6, 3, 1).at_q_one() == Poly::constant(20));
    CHECK(qbinom_poly(8, 4, 2).at_q_one() == Poly::constant(70));
    CHECK(qbinom_poly(12, 5, 1).at_q_one() == Poly::constant(792));
}

TEST_CASE("base change is q-scaling") {
    CHECK(qbinom_poly(5, 2, 3) == qbinom_poly(5, 2, 1).q_scaled(3));
    CHECK(qbinom_poly(7, 3, 15) == qbinom_poly(7, 3, 1).q_scaled(15));
}

TEST_CASE("ring identities on mixed monomials") {
    Poly one = Poly::one();
    Poly dq = Poly::monomial({1, 0, 1});
    Poly xq2 = Poly::monomial({0, 1, 2});

    CHECK((one + dq) * (one - dq) == one - dq * dq);
    CHECK((one + dq + xq2) * xq2 == xq2 + dq * xq2 + xq2 * xq2);
    CHECK(-(one - dq) == dq - one);
    CHECK((dq - dq).is_zero());
}

TEST_CASE("add_term accumulates and erases on cancellation") {
    Poly p;
    p.add_term({1, 2, 3}, 5);
    p.add_term({1, 2, 3}, -5);
    CHECK(p.is_zero());
    p.add_term({0, 0, 1}, 2);
    p.add_term({0, 0, 1}, 1);
    CHECK(p.coeff({0, 0, 1}) == 3);
    CHECK(p.coeff({9, 9, 9}) == 0);
}

TEST_CASE("degrees track the support") {
    Poly p = Poly::monomial({2, 0, 5}) + Poly::monomial({0, 3, 1});
    CHECK(p.degree_d() == 2);
    CHECK(p.degree_x() == 3);
    CHECK(p.degree_q() == 5);
    CHECK(Poly().degree_q() == 0);
}

TEST_CASE("coefficients grow past 64 bits without wrapping") {
    // [70, 35] at q=1 is C(70,35) = 112186277816662845432, above 2^64.
    Poly big = qbinom_poly(70, 35, 1).at_q_one();
    CHECK(big == Poly::constant(BigInt("112186277816662845432")));
}
