#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overq/errors.hpp"
#include "overq/spectrum.hpp"

using namespace overq;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

}

TEST_CASE("subset-sum table for 1,2,4 mod 7") {
    SpectrumSet s({1, 2, 4}, 7);
    CHECK(s.rank() == 3);
    CHECK(s.alpha_count() == 8);
    // value, weight, smallest per entry; the table is 1..7 plus sentinel 8.
    const std::uint32_t weight[] = {1, 1, 2, 1, 2, 2, 3};
    const std::uint32_t smallest[] = {1, 2, 1, 4, 1, 2, 1};
    for (std::uint32_t i = 1; i <= 7; ++i) {
        CHECK(s.alpha(i).value == i);
        CHECK(s.alpha(i).weight == weight[i - 1]);
        CHECK(s.alpha(i).smallest == smallest[i - 1]);
        CHECK_FALSE(s.alpha(i).sentinel);
    }
    CHECK(s.alpha(8).value == 8);
    CHECK(s.alpha(8).sentinel);
    CHECK(s.sentinel_value() == 8);
}

TEST_CASE("base values sit at doubling positions") {
    for (const SpectrumSet& s :
         {SpectrumSet({1, 2}, 3), SpectrumSet({1, 2, 4}, 7), SpectrumSet({1, 2, 4, 8}, 15)}) {
        for (std::uint32_t k = 1; k <= s.rank(); ++k)
            CHECK(s.alpha(1u << (k - 1)).value == s.a(k));
    }
}

TEST_CASE("least positive residue never returns zero") {
    SpectrumSet s({1, 2, 4}, 7);
    CHECK(s.beta(7) == 7);
    CHECK(s.beta(14) == 7);
    CHECK(s.beta(15) == 1);
    CHECK(s.beta(4) == 4);
}

TEST_CASE("gap table mod 7") {
    SpectrumSet s({1, 2, 4}, 7);
    const std::int64_t plain[] = {0, 0, 5, 0, 3, 3, 8};
    for (std::uint32_t b = 1; b <= 7; ++b) {
        CHECK(s.gap(b, false) == plain[b - 1]);
        CHECK(s.gap(b, true) == plain[b - 1] + 7);
    }
}

TEST_CASE("gap table mod 3") {
    SpectrumSet s({1, 2}, 3);
    CHECK(s.gap(1, false) == 0);
    CHECK(s.gap(2, false) == 0);
    CHECK(s.gap(3, false) == 1);
    CHECK(s.gap(1, true) == 3);
    CHECK(s.gap(3, true) == 4);
}

TEST_CASE("validation failures carry the right kind") {
    CHECK(kind_of([] { SpectrumSet({1, 2, 3}, 7); }) == ErrorKind::CollidingSums);
    CHECK(kind_of([] { SpectrumSet({2, 3, 4}, 15); }) == ErrorKind::PrefixSumViolation);
    CHECK(kind_of([] { SpectrumSet({1, 2}, 2); }) == ErrorKind::ModulusTooSmall);
    CHECK(kind_of([] { SpectrumSet({}, 5); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { SpectrumSet({2, 1}, 9); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { SpectrumSet({0, 1}, 9); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("alpha index lookup") {
    SpectrumSet s({1, 2}, 3);
    CHECK(s.alpha_index(3) == 3);
    CHECK(s.in_alpha_set(2));
    CHECK(s.in_alpha_set(4));  // table membership includes the sentinel
    CHECK_FALSE(s.in_alpha_set(9));
    CHECK(kind_of([&] { s.alpha_index(9); }) == ErrorKind::NotInAlphaTable);
}

TEST_CASE("restricted power sums") {
    SpectrumSet s({1, 2, 4}, 7);
    CHECK(s.restricted_power_sum(4, 0) == Poly::one());
    // weight-2 sums below the sentinel: 3, 5, 6.
    Poly two;
    two.add_term({0, 0, 3}, 1);
    two.add_term({0, 0, 5}, 1);
    two.add_term({0, 0, 6}, 1);
    CHECK(s.restricted_power_sum(s.sentinel_value(), 2) == two);
    // weight-2 sums below a(3)=4: only 3 = 1+2.
    CHECK(s.restricted_power_sum(4, 2) == Poly::monomial({0, 0, 3}));
    // more summands than base values below the bound: empty.
    CHECK(s.restricted_power_sum(4, 3).is_zero());
    CHECK(s.restricted_power_sum(s.sentinel_value(), 3) == Poly::monomial({0, 0, 7}));
    // bounds must be base values or the sentinel, not arbitrary subset sums
    CHECK(kind_of([&] { s.restricted_power_sum(3, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gap of the sentinel residue uses the full-weight row") {
    // beta = N itself is the largest subset sum when the modulus equals it.
    SpectrumSet s({1, 2}, 3);
    CHECK(s.gap(3, false) == 3 * (2 - 1) + 1 - 3);  // N(w-1) + v - beta
}

TEST_CASE("json echo of the table") {
    SpectrumSet s({1, 2}, 3);
    auto j = s.to_json();
    CHECK(j["a"] == nlohmann::json({1, 2}));
    CHECK(j["N"] == 3);
    CHECK(j["alpha"].size() == 4);
    CHECK(j["alpha"][2]["weight"] == 2);
}
