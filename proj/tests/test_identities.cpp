#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overq/checks.hpp"
#include "overq/errors.hpp"
#include "overq/identities.hpp"

using namespace overq;

namespace {

const std::uint32_t kQ = 14;
const Window kW{kQ, kQ};

FFamily family_127() { return build_f_family(SpectrumSet({1, 2, 4}, 7), kQ, kQ); }

}

TEST_CASE("family shape and base normalization") {
    FFamily fam = family_127();
    CHECK(fam.members.size() == 8);
    for (std::uint32_t i = 1; i <= 8; ++i) CHECK(fam.at(i).coefficient({0, 0, 0}) == 1);
    // the member with the loosest floor dominates the others coefficientwise
    CHECK(fam.at(1).terms().size() >= fam.at(5).terms().size());
}

TEST_CASE("member differences peel one part") {
    CHECK(check_lemma2(family_127()).status == CheckStatus::ok);
}

TEST_CASE("telescoped difference forms") {
    FFamily fam = family_127();
    for (std::uint32_t k = 1; k <= 3; ++k)
        CHECK(check_intermediate(fam, IntermediateEq::eq35, k).status == CheckStatus::ok);
    for (std::uint32_t k = 2; k <= 4; ++k)
        CHECK(check_intermediate(fam, IntermediateEq::eq36, k).status == CheckStatus::ok);
    for (std::uint32_t k = 2; k <= 3; ++k)
        CHECK(check_intermediate(fam, IntermediateEq::eq37, k).status == CheckStatus::ok);
    CHECK_THROWS_AS(check_intermediate(fam, IntermediateEq::eq37, 5), Error);
}

TEST_CASE("level equations and the closed q-difference form agree") {
    FFamily fam = family_127();
    for (std::uint32_t k = 1; k <= 4; ++k)
        CHECK(check_conj(fam, k).status == CheckStatus::ok);
    CHECK(check_qdiff(fam).status == CheckStatus::ok);
    // the sentinel member really is the base member at x q^N, so the two
    // formulations above assert the same equation
    Series shifted = fam.at(1).subst_x(7);
    CHECK(compare_series("eqf2", {}, fam.at(8), shifted, kW).status == CheckStatus::ok);
}

TEST_CASE("transformed series satisfies the polynomial-coefficient equation") {
    SpectrumSet s({1, 2, 4}, 7);
    FFamily fam = family_127();
    CoeffFamilies cf = build_coeff_families(s);
    Series F = to_F(fam);
    CHECK(F.coefficient({0, 0, 0}) == 1);
    CHECK(check_eqF(s, F, cf).status == CheckStatus::ok);

    CoefficientSequence A = extract_A(F);
    CHECK(A.entries.size() == kQ + 1);
    CHECK(A.entries[0].coefficient({0, 0, 0}) == 1);
    CHECK(check_recA(s, A, cf).status == CheckStatus::ok);
}

TEST_CASE("multiplier families match under the binomial exchange") {
    SpectrumSet s({1, 2, 4}, 7);
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (std::uint32_t j = 1; j <= 3; ++j)
            CHECK(check_T_identity(s, m, j).status == CheckStatus::ok);
        CHECK(check_S_assembly(s, m).status == CheckStatus::ok);
    }
    for (std::int64_t j = 0; j <= 4; ++j)
        for (std::int64_t k = 0; k <= 4; ++k)
            for (std::int64_t m = 0; m <= 4; ++m)
                CHECK(check_equalityqbin(s, j, k, m).status == CheckStatus::ok);
}

TEST_CASE("triangle recurrences through the provider seam") {
    QBinomProvider builtin = [](std::int64_t m, std::int64_t r, std::uint32_t step) {
        return qbinom_poly(m, r, step);
    };
    CHECK(check_pascal(builtin, 8, 1).status == CheckStatus::ok);
    CHECK(check_pascal(builtin, 8, 7).status == CheckStatus::ok);
    CHECK(check_qbinom_theorem(builtin, 6, 1).status == CheckStatus::ok);

    QBinomProvider poisoned = [&](std::int64_t m, std::int64_t r, std::uint32_t step) {
        Poly p = qbinom_poly(m, r, step);
        if (m == 5 && r == 2) p += Poly::one();
        return p;
    };
    CheckResult res = check_pascal(poisoned, 8, 1);
    REQUIRE(res.status == CheckStatus::fail);
    CHECK(res.counterexample.has_value());
    CHECK(check_qbinom_theorem(poisoned, 6, 1).status == CheckStatus::fail);
}

TEST_CASE("rank descent reaches the enumerated smaller families") {
    FFamily fam3 = family_127();
    Series g2 = descend(fam3);
    SpectrumSet s2({1, 2}, 7);
    FFamily fam2 = build_f_family(s2, kQ, kQ);
    CHECK(compare_series("d", {}, g2, fam2.at(1), kW).status == CheckStatus::ok);

    Series g1 = descend(fam2);
    SpectrumSet s1({1}, 7);
    FFamily fam1 = build_f_family(s1, kQ, kQ);
    CHECK(compare_series("d", {}, g1, fam1.at(1), kW).status == CheckStatus::ok);
    CHECK(verify_qdiff(s1, g1).status == CheckStatus::ok);

    CHECK(compare_series("d", {}, solve_r1(1, 7, kW), fam1.at(1), kW).status ==
          CheckStatus::ok);
    CHECK_THROWS_AS(descend(fam1), Error);
}

TEST_CASE("closed rank-1 form counts every overpartition") {
    Window w{10, 10};
    Series closed = solve_r1(1, 1, w);
    FFamily fam = build_f_family(SpectrumSet({1}, 1), 10, 10);
    CHECK(compare_series("r1", {}, closed, fam.at(1), w).status == CheckStatus::ok);
    Series at_one = closed.eval_x_one();
    Series product = product_formula(SpectrumSet({1}, 1), 10);
    CHECK(compare_series("r1", {}, at_one, product, at_one.window()).status ==
          CheckStatus::ok);
}

TEST_CASE("product formula d-free slice for 1,2 mod 3") {
    Series p = product_formula(SpectrumSet({1, 2}, 3), 6);
    const int plain[] = {1, 1, 1, 1, 1, 2, 2};
    for (std::uint32_t n = 0; n <= 6; ++n) CHECK(p.coefficient({0, 0, n}) == plain[n]);
}

TEST_CASE("four routes agree and the table serializes") {
    TheoremTable t = check_theorem(SpectrumSet({1, 2}, 3), 12);
    CHECK(t.result.status == CheckStatus::ok);
    CHECK(!t.rows.empty());
    for (const auto& row : t.rows) CHECK(row.match());
    CHECK(t.to_csv().rfind("n,k,D,E,match\n", 0) == 0);
}

TEST_CASE("planted faults are detected by the responsible check") {
    SpectrumSet s({1, 2, 4}, 7);

    SUBCASE("family coefficient vs peel chain") {
        FFamily fam = family_127();
        fam.members[2].add_term({1, 2, 6}, 1);
        CheckResult res = check_lemma2(fam);
        REQUIRE(res.status == CheckStatus::fail);
        CHECK(res.counterexample.has_value());
    }
    SUBCASE("base member vs q-difference equation") {
        FFamily fam = family_127();
        fam.members[0].add_term({0, 1, 3}, 1);
        CHECK(check_qdiff(fam).status == CheckStatus::fail);
    }
    SUBCASE("transformed series vs its equation") {
        FFamily fam = family_127();
        Series F = to_F(fam);
        CoeffFamilies cf = build_coeff_families(s);
        F.add_term({1, 1, 5}, 1);
        CHECK(check_eqF(s, F, cf).status == CheckStatus::fail);
    }
    SUBCASE("slice sequence vs recurrence") {
        CoeffFamilies cf = build_coeff_families(s);
        CoefficientSequence A = extract_A(to_F(family_127()));
        A.entries[3].add_term({0, 0, 9}, 1);
        CheckResult res = check_recA(s, A, cf);
        REQUIRE(res.status == CheckStatus::fail);
        CHECK(res.counterexample.has_value());
    }
    SUBCASE("equation coefficient vs transformed series") {
        FFamily fam = family_127();
        Series F = to_F(fam);
        CoeffFamilies cf = build_coeff_families(s);
        cf.c[1][2].add_term({0, 0, 2}, 1);
        CHECK(check_eqF(s, F, cf).status == CheckStatus::fail);
    }
}

TEST_CASE("registry names resolve and run") {
    CHECK(check_registry().size() == 13);
    for (const auto& spec : check_registry()) CHECK(is_known_check(spec.name));
    CHECK(is_known_check("all"));
    CHECK_FALSE(is_known_check("lemma3"));

    SpectrumSet s({1, 2}, 3);
    RunContext ctx(s, Window{10, 10}, 10);
    CHECK_THROWS_AS(run_checks(ctx, {"nope"}), Error);
    auto rs = run_checks(ctx, {"lemma2", "lemma2"});
    CHECK(rs.size() == 1);
    auto sorted = run_checks(ctx, {"qdiff", "lemma2"});
    CHECK(sorted.front().name == "lemma2");
    // lazy state is shared between checks in one context
    const FFamily& f1 = ctx.family();
    const FFamily& f2 = ctx.family();
    CHECK(&f1 == &f2);
}
