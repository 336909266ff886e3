#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overq/enumeration.hpp"
#include "overq/errors.hpp"

using namespace overq;

TEST_CASE("multiset side counts all overpartitions when every residue is admitted") {
    SpectrumSet s({1}, 1);
    CountTable t = count_D(s, 6, 6);
    const int totals[] = {1, 2, 4, 8, 14, 24, 40};
    for (std::uint32_t n = 0; n <= 6; ++n) CHECK(t.row_total(n) == totals[n]);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(4, 4) == 1);  // 1+1+1+1 with nothing overlined
}

TEST_CASE("gap side at k=0 for 1,2 mod 3") {
    SpectrumSet s({1, 2}, 3);
    CountTable t = count_E(s, 0, 10);
    const int counts[] = {1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4};
    for (std::uint32_t n = 0; n <= 10; ++n) CHECK(t.at(0, n) == counts[n]);
}

TEST_CASE("witnesses are canonical, distinct, and satisfy the claimed side") {
    SpectrumSet s({1, 2}, 3);

    auto gap_witnesses = list_witnesses(s, Side::E, 0, 7);
    CHECK(gap_witnesses.size() == 3);
    for (const auto& w : gap_witnesses) {
        CHECK(w.canonical());
        CHECK(w.sum() == 7);
        CHECK(w.non_overlined() == 0);
        for (std::size_t i = 0; i + 1 < w.parts.size(); ++i) {
            const Part& lower = w.parts[i + 1];
            std::uint32_t need = s.gap(s.beta(lower.value), lower.overlined);
            CHECK(w.parts[i].value - lower.value >= need);
        }
    }
    for (std::size_t i = 0; i + 1 < gap_witnesses.size(); ++i)
        CHECK_FALSE(gap_witnesses[i] == gap_witnesses[i + 1]);

    auto multiset_witnesses = list_witnesses(s, Side::D, 1, 5);
    SpectrumSet base_only({1, 2}, 3);
    for (const auto& w : multiset_witnesses) {
        CHECK(w.canonical());
        CHECK(w.sum() == 5);
        CHECK(w.non_overlined() == 1);
        for (const Part& p : w.parts) {
            std::uint32_t res = base_only.beta(p.value);
            CHECK((res == 1 || res == 2));
        }
    }
    CHECK(multiset_witnesses.size() == count_D(s, 5, 5).at(1, 5));
}

TEST_CASE("canonical ordering rules") {
    Overpartition good{{{5, true}, {5, false}, {2, false}}};
    CHECK(good.canonical());
    Overpartition swapped{{{5, false}, {5, true}}};
    CHECK_FALSE(swapped.canonical());
    Overpartition two_overlines{{{5, true}, {5, true}}};
    CHECK_FALSE(two_overlines.canonical());
    Overpartition increasing{{{2, false}, {5, false}}};
    CHECK_FALSE(increasing.canonical());
}

TEST_CASE("refined table marginals reproduce the gap side") {
    SpectrumSet s({1, 2}, 3);
    PTable p = count_p(s, 10, 10, 10);
    CountTable e = count_E(s, 10, 10);
    for (std::uint32_t k = 0; k <= 10; ++k)
        for (std::uint32_t n = 0; n <= 10; ++n) {
            BigInt total = 0;
            for (std::uint32_t m = 0; m <= 10; ++m) total += p.at(1, k, m, n);
            CHECK(total == e.at(k, n));
        }
}

TEST_CASE("tighter smallest-part floors only shrink counts") {
    SpectrumSet s({1, 2, 4}, 7);
    PTable p = count_p(s, 8, 8, 8);
    for (std::uint32_t i = 1; i < s.alpha_count(); ++i)
        for (std::uint32_t k = 0; k <= 8; ++k)
            for (std::uint32_t m = 0; m <= 8; ++m)
                for (std::uint32_t n = 0; n <= 8; ++n)
                    CHECK(p.at(i, k, m, n) >= p.at(i + 1, k, m, n));
}

TEST_CASE("peeling recurrences hold on the oracle table") {
    SpectrumSet s({1, 2, 4}, 7);
    PTable p = count_p(s, 12, 12, 12);
    CheckResult res = check_lemma1(p);
    CHECK(res.status == CheckStatus::ok);
}

TEST_CASE("a planted table error is found and located") {
    SpectrumSet s({1, 2}, 3);
    PTable p = count_p(s, 8, 8, 8);
    p.add(2, 0, 1, 5, 1);
    CheckResult res = check_lemma1(p);
    REQUIRE(res.status == CheckStatus::fail);
    REQUIRE(res.counterexample.has_value());
    CHECK(res.counterexample->lhs != res.counterexample->rhs);
}

TEST_CASE("table lookups outside the built range are refused") {
    SpectrumSet s({1}, 1);
    CountTable t = count_D(s, 3, 3);
    CHECK_THROWS_AS(t.at(0, 4), Error);
    CHECK_THROWS_AS(t.at(4, 2), Error);
    PTable p = count_p(s, 3, 3, 3);
    CHECK(p.at(1, -1, 0, 0) == 0);
    CHECK(p.at(1, 0, 2, -5) == 0);
    CHECK_THROWS_AS(p.at(1, 0, 0, 4), Error);
}

TEST_CASE("count table csv layout") {
    SpectrumSet s({1}, 1);
    CountTable t = count_D(s, 2, 2);
    std::string csv = t.to_csv();
    CHECK(csv.rfind("n,k,count\n", 0) == 0);
    CHECK(csv.find("2,1,2\n") != std::string::npos);
}
