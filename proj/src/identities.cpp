#include "overq/identities.hpp"

#include <algorithm>
#include <sstream>

#include "overq/errors.hpp"

namespace overq {

namespace {

nlohmann::json base_params(const SpectrumSet& s) {
    return {{"a", s.base()}, {"N", s.modulus()}};
}

std::uint32_t exp32(std::uint64_t e) {
    if (e > UINT32_MAX) fail(ErrorKind::InvalidArgument, "exponent does not fit 32 bits");
    return static_cast<std::uint32_t>(e);
}

Poly one_minus(const Monomial& m) { return Poly::one() - Poly::monomial(m); }

// prod_{h=1}^{j-1} (1 - x q^{hN})
Poly x_prefix(std::uint32_t j, std::uint32_t modulus) {
    Poly p = Poly::one();
    for (std::uint32_t h = 1; h < j; ++h) p *= one_minus({0, 1, h * modulus});
    return p;
}

// The level-j multiplier of the base member at x q^{jN}:
//   sum_{m=0}^{m_hi} d^m W_{<bound}(j+m)
//     * ( (-1)^{m-1} x^m [j+m-1, m-1] + (-1)^m x^{m+1} [j+m, m] )
// in base q^N; the x comes from folding the leading x q^alpha in. The m = 0
// instance keeps only its second half (the other binomial has a negative
// lower index).
Poly level_bracket(const SpectrumSet& s, std::uint32_t bound, std::uint32_t j,
                   std::uint32_t m_hi) {
    const std::uint32_t N = s.modulus();
    Poly total;
    for (std::uint32_t m = 0; m <= m_hi; ++m) {
        Poly weights = s.restricted_power_sum(bound, j + m);
        if (weights.is_zero()) continue;
        Poly combo;
        if (m >= 1)
            combo += Poly::monomial({m, m, 0}, (m - 1) % 2 ? -1 : 1) *
                     qbinom_poly(j + m - 1, m - 1, N);
        combo += Poly::monomial({m, m + 1, 0}, m % 2 ? -1 : 1) * qbinom_poly(j + m, m, N);
        total += combo * weights;
    }
    return total;
}

// Both removable-smallest-part contributions below table entry i.
Series peel_term(const FFamily& fam, std::uint32_t i) {
    const SpectrumSet& s = fam.spectrum;
    const AlphaEntry& e = s.alpha(i);
    const std::uint32_t vidx = s.alpha_index(e.smallest);
    const std::uint32_t N = s.modulus();
    Series overlined = Series::monomial(fam.window, {0, 1, e.value}) *
                       fam.at(vidx).subst_x(N * e.weight);
    Series plain = Series::monomial(fam.window, {1, 1, e.value}) *
                   fam.at(vidx).subst_x(N * (e.weight - 1));
    return overlined + plain;
}

// d^{m-1} W_{<bound}(j+m-1) + d^m W_{<bound}(j+m)
Poly weight_pair(const SpectrumSet& s, std::uint32_t bound, std::uint32_t m, std::uint32_t j) {
    return Poly::monomial({m - 1, 0, 0}) * s.restricted_power_sum(bound, j + m - 1) +
           Poly::monomial({m, 0, 0}) * s.restricted_power_sum(bound, j + m);
}

}

FFamily build_f_family(const SpectrumSet& s, std::uint32_t q_max, std::uint32_t x_max) {
    Window w{q_max, x_max};
    FFamily fam{s, w, {}};
    fam.members.assign(s.alpha_count(), Series::zero(w));
    std::uint32_t m_cap = std::min(x_max, q_max);  // every part is at least 1
    PTable table = count_p(s, m_cap, m_cap, q_max);
    table.for_each([&](std::uint32_t i, std::uint32_t k, std::uint32_t m, std::uint32_t n,
                       const BigInt& c) { fam.members[i - 1].add_term({k, m, n}, c); });
    return fam;
}

CoeffFamilies build_coeff_families(const SpectrumSet& s) {
    const std::uint32_t r = s.rank();
    const std::uint32_t N = s.modulus();
    const std::uint32_t a_r = s.a(r);
    const std::uint32_t sent = s.sentinel_value();
    CoeffFamilies cf{s, {}, {}, {}, {}, {}};

    auto stair = [&](std::uint32_t k) {  // q^{N k(k+1)/2 + k a(r)}
        return exp32(std::uint64_t(N) * k * (k + 1) / 2 + std::uint64_t(k) * a_r);
    };

    cf.c.assign(r, std::vector<Poly>(r + 1));
    for (std::uint32_t k = 0; k < r; ++k)
        for (std::uint32_t j = 1; j <= r; ++j)
            cf.c[k][j] = Poly::monomial({k, 0, stair(k)}) * qbinom_poly(j - 1, k, N);

    cf.b.assign(r + 2, std::vector<Poly>(r + 1));
    for (std::uint32_t m = 1; m <= r + 1; ++m)
        for (std::uint32_t j = 1; j <= r; ++j)
            cf.b[m][j] = weight_pair(s, sent, m, j) * qbinom_poly(j + m - 1, m - 1, N);

    cf.e.assign(r + 1, std::vector<Poly>(r + 1));
    for (std::uint32_t m = 1; m <= r; ++m)
        for (std::uint32_t j = 0; j <= r; ++j)
            cf.e[m][j] = weight_pair(s, a_r, m, j) * qbinom_poly(j + m - 1, m - 1, N);

    cf.f.assign(r + 1, std::vector<Poly>(r));
    for (std::uint32_t m = 1; m <= r; ++m)
        for (std::uint32_t k = 0; k < r; ++k)
            cf.f[m][k] = Poly::monomial({0, 0, stair(k)}) * qbinom_poly(m - 1, k, N);

    cf.T.assign(r + 1, std::vector<Poly>(r + 1));
    for (std::uint32_t m = 1; m <= r; ++m)
        for (std::uint32_t j = 1; j <= r; ++j)
            for (std::uint32_t k = 0; k <= std::min(j - 1, m - 1); ++k)
                cf.T[m][j] += cf.c[k][j] * cf.b[m - k][j];

    return cf;
}

CheckResult check_lemma2(const FFamily& fam) {
    const SpectrumSet& s = fam.spectrum;
    const Window w = fam.window;
    for (std::uint32_t i = 1; i < s.alpha_count(); ++i) {
        Series lhs = fam.at(i) - fam.at(i + 1);
        nlohmann::json params = base_params(s);
        params["i"] = i;
        CheckResult res = compare_series("lemma2", std::move(params), lhs, peel_term(fam, i), w);
        if (!res.ok()) return res;
    }
    nlohmann::json params = base_params(s);
    params["i"] = s.alpha_count();
    CheckResult res = compare_series("lemma2", std::move(params), fam.at(s.alpha_count()),
                                     fam.at(1).subst_x(s.modulus()), w);
    if (!res.ok()) return res;
    res.params = base_params(s);
    res.params["instances"] = s.alpha_count();
    return res;
}

CheckResult check_intermediate(const FFamily& fam, IntermediateEq which, std::uint32_t k) {
    const SpectrumSet& s = fam.spectrum;
    const std::uint32_t r = s.rank();
    const std::uint32_t N = s.modulus();
    const Window w = fam.window;
    nlohmann::json params = base_params(s);
    params["eq"] = to_string(which);
    params["k"] = k;

    auto member_index = [&](std::uint32_t level) {  // level r+1 means the sentinel
        return level <= r ? s.alpha_index(s.a(level)) : s.alpha_count();
    };

    switch (which) {
    case IntermediateEq::eq35: {
        if (k < 1 || k > r) fail(ErrorKind::InvalidArgument, "eq3.5 needs 1 <= k <= r");
        std::uint32_t upper = member_index(k);
        Series rhs = Series::zero(w);
        for (std::uint32_t i = 1; i < upper; ++i) rhs += peel_term(fam, i);
        return compare_series("intermediate", std::move(params), fam.at(1) - fam.at(upper),
                              rhs, w);
    }
    case IntermediateEq::eq36: {
        if (k < 2 || k > r + 1) fail(ErrorKind::InvalidArgument, "eq3.6 needs 2 <= k <= r+1");
        std::uint32_t lower = member_index(k - 1);
        std::uint32_t upper = member_index(k);
        Series rhs = Series::zero(w);
        for (std::uint32_t i = lower; i < upper; ++i) rhs += peel_term(fam, i);
        return compare_series("intermediate", std::move(params),
                              fam.at(lower) - fam.at(upper), rhs, w);
    }
    case IntermediateEq::eq37: {
        if (k < 2 || k > r) fail(ErrorKind::InvalidArgument, "eq3.7 needs 2 <= k <= r");
        std::uint32_t lower = member_index(k - 1);
        std::uint32_t upper = member_index(k);
        // Raw form carries q^{a(k-1)-N}; both sides are scaled by q^{N-a(k-1)}.
        Series lhs = Series::monomial(w, {0, 0, N - s.a(k - 1)}) *
                     (fam.at(lower) - fam.at(upper));
        Series rhs = Series::monomial(w, {1, 1, N}) * fam.at(lower) +
                     Series::monomial(w, {0, 1, N}) * fam.at(lower).subst_x(N) +
                     fam.at(1).subst_x(N) - fam.at(lower).subst_x(N);
        return compare_series("intermediate", std::move(params), lhs, rhs, w);
    }
    }
    fail(ErrorKind::InvalidArgument, "unknown equation tag");
}

CheckResult check_conj(const FFamily& fam, std::uint32_t k) {
    const SpectrumSet& s = fam.spectrum;
    const std::uint32_t r = s.rank();
    const std::uint32_t N = s.modulus();
    const Window w = fam.window;
    if (k < 1 || k > r + 1) fail(ErrorKind::InvalidArgument, "level must lie in 1..r+1");

    Poly lead = Poly::one();
    for (std::uint32_t j = 1; j < k; ++j) lead *= one_minus({1, 1, s.a(j)});
    Series lhs = Series::from_poly(lead, w) * fam.at(1);

    std::uint32_t bound = k <= r ? s.a(k) : s.sentinel_value();
    Series rhs = fam.at(k <= r ? s.alpha_index(s.a(k)) : s.alpha_count());
    for (std::uint32_t j = 1; j < k; ++j) {
        Poly mult = level_bracket(s, bound, j, k - j - 1) * x_prefix(j, N);
        rhs += Series::from_poly(mult, w) * fam.at(1).subst_x(j * N);
    }
    nlohmann::json params = base_params(s);
    params["k"] = k;
    return compare_series("conj", std::move(params), lhs, rhs, w);
}

CheckResult verify_qdiff(const SpectrumSet& s, const Series& base_member) {
    const std::uint32_t r = s.rank();
    const std::uint32_t N = s.modulus();
    const Window w = base_member.window();

    Poly lead = Poly::one();
    for (std::uint32_t j = 1; j <= r; ++j) lead *= one_minus({1, 1, s.a(j)});
    Series lhs = Series::from_poly(lead, w) * base_member;

    Series rhs = base_member.subst_x(N);
    for (std::uint32_t j = 1; j <= r; ++j) {
        Poly mult = level_bracket(s, s.sentinel_value(), j, r - j) * x_prefix(j, N);
        rhs += Series::from_poly(mult, w) * base_member.subst_x(j * N);
    }
    return compare_series("qdiff", base_params(s), lhs, rhs, w);
}

CheckResult check_qdiff(const FFamily& fam) { return verify_qdiff(fam.spectrum, fam.at(1)); }

Series to_F(const FFamily& fam) {
    const SpectrumSet& s = fam.spectrum;
    const Window w = fam.window;
    Series numerator = pochhammer_product(w, -1, true, true, s.a(s.rank()), s.modulus(), true);
    Series denominator = pochhammer_product(w, -1, false, true, 0, s.modulus(), false);
    return fam.at(1) * numerator * denominator;
}

CheckResult check_eqF(const SpectrumSet& s, const Series& F, const CoeffFamilies& cf) {
    const std::uint32_t r = s.rank();
    const std::uint32_t N = s.modulus();
    const std::uint32_t a_r = s.a(r);
    const Window w = F.window();

    Poly lead = Poly::one();
    for (std::uint32_t j = 1; j <= r; ++j)
        lead += weight_pair(s, a_r, j, 0) * Poly::monomial({0, j, 0}, j % 2 ? -1 : 1);
    Series lhs = Series::from_poly(lead, w) * F;

    Series rhs = F.subst_x(N);
    for (std::uint32_t j = 1; j <= r; ++j) {
        Poly mult;
        for (std::uint32_t l = 1; l <= r; ++l) {
            Poly inner;
            for (std::uint32_t k = 0; k <= std::min(j - 1, l - 1); ++k)
                inner += cf.c[k][j] * cf.b[l - k][j];
            mult += inner * Poly::monomial({0, l, 0}, l % 2 ? 1 : -1);
        }
        if (mult.is_zero()) continue;
        rhs += Series::from_poly(mult, w) * F.subst_x(j * N);
    }
    return compare_series("eqF", base_params(s), lhs, rhs, w);
}

CoefficientSequence extract_A(const Series& F) {
    CoefficientSequence seq{"F", {}};
    Window w0{F.window().q_max, 0};
    seq.entries.assign(F.window().x_max + 1, Series::zero(w0));
    for (const auto& [m, c] : F.terms()) seq.entries[m.x].add_term({m.d, 0, m.q}, c);
    return seq;
}

CheckResult check_recA(const SpectrumSet& s, const CoefficientSequence& A,
                       const CoeffFamilies& cf) {
    const std::uint32_t r = s.rank();
    const std::uint32_t N = s.modulus();
    const std::uint32_t a_r = s.a(r);
    if (A.entries.empty()) fail(ErrorKind::RangeTooSmall, "no coefficient slices");
    const Window w0 = A.entries.front().window();
    const auto n_hi = static_cast<std::uint32_t>(A.entries.size() - 1);

    for (std::uint32_t n = 1; n <= n_hi; ++n) {
        Series lhs = A.entries[n];
        if (std::uint64_t(n) * N <= w0.q_max)
            lhs -= Series::monomial(w0, {0, 0, n * N}) * A.entries[n];
        Series rhs = Series::zero(w0);
        for (std::uint32_t m = 1; m <= std::min(n, r); ++m) {
            Poly mult = weight_pair(s, a_r, m, 0);
            for (std::uint32_t j = 1; j <= r; ++j) {
                std::uint64_t shift = std::uint64_t(j) * N * (n - m);
                if (shift > w0.q_max) continue;
                Poly inner;
                for (std::uint32_t k = 0; k <= std::min(j - 1, m - 1); ++k)
                    inner += cf.c[k][j] * cf.b[m - k][j];
                mult += inner * Poly::monomial({0, 0, static_cast<std::uint32_t>(shift)});
            }
            if (m % 2 == 0) mult = -mult;
            rhs += Series::from_poly(mult, w0) * A.entries[n - m];
        }
        nlohmann::json params = base_params(s);
        params["n"] = n;
        CheckResult res = compare_series("recA", std::move(params), lhs, rhs, w0);
        if (!res.ok()) return res;
    }
    CheckResult res;
    res.name = "recA";
    res.params = base_params(s);
    res.params["n_max"] = n_hi;
    res.exact_region = w0;
    return res;
}

CheckResult check_T_identity(const SpectrumSet& s, std::uint32_t m, std::uint32_t j) {
    const std::uint32_t r = s.rank();
    if (m < 1 || m > r || j < 1 || j > r)
        fail(ErrorKind::InvalidArgument, "pair indices must lie in 1..r");
    CoeffFamilies cf = build_coeff_families(s);
    const Poly& lhs = cf.T[m][j];
    Poly rhs;
    for (std::uint32_t k = 0; k <= std::min(m - 1, j); ++k)
        rhs += cf.f[m][k] * cf.e[m][j - k];
    Poly tail;
    for (std::uint32_t k = 0; k <= std::min(m - 1, j - 1); ++k)
        tail += cf.f[m][k] * cf.e[m][j - k - 1];
    rhs += Poly::monomial({0, 0, s.a(r)}) * tail;
    nlohmann::json params = base_params(s);
    params["part"] = "pair";
    params["m"] = m;
    params["j"] = j;
    return compare_poly("T-identity", std::move(params), lhs, rhs);
}

CheckResult check_equalityqbin(const SpectrumSet& s, std::int64_t j, std::int64_t k,
                               std::int64_t m) {
    const std::uint32_t N = s.modulus();
    Poly lhs = qbinom_poly(m - 1, k, N) * qbinom_poly(j + m - k - 1, m - 1, N);
    Poly rhs = qbinom_poly(j, k, N) * qbinom_poly(j + m - k - 1, m - k - 1, N);
    nlohmann::json params = base_params(s);
    params["part"] = "exchange";
    params["j"] = j;
    params["k"] = k;
    params["m"] = m;
    return compare_poly("T-identity", std::move(params), lhs, rhs);
}

CheckResult check_S_assembly(const SpectrumSet& s, std::uint32_t m) {
    const std::uint32_t r = s.rank();
    if (m < 1 || m > r) fail(ErrorKind::InvalidArgument, "multiplier index must lie in 1..r");
    CoeffFamilies cf = build_coeff_families(s);

    // z := q^{N(n-m)} stays formal and occupies the x slot.
    Poly lhs = weight_pair(s, s.a(r), m, 0);
    for (std::uint32_t j = 1; j <= r; ++j) lhs += cf.T[m][j] * Poly::monomial({0, j, 0});

    Poly rhs;
    for (std::uint32_t nu = 0; nu < r; ++nu)
        for (std::uint32_t mu = 0; mu <= std::min(m - 1, nu); ++mu)
            rhs += cf.f[m][mu] * cf.e[m][nu - mu] * Poly::monomial({0, nu, 0});
    Poly tail;
    for (std::uint32_t nu = 1; nu <= r; ++nu)
        for (std::uint32_t mu = 0; mu + 1 <= std::min(m, nu); ++mu)
            tail += cf.f[m][mu] * cf.e[m][nu - mu - 1] * Poly::monomial({0, nu, 0});
    rhs += Poly::monomial({0, 0, s.a(r)}) * tail;

    nlohmann::json params = base_params(s);
    params["part"] = "assembly";
    params["m"] = m;
    return compare_poly("T-identity", std::move(params), lhs, rhs);
}

CheckResult check_pascal(const QBinomProvider& qb, std::int64_t m_max, std::uint32_t step) {
    nlohmann::json params{{"step", step}, {"m_max", m_max}};
    for (std::int64_t m = 1; m <= m_max; ++m)
        for (std::int64_t r = 0; r <= m; ++r) {
            Poly lhs = qb(m, r, step);
            Poly low = Poly::monomial({0, 0, exp32(std::uint64_t(step) * r)}) *
                           qb(m - 1, r, step) +
                       qb(m - 1, r - 1, step);
            Poly high = qb(m - 1, r, step) +
                        Poly::monomial({0, 0, exp32(std::uint64_t(step) * (m - r))}) *
                            qb(m - 1, r - 1, step);
            for (int variant = 1; variant <= 2; ++variant) {
                nlohmann::json p = params;
                p["m"] = m;
                p["r"] = r;
                p["variant"] = variant;
                CheckResult res =
                    compare_poly("pascal", std::move(p), lhs, variant == 1 ? low : high);
                if (!res.ok()) return res;
            }
        }
    CheckResult res;
    res.name = "pascal";
    res.params = std::move(params);
    return res;
}

CheckResult check_qbinom_theorem(const QBinomProvider& qb, std::int64_t n_max,
                                 std::uint32_t step) {
    nlohmann::json params{{"step", step}, {"n_max", n_max}};
    for (std::int64_t n = 0; n <= n_max; ++n) {
        Poly lhs = Poly::one();
        for (std::int64_t k = 0; k < n; ++k)
            lhs *= Poly::one() + Poly::monomial({0, 1, exp32(std::uint64_t(step) * k)});
        Poly rhs;
        for (std::int64_t k = 0; k <= n; ++k)
            rhs += Poly::monomial(
                       {0, static_cast<std::uint32_t>(k),
                        exp32(std::uint64_t(step) * k * (k - 1) / 2)}) *
                   qb(n, k, step);
        nlohmann::json p = params;
        p["n"] = n;
        CheckResult res = compare_poly("qbinom-theorem", std::move(p), lhs, rhs);
        if (!res.ok()) return res;
    }
    CheckResult res;
    res.name = "qbinom-theorem";
    res.params = std::move(params);
    return res;
}

Series descend(const FFamily& fam) {
    const SpectrumSet& s = fam.spectrum;
    if (s.rank() < 2)
        fail(ErrorKind::RankTooSmall, "descent removes the largest base value; rank 1 has none");
    const std::uint32_t N = s.modulus();
    const std::uint32_t a_r = s.a(s.rank());
    const Window w = fam.window;
    const Window w0{w.q_max, 0};

    CoefficientSequence A = extract_A(to_F(fam));

    Series inv_acc = Series::one(w0);  // prod_{k<n} 1/(1 + q^{Nk + a(r)}), grown as n does
    Series G = Series::zero(w);
    for (std::uint32_t n = 0; n < A.entries.size(); ++n) {
        if (n >= 1) {
            std::uint64_t e = std::uint64_t(N) * (n - 1) + a_r;
            if (e <= w0.q_max)
                inv_acc = inv_acc * invert_one_minus(Series::monomial(
                                        w0, {0, 0, static_cast<std::uint32_t>(e)}, -1));
        }
        Series slice = A.entries[n] * inv_acc;
        for (const auto& [mono, c] : slice.terms()) G.add_term({mono.d, n, mono.q}, c);
    }
    return G * pochhammer_product(w, -1, false, true, 0, N, true);
}

Series solve_r1(std::uint32_t a1, std::uint32_t modulus, Window w) {
    if (a1 == 0 || modulus < a1)
        fail(ErrorKind::InvalidArgument, "need 0 < a1 <= modulus");
    Series numerator = pochhammer_product(w, 1, false, true, a1, modulus, true);
    Series denominator = pochhammer_product(w, -1, true, true, a1, modulus, false);
    return numerator * denominator;
}

Series product_formula(const SpectrumSet& s, std::uint32_t q_max) {
    const Window w0{q_max, 0};
    Series acc = Series::one(w0);
    for (std::uint32_t k = 1; k <= s.rank(); ++k) {
        acc = acc * pochhammer_product(w0, 1, false, false, s.a(k), s.modulus(), true);
        acc = acc * pochhammer_product(w0, -1, true, false, s.a(k), s.modulus(), false);
    }
    return acc;
}

std::string TheoremTable::to_csv() const {
    std::ostringstream out;
    out << "n,k,D,E,match\n";
    for (const auto& row : rows)
        out << row.n << ',' << row.k << ',' << row.D.get_str() << ',' << row.E.get_str() << ','
            << (row.match() ? "yes" : "no") << '\n';
    return out.str();
}

TheoremTable check_theorem(const SpectrumSet& s, std::uint32_t q_max) {
    TheoremTable table;
    CountTable d_table = count_D(s, q_max, q_max);
    CountTable e_table = count_E(s, q_max, q_max);
    FFamily fam = build_f_family(s, q_max, q_max / s.a(1));
    Series f_at_one = fam.at(1).eval_x_one();
    Series product = product_formula(s, q_max);

    table.result.name = "theorem";
    table.result.params = base_params(s);
    table.result.params["q_max"] = q_max;
    table.result.exact_region = Window{q_max, 0};

    static const char* kRouteNames[] = {"E", "f-at-1", "product"};
    for (std::uint32_t n = 0; n <= q_max; ++n)
        for (std::uint32_t k = 0; k <= n; ++k) {
            TheoremRow row{n, k, d_table.at(k, n), e_table.at(k, n),
                           f_at_one.coefficient({k, 0, n}), product.coefficient({k, 0, n})};
            if (row.D == 0 && row.E == 0 && row.f_at_one == 0 && row.product == 0) continue;
            if (!row.match() && table.result.status == CheckStatus::ok) {
                table.result.status = CheckStatus::fail;
                const BigInt* routes[] = {&row.E, &row.f_at_one, &row.product};
                for (int i = 0; i < 3; ++i)
                    if (*routes[i] != row.D) {
                        table.result.params["route"] = kRouteNames[i];
                        table.result.counterexample = Counterexample{
                            Monomial{k, 0, n}, row.D.get_str(), routes[i]->get_str()};
                        break;
                    }
            }
            table.rows.push_back(std::move(row));
        }
    return table;
}

}
