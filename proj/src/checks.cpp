#include "overq/checks.hpp"

#include <algorithm>
#include <set>

#include "overq/errors.hpp"

namespace overq {

const PTable& RunContext::ptable() {
    if (!ptable_) {
        std::uint32_t t = table_q_max_;
        ptable_.emplace(count_p(spectrum_, t, t, t));
    }
    return *ptable_;
}

const FFamily& RunContext::family() {
    if (!family_) family_.emplace(build_f_family(spectrum_, window_.q_max, window_.x_max));
    return *family_;
}

const Series& RunContext::F() {
    if (!F_) F_.emplace(to_F(family()));
    return *F_;
}

const CoefficientSequence& RunContext::A() {
    if (!A_) A_.emplace(extract_A(F()));
    return *A_;
}

const CoeffFamilies& RunContext::coeffs() {
    if (!coeffs_) coeffs_.emplace(build_coeff_families(spectrum_));
    return *coeffs_;
}

namespace {

std::vector<CheckResult> one(CheckResult r) {
    std::vector<CheckResult> v;
    v.push_back(std::move(r));
    return v;
}

std::vector<CheckResult> run_intermediate(RunContext& ctx) {
    const std::uint32_t r = ctx.spectrum().rank();
    std::vector<CheckResult> out;
    for (std::uint32_t k = 1; k <= r; ++k)
        out.push_back(check_intermediate(ctx.family(), IntermediateEq::eq35, k));
    for (std::uint32_t k = 2; k <= r + 1; ++k)
        out.push_back(check_intermediate(ctx.family(), IntermediateEq::eq36, k));
    for (std::uint32_t k = 2; k <= r; ++k)
        out.push_back(check_intermediate(ctx.family(), IntermediateEq::eq37, k));
    return out;
}

std::vector<CheckResult> run_conj(RunContext& ctx) {
    std::vector<CheckResult> out;
    for (std::uint32_t k = 1; k <= ctx.spectrum().rank() + 1; ++k)
        out.push_back(check_conj(ctx.family(), k));
    return out;
}

std::vector<CheckResult> run_pascal(RunContext& ctx) {
    QBinomProvider builtin = [](std::int64_t m, std::int64_t r, std::uint32_t step) {
        return qbinom_poly(m, r, step);
    };
    std::vector<CheckResult> out;
    for (std::uint32_t step : {std::uint32_t{1}, ctx.spectrum().modulus()})
        out.push_back(check_pascal(builtin, 12, step));
    return out;
}

std::vector<CheckResult> run_qbinom_theorem(RunContext& ctx) {
    QBinomProvider builtin = [](std::int64_t m, std::int64_t r, std::uint32_t step) {
        return qbinom_poly(m, r, step);
    };
    std::vector<CheckResult> out;
    for (std::uint32_t step : {std::uint32_t{1}, ctx.spectrum().modulus()})
        out.push_back(check_qbinom_theorem(builtin, 8, step));
    return out;
}

std::vector<CheckResult> run_T_identity(RunContext& ctx) {
    const SpectrumSet& s = ctx.spectrum();
    const std::uint32_t r = s.rank();
    std::vector<CheckResult> out;
    for (std::uint32_t m = 1; m <= r; ++m)
        for (std::uint32_t j = 1; j <= r; ++j) {
            CheckResult res = check_T_identity(s, m, j);
            if (!res.ok()) return one(std::move(res));
        }
    for (std::int64_t j = 0; j <= r; ++j)
        for (std::int64_t k = 0; k <= r; ++k)
            for (std::int64_t m = 0; m <= r; ++m) {
                CheckResult res = check_equalityqbin(s, j, k, m);
                if (!res.ok()) return one(std::move(res));
            }
    for (std::uint32_t m = 1; m <= r; ++m) {
        CheckResult res = check_S_assembly(s, m);
        if (!res.ok()) return one(std::move(res));
    }
    CheckResult res;
    res.name = "T-identity";
    res.params = {{"a", s.base()}, {"N", s.modulus()}, {"pairs", r * r}};
    return one(std::move(res));
}

std::vector<CheckResult> run_descend(RunContext& ctx) {
    const SpectrumSet& s = ctx.spectrum();
    if (s.rank() < 2) {
        CheckResult res;
        res.name = "descend";
        res.params = {{"a", s.base()}, {"N", s.modulus()}};
        res.status = CheckStatus::skipped;
        res.params["reason"] = "rank 1 has nothing to remove";
        return one(std::move(res));
    }
    Series g = descend(ctx.family());
    std::vector<std::uint32_t> reduced_base(s.base().begin(), s.base().end() - 1);
    SpectrumSet reduced(reduced_base, s.modulus());

    nlohmann::json params{{"a", s.base()}, {"N", s.modulus()}};
    params["stage"] = "match";
    FFamily reduced_family = build_f_family(reduced, g.window().q_max, g.window().x_max);
    CheckResult match =
        compare_series("descend", params, g, reduced_family.at(1), g.window());

    params["stage"] = "equation";
    CheckResult equation = verify_qdiff(reduced, g);
    equation.name = "descend";
    equation.params = params;

    std::vector<CheckResult> out;
    out.push_back(std::move(match));
    out.push_back(std::move(equation));
    return out;
}

std::vector<CheckResult> run_r1_closed_form(RunContext& ctx) {
    const SpectrumSet& s = ctx.spectrum();
    SpectrumSet r1({s.a(1)}, s.modulus());
    const Window w = ctx.window();

    nlohmann::json params{{"a1", s.a(1)}, {"N", s.modulus()}};
    Series closed = solve_r1(s.a(1), s.modulus(), w);

    params["stage"] = "match";
    FFamily fam = build_f_family(r1, w.q_max, w.x_max);
    CheckResult match = compare_series("r1-closed-form", params, closed, fam.at(1), w);

    params["stage"] = "equation";
    CheckResult equation = verify_qdiff(r1, closed);
    equation.name = "r1-closed-form";
    equation.params = params;

    params["stage"] = "product";
    Window wide{w.q_max, w.q_max / s.a(1)};
    Series at_one = solve_r1(s.a(1), s.modulus(), wide).eval_x_one();
    CheckResult product = compare_series("r1-closed-form", params, at_one,
                                         product_formula(r1, w.q_max), at_one.window());

    std::vector<CheckResult> out;
    out.push_back(std::move(match));
    out.push_back(std::move(equation));
    out.push_back(std::move(product));
    return out;
}

}

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry = {
        {"lemma1", [](RunContext& ctx) { return one(check_lemma1(ctx.ptable())); }},
        {"lemma2", [](RunContext& ctx) { return one(check_lemma2(ctx.family())); }},
        {"intermediate", run_intermediate},
        {"conj", run_conj},
        {"qdiff", [](RunContext& ctx) { return one(check_qdiff(ctx.family())); }},
        {"pascal", run_pascal},
        {"qbinom-theorem", run_qbinom_theorem},
        {"eqF", [](RunContext& ctx) {
             return one(check_eqF(ctx.spectrum(), ctx.F(), ctx.coeffs()));
         }},
        {"recA", [](RunContext& ctx) {
             return one(check_recA(ctx.spectrum(), ctx.A(), ctx.coeffs()));
         }},
        {"T-identity", run_T_identity},
        {"descend", run_descend},
        {"r1-closed-form", run_r1_closed_form},
        {"theorem", [](RunContext& ctx) {
             return one(check_theorem(ctx.spectrum(), ctx.table_q_max()).result);
         }},
    };
    return registry;
}

bool is_known_check(const std::string& name) {
    if (name == "all") return true;
    for (const auto& spec : check_registry())
        if (spec.name == name) return true;
    return false;
}

std::vector<CheckResult> run_checks(RunContext& ctx, const std::vector<std::string>& selector) {
    for (const auto& name : selector)
        if (!is_known_check(name)) fail(ErrorKind::InvalidArgument, "unknown check: " + name);

    std::set<std::string> wanted(selector.begin(), selector.end());
    bool everything = wanted.empty() || wanted.count("all");

    std::vector<CheckResult> results;
    for (const auto& spec : check_registry()) {
        if (!everything && !wanted.count(spec.name)) continue;
        std::vector<CheckResult> batch = spec.run(ctx);
        std::move(batch.begin(), batch.end(), std::back_inserter(results));
    }
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.params.dump() < b.params.dump();
    });
    return results;
}

}
