#include "overq/report.hpp"

#include <algorithm>

#include "overq/errors.hpp"

namespace overq {

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j{{"name", name},
                     {"params", params},
                     {"status", to_string(status)},
                     {"exact_region", {{"q_max", exact_region.q_max}, {"x_max", exact_region.x_max}}}};
    if (counterexample) {
        j["first_counterexample"] = {{"monomial",
                                      {{"d", counterexample->monomial.d},
                                       {"x", counterexample->monomial.x},
                                       {"q", counterexample->monomial.q}}},
                                     {"lhs", counterexample->lhs},
                                     {"rhs", counterexample->rhs}};
    } else {
        j["first_counterexample"] = nullptr;
    }
    return j;
}

namespace {

// Merged view of two term maps restricted to a region, in (q, x, d) order.
std::optional<Counterexample> first_difference(const TermMap& lhs, const TermMap& rhs,
                                               Window region) {
    auto within = [&](const Monomial& m) {
        return m.q <= region.q_max && m.x <= region.x_max;
    };
    auto li = lhs.begin(), ri = rhs.begin();
    MonomialOrder before;
    auto value_of = [](const BigInt& c) { return c.get_str(); };
    while (li != lhs.end() || ri != rhs.end()) {
        while (li != lhs.end() && !within(li->first)) ++li;
        while (ri != rhs.end() && !within(ri->first)) ++ri;
        if (li == lhs.end() && ri == rhs.end()) break;
        if (ri == rhs.end() || (li != lhs.end() && before(li->first, ri->first)))
            return Counterexample{li->first, value_of(li->second), "0"};
        if (li == lhs.end() || before(ri->first, li->first))
            return Counterexample{ri->first, "0", value_of(ri->second)};
        if (li->second != ri->second)
            return Counterexample{li->first, value_of(li->second), value_of(ri->second)};
        ++li;
        ++ri;
    }
    return std::nullopt;
}

}

CheckResult compare_series(const std::string& name, nlohmann::json params, const Series& lhs,
                           const Series& rhs, Window region) {
    if (lhs.window().q_max < region.q_max || lhs.window().x_max < region.x_max ||
        rhs.window().q_max < region.q_max || rhs.window().x_max < region.x_max)
        fail(ErrorKind::WindowMismatch, "comparison region exceeds an operand window");
    CheckResult res;
    res.name = name;
    res.params = std::move(params);
    res.exact_region = region;
    if (auto diff = first_difference(lhs.terms(), rhs.terms(), region)) {
        res.status = CheckStatus::fail;
        res.counterexample = std::move(diff);
    }
    return res;
}

CheckResult compare_poly(const std::string& name, nlohmann::json params, const Poly& lhs,
                         const Poly& rhs) {
    CheckResult res;
    res.name = name;
    res.params = std::move(params);
    res.exact_region = Window{std::max(lhs.degree_q(), rhs.degree_q()),
                              std::max(lhs.degree_x(), rhs.degree_x())};
    Window everything{UINT32_MAX, UINT32_MAX};
    if (auto diff = first_difference(lhs.terms(), rhs.terms(), everything)) {
        res.status = CheckStatus::fail;
        res.counterexample = std::move(diff);
    }
    return res;
}

}
