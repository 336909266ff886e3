#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "overq/series.hpp"

namespace overq {

enum class CheckStatus { ok, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::ok:      return "ok";
    case CheckStatus::fail:    return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

// First violated instance of a failed check. For table-valued checks the
// monomial carries (d, x, q) = (k, m, n).
struct Counterexample {
    Monomial monomial;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    // Region the two sides were compared on.
    Window exact_region{0, 0};
    CheckStatus status = CheckStatus::ok;
    std::optional<Counterexample> counterexample;

    bool ok() const noexcept { return status != CheckStatus::fail; }
    nlohmann::json to_json() const;
};

// Coefficient-wise comparison of lhs and rhs over all monomials of region
// (d unconstrained). Both series must already live on windows containing
// region. Reports the first differing monomial in (q, x, d) order.
CheckResult compare_series(const std::string& name, nlohmann::json params,
                           const Series& lhs, const Series& rhs, Window region);

// Exact polynomial comparison; the reported region is the joint degree box.
CheckResult compare_poly(const std::string& name, nlohmann::json params,
                         const Poly& lhs, const Poly& rhs);

}
