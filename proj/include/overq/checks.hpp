#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "overq/identities.hpp"

namespace overq {

// Shared lazily-built state for one verification run, so several checks can
// reuse the same oracle tables and series. Build windows come from the
// configuration; the theorem table runs at table_q_max.
class RunContext {
public:
    RunContext(SpectrumSet spectrum, Window window, std::uint32_t table_q_max)
        : spectrum_(std::move(spectrum)), window_(window), table_q_max_(table_q_max) {}

    const SpectrumSet& spectrum() const noexcept { return spectrum_; }
    Window window() const noexcept { return window_; }
    std::uint32_t table_q_max() const noexcept { return table_q_max_; }

    const PTable& ptable();
    const FFamily& family();
    const Series& F();
    const CoefficientSequence& A();
    const CoeffFamilies& coeffs();

private:
    SpectrumSet spectrum_;
    Window window_;
    std::uint32_t table_q_max_;

    std::optional<PTable> ptable_;
    std::optional<FFamily> family_;
    std::optional<Series> F_;
    std::optional<CoefficientSequence> A_;
    std::optional<CoeffFamilies> coeffs_;
};

struct CheckSpec {
    std::string name;
    std::function<std::vector<CheckResult>(RunContext&)> run;
};

// All named checks, each mapping onto the corresponding identities-module
// checker; "all" in a selector expands to every entry. Order here is the
// execution order; results are re-sorted by name for reporting.
const std::vector<CheckSpec>& check_registry();

bool is_known_check(const std::string& name);

// Runs the selected checks (empty selector means all) and returns results
// sorted by (name, params).
std::vector<CheckResult> run_checks(RunContext& ctx, const std::vector<std::string>& selector);

}
