#include "overq/spectrum.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "overq/errors.hpp"

namespace overq {

SpectrumSet::SpectrumSet(std::vector<std::uint32_t> base, std::uint32_t modulus)
    : base_(std::move(base)), modulus_(modulus) {
    if (base_.empty() || base_.size() > 30)
        fail(ErrorKind::InvalidArgument, "base set must hold between 1 and 30 values");
    std::uint64_t full = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        if (base_[k] == 0 || (k > 0 && base_[k] <= base_[k - 1]))
            fail(ErrorKind::InvalidArgument, "base values must be positive and increasing");
        full += base_[k];
    }
    if (static_cast<std::uint64_t>(modulus_) < full)
        fail(ErrorKind::ModulusTooSmall,
             "modulus " + std::to_string(modulus_) + " is below the full sum " +
                 std::to_string(full));

    const std::uint32_t r = rank();
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        AlphaEntry e;
        e.summands = mask;
        for (std::uint32_t k = 0; k < r; ++k) {
            if (!(mask & (1u << k))) continue;
            e.value += base_[k];
            e.weight += 1;
            if (e.smallest == 0) e.smallest = base_[k];  // masks scan low bit first
        }
        if (!seen.insert(e.value).second)
            fail(ErrorKind::CollidingSums,
                 "subset sum " + std::to_string(e.value) + " occurs twice");
        alpha_.push_back(e);
    }
    // a(k) must clear the sum of its predecessors, not merely a(k-1).
    std::uint64_t prefix = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        if (base_[k] <= prefix)
            fail(ErrorKind::PrefixSumViolation,
                 "a(" + std::to_string(k + 1) + ") = " + std::to_string(base_[k]) +
                     " does not exceed the sum " + std::to_string(prefix) +
                     " of its predecessors");
        prefix += base_[k];
    }
    std::sort(alpha_.begin(), alpha_.end(),
              [](const AlphaEntry& x, const AlphaEntry& y) { return x.value < y.value; });
    AlphaEntry sentinel;
    sentinel.value = sentinel_value();
    sentinel.weight = 1;
    sentinel.smallest = sentinel.value;
    sentinel.sentinel = true;
    alpha_.push_back(sentinel);
}

std::uint32_t SpectrumSet::beta(std::uint64_t m) const noexcept {
    std::uint64_t rem = m % modulus_;
    return static_cast<std::uint32_t>(rem == 0 ? modulus_ : rem);
}

bool SpectrumSet::in_alpha_set(std::uint32_t value) const noexcept {
    for (const auto& e : alpha_)
        if (e.value == value) return true;
    return false;
}

std::uint32_t SpectrumSet::alpha_index(std::uint32_t value) const {
    for (std::size_t i = 0; i < alpha_.size(); ++i)
        if (alpha_[i].value == value) return static_cast<std::uint32_t>(i + 1);
    fail(ErrorKind::NotInAlphaTable, std::to_string(value) + " is not a table value");
}

std::uint32_t SpectrumSet::gap(std::uint32_t beta_value, bool overlined) const {
    std::uint32_t i = alpha_index(beta_value);
    const AlphaEntry& e = alpha_[i - 1];
    if (e.sentinel)
        fail(ErrorKind::NotInAlphaTable,
             std::to_string(beta_value) + " is the sentinel, not a residue");
    // weight >= 1 and smallest <= value <= N keep this nonnegative.
    std::int64_t g = std::int64_t(modulus_) * (e.weight - 1 + (overlined ? 1 : 0)) +
                     e.smallest - e.value;
    return static_cast<std::uint32_t>(g);
}

Poly SpectrumSet::restricted_power_sum(std::uint32_t bound, std::uint32_t w) const {
    bool valid_bound = bound == sentinel_value() ||
                       std::find(base_.begin(), base_.end(), bound) != base_.end();
    if (!valid_bound)
        fail(ErrorKind::InvalidArgument,
             "bound " + std::to_string(bound) + " is neither a base value nor the sentinel");
    if (w == 0) return Poly::one();  // empty subset convention
    Poly out;
    for (const auto& e : alpha_) {
        if (e.sentinel || e.value >= bound || e.weight != w) continue;
        out.add_term(Monomial{0, 0, e.value}, 1);
    }
    return out;
}

nlohmann::json SpectrumSet::to_json() const {
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& e : alpha_)
        alpha.push_back({{"value", e.value}, {"weight", e.weight}, {"smallest", e.smallest}});
    return {{"a", base_}, {"N", modulus_}, {"alpha", alpha}};
}

}
