#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "overq/poly.hpp"

namespace overq {

// One nonempty subset sum of the base set. summands is a bitmask over base
// indices (bit k-1 set means a(k) participates); the sentinel entry keeps an
// empty mask and represents the formal next base value N + a(1).
struct AlphaEntry {
    std::uint32_t value = 0;
    std::uint32_t weight = 0;    // number of summands
    std::uint32_t smallest = 0;  // smallest summand
    std::uint32_t summands = 0;
    bool sentinel = false;
};

// Base set {a(1) < ... < a(r)} together with the modulus N. Validated on
// construction:
//   - each a(k) exceeds the sum of its predecessors (PrefixSumViolation),
//   - all 2^r - 1 nonempty subset sums are pairwise distinct (CollidingSums),
//   - N is at least the full sum (ModulusTooSmall).
// Immutable afterwards; all accessors are const and cheap.
class SpectrumSet {
public:
    SpectrumSet(std::vector<std::uint32_t> base, std::uint32_t modulus);

    std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(base_.size()); }
    std::uint32_t modulus() const noexcept { return modulus_; }
    const std::vector<std::uint32_t>& base() const noexcept { return base_; }
    // 1-based; k in 1..r.
    std::uint32_t a(std::uint32_t k) const { return base_.at(k - 1); }

    // 2^r entries: the 2^r - 1 subset sums sorted ascending, then the
    // sentinel N + a(1).
    const std::vector<AlphaEntry>& alpha_table() const noexcept { return alpha_; }
    // 1-based; i in 1..2^r.
    const AlphaEntry& alpha(std::uint32_t i) const { return alpha_.at(i - 1); }
    std::uint32_t alpha_count() const noexcept { return static_cast<std::uint32_t>(alpha_.size()); }
    std::uint32_t sentinel_value() const noexcept { return modulus_ + base_.front(); }

    // Least positive residue of m in {1..N}; never 0.
    std::uint32_t beta(std::uint64_t m) const noexcept;
    // Whether value appears in the table (sentinel included).
    bool in_alpha_set(std::uint32_t value) const noexcept;
    // 1-based table index of an entry by value; NotInAlphaTable if absent.
    std::uint32_t alpha_index(std::uint32_t value) const;

    // Minimal difference granted to a part lying above a part with least
    // positive residue beta_value (which must be a table value):
    //   N * (weight - 1 + overlined) + smallest - beta_value.
    // Nonnegative: weight >= 1 and smallest's own residue class makes
    // smallest - beta_value >= -N * 0 ... the first summand already covers it.
    std::uint32_t gap(std::uint32_t beta_value, bool overlined) const;

    // Sum of q^alpha over table entries with value < bound and the given
    // weight; 1 when w == 0 (empty subset), 0 when no entry qualifies.
    // bound must be some a(k) or the sentinel value.
    Poly restricted_power_sum(std::uint32_t bound, std::uint32_t w) const;

    nlohmann::json to_json() const;

    friend bool operator==(const SpectrumSet& a, const SpectrumSet& b) {
        return a.base_ == b.base_ && a.modulus_ == b.modulus_;
    }

private:
    std::vector<std::uint32_t> base_;
    std::uint32_t modulus_;
    std::vector<AlphaEntry> alpha_;
};

}
