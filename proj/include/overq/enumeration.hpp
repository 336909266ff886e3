#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "overq/report.hpp"
#include "overq/spectrum.hpp"

namespace overq {

struct Part {
    std::uint32_t value = 0;
    bool overlined = false;

    friend bool operator==(const Part&, const Part&) = default;
};

// Finite nonincreasing sequence of parts; among equal values the overlined
// copy (at most one per value) comes first.
struct Overpartition {
    std::vector<Part> parts;

    std::uint64_t sum() const noexcept;
    std::uint32_t non_overlined() const noexcept;  // the k statistic
    bool canonical() const noexcept;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
};

enum class Side { D, E };

inline const char* to_string(Side s) { return s == Side::D ? "D" : "E"; }

// Exact counts indexed by (k, n); zero cells are not stored.
class CountTable {
public:
    CountTable(Side side, SpectrumSet spectrum, std::uint32_t k_max, std::uint32_t n_max)
        : side_(side), spectrum_(std::move(spectrum)), k_max_(k_max), n_max_(n_max) {}

    Side side() const noexcept { return side_; }
    const SpectrumSet& spectrum() const noexcept { return spectrum_; }
    std::uint32_t k_max() const noexcept { return k_max_; }
    std::uint32_t n_max() const noexcept { return n_max_; }

    const BigInt& at(std::uint32_t k, std::uint32_t n) const;
    BigInt row_total(std::uint32_t n) const;
    void add(std::uint32_t k, std::uint32_t n, const BigInt& delta);

    const std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt>& cells() const noexcept {
        return cells_;
    }

    std::string to_csv() const;          // header n,k,count; nonzero cells
    nlohmann::json to_json() const;

private:
    Side side_;
    SpectrumSet spectrum_;
    std::uint32_t k_max_;
    std::uint32_t n_max_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt> cells_;
};

// Refined gap-side counts indexed by (i, k, m, n): witnesses with k
// non-overlined parts, m parts total, total n, and smallest part at least
// alpha(i); i ranges over 1..2^r including the sentinel index.
class PTable {
public:
    PTable(SpectrumSet spectrum, std::uint32_t k_max, std::uint32_t m_max, std::uint32_t n_max)
        : spectrum_(std::move(spectrum)), k_max_(k_max), m_max_(m_max), n_max_(n_max) {}

    const SpectrumSet& spectrum() const noexcept { return spectrum_; }
    std::uint32_t k_max() const noexcept { return k_max_; }
    std::uint32_t m_max() const noexcept { return m_max_; }
    std::uint32_t n_max() const noexcept { return n_max_; }

    // Zero for negative arguments (signed on purpose: recurrences shift
    // arguments below zero and expect empty counts there).
    BigInt at(std::uint32_t i, std::int64_t k, std::int64_t m, std::int64_t n) const;
    void add(std::uint32_t i, std::uint32_t k, std::uint32_t m, std::uint32_t n,
             const BigInt& delta);

    // Visits every stored (nonzero) cell as (i, k, m, n, count).
    void for_each(const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t,
                                           std::uint32_t, const BigInt&)>& visit) const;

private:
    SpectrumSet spectrum_;
    std::uint32_t k_max_;
    std::uint32_t m_max_;
    std::uint32_t n_max_;
    std::map<std::uint64_t, BigInt> cells_;

    std::uint64_t key(std::uint32_t i, std::uint32_t k, std::uint32_t m, std::uint32_t n) const;
};

// Overpartitions into parts whose least positive residue lies in the base
// set, counted by (k, n) = (non-overlined parts, sum). Exhaustive recursion
// over multisets with overline choices, largest part value first.
CountTable count_D(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t n_max);

// Overpartitions into parts whose least positive residue is a subset sum,
// consecutive parts separated by at least gap(beta(lower), overlined(lower)).
CountTable count_E(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t n_max);

// Refined E-side counts; filters the same witness stream, entirely
// independent of any series-side recurrence.
PTable count_p(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t m_max,
               std::uint32_t n_max);

// All witnesses behind one (k, n) cell, canonical parts, sorted descending
// by part sequence (overlined before plain at equal value).
std::vector<Overpartition> list_witnesses(const SpectrumSet& s, Side side,
                                          std::uint32_t k, std::uint32_t n);

// Verifies on the whole table range the two peeling recurrences of the
// p-counts: removing an overlined/plain smallest part lowers (i, k, m, n) to
// the residue-class successor, and the sentinel column equals the base
// column shifted by m*N. RangeTooSmall if the requested ranges exceed the
// table's.
CheckResult check_lemma1(const PTable& p);

}
