#include "overq/enumeration.hpp"

#include <algorithm>
#include <sstream>

#include "overq/errors.hpp"

namespace overq {

std::uint64_t Overpartition::sum() const noexcept {
    std::uint64_t s = 0;
    for (const auto& p : parts) s += p.value;
    return s;
}

std::uint32_t Overpartition::non_overlined() const noexcept {
    std::uint32_t k = 0;
    for (const auto& p : parts) k += p.overlined ? 0 : 1;
    return k;
}

bool Overpartition::canonical() const noexcept {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].value > parts[i - 1].value) return false;
        if (parts[i].value == parts[i - 1].value && parts[i].overlined) return false;
    }
    return true;
}

const BigInt& CountTable::at(std::uint32_t k, std::uint32_t n) const {
    static const BigInt zero(0);
    if (k > k_max_ || n > n_max_)
        fail(ErrorKind::RangeTooSmall, "count cell beyond the computed range");
    auto it = cells_.find({k, n});
    return it == cells_.end() ? zero : it->second;
}

BigInt CountTable::row_total(std::uint32_t n) const {
    BigInt total = 0;
    for (const auto& [kn, c] : cells_)
        if (kn.second == n) total += c;
    return total;
}

void CountTable::add(std::uint32_t k, std::uint32_t n, const BigInt& delta) {
    if (delta == 0) return;
    auto [it, inserted] = cells_.emplace(std::make_pair(k, n), delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) cells_.erase(it);
    }
}

std::string CountTable::to_csv() const {
    std::ostringstream out;
    out << "n,k,count\n";
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
    keys.reserve(cells_.size());
    for (const auto& [kn, c] : cells_) keys.push_back(kn);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (const auto& kn : keys)
        out << kn.second << ',' << kn.first << ',' << cells_.at(kn).get_str() << '\n';
    return out.str();
}

nlohmann::json CountTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
    for (const auto& [kn, c] : cells_) keys.push_back(kn);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (const auto& kn : keys)
        rows.push_back({{"n", kn.second}, {"k", kn.first}, {"count", cells_.at(kn).get_str()}});
    return {{"side", to_string(side_)},
            {"a", spectrum_.base()},
            {"N", spectrum_.modulus()},
            {"k_max", k_max_},
            {"n_max", n_max_},
            {"counts", rows}};
}

std::uint64_t PTable::key(std::uint32_t i, std::uint32_t k, std::uint32_t m,
                          std::uint32_t n) const {
    std::uint64_t key = i;
    key = key * (k_max_ + 1) + k;
    key = key * (m_max_ + 1) + m;
    key = key * (n_max_ + 1) + n;
    return key;
}

BigInt PTable::at(std::uint32_t i, std::int64_t k, std::int64_t m, std::int64_t n) const {
    if (k < 0 || m < 0 || n < 0) return 0;
    if (i < 1 || i > spectrum_.alpha_count())
        fail(ErrorKind::RangeTooSmall, "alpha index beyond the table");
    if (k > k_max_ || m > m_max_ || n > n_max_)
        fail(ErrorKind::RangeTooSmall, "refined count cell beyond the computed range");
    auto it = cells_.find(key(i, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m),
                              static_cast<std::uint32_t>(n)));
    return it == cells_.end() ? BigInt(0) : it->second;
}

void PTable::for_each(const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t,
                                               std::uint32_t, const BigInt&)>& visit) const {
    for (const auto& [key, count] : cells_) {
        std::uint64_t rest = key;
        auto n = static_cast<std::uint32_t>(rest % (n_max_ + 1));
        rest /= n_max_ + 1;
        auto m = static_cast<std::uint32_t>(rest % (m_max_ + 1));
        rest /= m_max_ + 1;
        auto k = static_cast<std::uint32_t>(rest % (k_max_ + 1));
        rest /= k_max_ + 1;
        visit(static_cast<std::uint32_t>(rest), k, m, n, count);
    }
}

void PTable::add(std::uint32_t i, std::uint32_t k, std::uint32_t m, std::uint32_t n,
                 const BigInt& delta) {
    if (delta == 0) return;
    auto [it, inserted] = cells_.emplace(key(i, k, m, n), delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) cells_.erase(it);
    }
}

namespace {

// Part values usable on the multiset side: congruent to a base value mod N.
std::vector<std::uint32_t> multiset_part_values(const SpectrumSet& s, std::uint32_t n_max) {
    std::vector<std::uint32_t> values;
    for (std::uint32_t v = 1; v <= n_max; ++v) {
        std::uint32_t b = s.beta(v);
        if (std::find(s.base().begin(), s.base().end(), b) != s.base().end())
            values.push_back(v);
    }
    return values;
}

// Every multiset of part values with overline choices, descending values,
// pruned by the remaining budget and the k cap. The visitor sees each
// complete overpartition exactly once.
template <typename Visit>
void walk_multisets(const std::vector<std::uint32_t>& values, std::size_t idx,
                    std::uint32_t budget, std::uint32_t k, std::uint32_t k_max,
                    std::vector<Part>& stack, Visit&& visit) {
    if (idx == values.size()) {
        visit(stack, k);
        return;
    }
    // skip this value entirely
    walk_multisets(values, idx + 1, budget, k, k_max, stack, visit);
    std::uint32_t v = values[idx];
    std::uint32_t base_size = static_cast<std::uint32_t>(stack.size());
    for (std::uint32_t c = 1; c * v <= budget; ++c) {
        stack.resize(base_size);
        stack.push_back(Part{v, true});
        for (std::uint32_t j = 1; j < c; ++j) stack.push_back(Part{v, false});
        if (k + c - 1 <= k_max)
            walk_multisets(values, idx + 1, budget - c * v, k + c - 1, k_max, stack, visit);
        stack[base_size].overlined = false;
        if (k + c <= k_max)
            walk_multisets(values, idx + 1, budget - c * v, k + c, k_max, stack, visit);
    }
    stack.resize(base_size);
}

template <typename Visit>
void for_each_multiset_witness(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t n_max,
                               Visit&& visit) {
    auto values = multiset_part_values(s, n_max);
    std::sort(values.rbegin(), values.rend());
    std::vector<Part> stack;
    walk_multisets(values, 0, n_max, 0, k_max, stack, visit);
}

// Every gap-condition overpartition with at most m_max parts, sum at most
// n_max, at most k_max plain parts. Parts descend; each next part v with
// flag o must satisfy last - v >= gap(beta(v), o). Every node of the tree is
// a complete witness, so the visitor fires per node (the empty one included).
template <typename Visit>
void walk_gapped(const SpectrumSet& s, std::uint32_t last, std::uint32_t budget,
                 std::uint32_t k, std::uint32_t m, std::uint32_t k_max, std::uint32_t m_max,
                 std::vector<Part>& stack, Visit&& visit) {
    visit(stack, k);
    if (m == m_max) return;
    for (std::uint32_t v = std::min(last, budget); v >= 1; --v) {
        std::uint32_t b = s.beta(v);
        if (!s.in_alpha_set(b)) continue;
        for (bool overlined : {true, false}) {
            if (stack.size() > 0) {
                std::uint32_t g = s.gap(b, overlined);
                if (last - v < g) continue;
            }
            std::uint32_t nk = k + (overlined ? 0 : 1);
            if (nk > k_max) continue;
            stack.push_back(Part{v, overlined});
            walk_gapped(s, v, budget - v, nk, m + 1, k_max, m_max, stack, visit);
            stack.pop_back();
        }
    }
}

template <typename Visit>
void for_each_gapped_witness(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t m_max,
                             std::uint32_t n_max, Visit&& visit) {
    std::vector<Part> stack;
    std::uint32_t no_cap = n_max;  // first part only limited by the budget
    walk_gapped(s, no_cap, n_max, 0, 0, k_max, m_max, stack, visit);
}

}

CountTable count_D(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t n_max) {
    CountTable table(Side::D, s, k_max, n_max);
    for_each_multiset_witness(s, k_max, n_max, [&](const std::vector<Part>& parts, std::uint32_t k) {
        std::uint64_t n = 0;
        for (const auto& p : parts) n += p.value;
        table.add(k, static_cast<std::uint32_t>(n), 1);
    });
    return table;
}

CountTable count_E(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t n_max) {
    CountTable table(Side::E, s, k_max, n_max);
    for_each_gapped_witness(s, k_max, n_max, n_max,
                            [&](const std::vector<Part>& parts, std::uint32_t k) {
                                std::uint64_t n = 0;
                                for (const auto& p : parts) n += p.value;
                                table.add(k, static_cast<std::uint32_t>(n), 1);
                            });
    return table;
}

PTable count_p(const SpectrumSet& s, std::uint32_t k_max, std::uint32_t m_max,
               std::uint32_t n_max) {
    PTable table(s, k_max, m_max, n_max);
    const auto& alpha = s.alpha_table();
    for_each_gapped_witness(s, k_max, m_max, n_max,
                            [&](const std::vector<Part>& parts, std::uint32_t k) {
        std::uint64_t n = 0;
        for (const auto& p : parts) n += p.value;
        // The last pushed part is the smallest; the empty witness clears
        // every threshold.
        std::uint32_t upto = static_cast<std::uint32_t>(alpha.size());
        if (!parts.empty()) {
            std::uint32_t smallest = parts.back().value;
            upto = 0;
            while (upto < alpha.size() && alpha[upto].value <= smallest) ++upto;
        }
        for (std::uint32_t i = 1; i <= upto; ++i)
            table.add(i, k, static_cast<std::uint32_t>(parts.size()),
                      static_cast<std::uint32_t>(n), 1);
    });
    return table;
}

std::vector<Overpartition> list_witnesses(const SpectrumSet& s, Side side, std::uint32_t k,
                                          std::uint32_t n) {
    std::vector<Overpartition> out;
    auto collect = [&](const std::vector<Part>& parts, std::uint32_t kk) {
        std::uint64_t nn = 0;
        for (const auto& p : parts) nn += p.value;
        if (kk == k && nn == n) out.push_back(Overpartition{parts});
    };
    if (side == Side::D)
        for_each_multiset_witness(s, k, n, collect);
    else
        for_each_gapped_witness(s, k, n, n, collect);
    // Descending lexicographic order on part sequences; at equal value the
    // overlined copy ranks higher.
    auto part_less = [](const Part& a, const Part& b) {
        if (a.value != b.value) return a.value < b.value;
        return int(a.overlined) < int(b.overlined);
    };
    std::sort(out.begin(), out.end(), [&](const Overpartition& a, const Overpartition& b) {
        return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(),
                                            a.parts.end(), part_less);
    });
    return out;
}

CheckResult check_lemma1(const PTable& p) {
    const SpectrumSet& s = p.spectrum();
    const std::uint32_t count = s.alpha_count();
    const std::uint32_t N = s.modulus();
    CheckResult res;
    res.name = "lemma1";
    res.params = {{"a", s.base()},
                  {"N", N},
                  {"k_max", p.k_max()},
                  {"m_max", p.m_max()},
                  {"n_max", p.n_max()}};
    res.exact_region = Window{p.n_max(), p.m_max()};

    auto report = [&](std::uint32_t i, std::uint32_t k, std::uint32_t m, std::uint32_t n,
                      const BigInt& lhs, const BigInt& rhs) {
        res.status = CheckStatus::fail;
        res.params["i"] = i;
        res.counterexample = Counterexample{Monomial{k, m, n}, lhs.get_str(), rhs.get_str()};
    };

    for (std::uint32_t i = 1; i < count; ++i) {
        const AlphaEntry& e = s.alpha(i);
        std::uint32_t vidx = s.alpha_index(e.smallest);
        for (std::uint32_t k = 0; k <= p.k_max(); ++k)
            for (std::uint32_t m = 0; m <= p.m_max(); ++m)
                for (std::uint32_t n = 0; n <= p.n_max(); ++n) {
                    BigInt lhs = p.at(i, k, m, n) - p.at(i + 1, k, m, n);
                    std::int64_t span = std::int64_t(m) - 1;
                    BigInt rhs = 0;
                    if (m >= 1) {
                        rhs += p.at(vidx, k, span,
                                    std::int64_t(n) - span * N * e.weight - e.value);
                        rhs += p.at(vidx, std::int64_t(k) - 1, span,
                                    std::int64_t(n) - span * N * (e.weight - 1) - e.value);
                    }
                    if (lhs != rhs) {
                        report(i, k, m, n, lhs, rhs);
                        return res;
                    }
                }
    }
    // Sentinel column: shifting every part down by N recovers the base column.
    for (std::uint32_t k = 0; k <= p.k_max(); ++k)
        for (std::uint32_t m = 0; m <= p.m_max(); ++m)
            for (std::uint32_t n = 0; n <= p.n_max(); ++n) {
                BigInt lhs = p.at(count, k, m, n);
                BigInt rhs = p.at(1, k, m, std::int64_t(n) - std::int64_t(m) * N);
                if (lhs != rhs) {
                    report(count, k, m, n, lhs, rhs);
                    return res;
                }
            }
    return res;
}

}
