#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "overq/enumeration.hpp"
#include "overq/report.hpp"
#include "overq/series.hpp"
#include "overq/spectrum.hpp"

namespace overq {

// Generating functions of the refined gap-side counts: entry i (1-based,
// i <= 2^r) collects p(i, k, m, n) d^k x^m q^n over the window, constant
// term 1. Built straight from the enumeration oracle.
struct FFamily {
    SpectrumSet spectrum;
    Window window{0, 0};
    std::vector<Series> members;  // members[i-1] belongs to alpha(i)

    const Series& at(std::uint32_t i) const { return members.at(i - 1); }
};

// For callers that evaluate at x = 1 afterwards, x_max should be at least
// q_max / a(1) so no in-window q coefficient loses x mass; the family itself
// is window-exact for any x_max.
FFamily build_f_family(const SpectrumSet& s, std::uint32_t q_max, std::uint32_t x_max);

// Polynomial coefficient families of the windowed difference equation and
// the derived recurrence, all exact in (d, q):
//   c[k][j] = q^{N k(k+1)/2 + k a(r)} [j-1, k]_{q^N} d^k
//   b[m][j] = (d^{m-1} W(<s, j+m-1) + d^m W(<s, j+m)) [j+m-1, m-1]_{q^N}
//   e[m][j] = (d^{m-1} W(<a(r), j+m-1) + d^m W(<a(r), j+m)) [j+m-1, m-1]_{q^N}
//   f[m][k] = q^{N k(k+1)/2 + k a(r)} [m-1, k]_{q^N}
// where W(<bound, w) is the restricted power sum and s the sentinel.
// T[m][j] = sum_k c[k][j] b[m-k][j] is cached for the recurrence check.
struct CoeffFamilies {
    SpectrumSet spectrum;
    std::vector<std::vector<Poly>> c;  // c[k][j], 0 <= k <= r-1, 1 <= j <= r
    std::vector<std::vector<Poly>> b;  // b[m][j], 1 <= m <= r+1, 1 <= j <= r
    std::vector<std::vector<Poly>> e;  // e[m][j], 1 <= m <= r, 0 <= j <= r
    std::vector<std::vector<Poly>> f;  // f[m][k], 1 <= m <= r, 0 <= k <= r-1
    std::vector<std::vector<Poly>> T;  // T[m][j], 1 <= m, j <= r
};

CoeffFamilies build_coeff_families(const SpectrumSet& s);

// x-coefficient slices A_n of the transformed series, each a (d, q)-series
// on window (q_max, 0); entries[0] = 1.
struct CoefficientSequence {
    std::string origin;
    std::vector<Series> entries;
};

// Difference of consecutive family members equals the two peel terms
// (plain and overlined) of the residue-class successor; the sentinel member
// equals the base member at x q^N.
CheckResult check_lemma2(const FFamily& fam);

enum class IntermediateEq { eq35, eq36, eq37 };

inline const char* to_string(IntermediateEq e) {
    switch (e) {
    case IntermediateEq::eq35: return "eq3.5";
    case IntermediateEq::eq36: return "eq3.6";
    case IntermediateEq::eq37: return "eq3.7";
    }
    return "?";
}

// Telescoped forms of the member differences: eq35 sums the peel terms below
// a(k) (1 <= k <= r), eq36 between a(k-1) and a(k), eq37 rewrites the member
// at a(k) against the one at a(k-1) (2 <= k <= r). eq37 carries a q^{a(k-1)-N}
// factor in the raw form; both sides are scaled by q^{N-a(k-1)} to stay in
// nonnegative exponents, which verifies the identity to order
// q_max - (N - a(k-1)).
CheckResult check_intermediate(const FFamily& fam, IntermediateEq which, std::uint32_t k);

// Closed difference equation for the base member at level k (1 <= k <= r+1):
// the product of (1 - d x q^{a(j)}) over j < k times the base member equals
// the member at a(k) plus weighted Gaussian-binomial combinations of the
// base member at x q^{jN}. k = 1 is trivial; k = r+1 uses the sentinel.
CheckResult check_conj(const FFamily& fam, std::uint32_t k);

// The level r+1 equation with the sentinel member eliminated: a q-difference
// equation in the base member alone. Works for any candidate series claiming
// to be the base member of s, which lets the descent reuse it.
CheckResult verify_qdiff(const SpectrumSet& s, const Series& base_member);
CheckResult check_qdiff(const FFamily& fam);

// Multiplies the base member by prod (1 - d x q^{Nn + a(r)}) / (1 - x q^{Nn});
// the result satisfies a difference equation with polynomial coefficients in
// x alone. Never evaluate the result at x = 1: the n = 0 denominator puts a
// pole there.
Series to_F(const FFamily& fam);

// The transformed difference equation, coefficient-wise on the window.
CheckResult check_eqF(const SpectrumSet& s, const Series& F, const CoeffFamilies& cf);

// Slices F into A_n = [x^n] F for n <= x_max.
CoefficientSequence extract_A(const Series& F);

// (1 - q^{nN}) A_n = sum over m of signed polynomial multipliers times
// A_{n-m}: the recurrence satisfied by the slices.
CheckResult check_recA(const SpectrumSet& s, const CoefficientSequence& A,
                       const CoeffFamilies& cf);

// T[m][j] rewritten through the e/f families (two-term split with a
// q^{a(r)} correction).
CheckResult check_T_identity(const SpectrumSet& s, std::uint32_t m, std::uint32_t j);

// Gaussian-binomial exchange identity used by the T rewrite:
// [m-1,k][j+m-k-1,m-1] = [j,k][j+m-k-1,m-k-1] in base q^N.
CheckResult check_equalityqbin(const SpectrumSet& s, std::int64_t j, std::int64_t k,
                               std::int64_t m);

// Gaussian binomial source, swappable so the triangle checks can be pointed
// at any claimed table of values instead of the builtin one.
using QBinomProvider = std::function<Poly(std::int64_t, std::int64_t, std::uint32_t)>;

// Both triangle recurrences for every 0 <= r <= m <= m_max in base q^step.
CheckResult check_pascal(const QBinomProvider& qb, std::int64_t m_max, std::uint32_t step);

// prod_{k=0}^{n-1} (1 + x q^{step k}) against its binomial expansion, n <= n_max.
CheckResult check_qbinom_theorem(const QBinomProvider& qb, std::int64_t n_max,
                                 std::uint32_t step);

// Full multiplier of A_{n-m} assembled both ways, with q^{N(n-m)} kept as a
// formal variable (mapped onto the x slot).
CheckResult check_S_assembly(const SpectrumSet& s, std::uint32_t m);

// Rank descent: divides the slices A_n by prod_{k<n} (1 + q^{Nk + a(r)}),
// reassembles, and multiplies by prod (1 - x q^{Nn}). The result is the base
// member of the spectrum with a(r) removed (same modulus), window-exact.
// RankTooSmall when r < 2.
Series descend(const FFamily& fam);

// Closed form at rank 1: prod (1 + x q^{Nn+a1}) / (1 - d x q^{Nn+a1}).
Series solve_r1(std::uint32_t a1, std::uint32_t modulus, Window w);

// prod_k (-q^{a(k)}; q^N)_inf / (d q^{a(k)}; q^N)_inf on window (q_max, 0):
// the multiset side generating function with d marking plain parts.
Series product_formula(const SpectrumSet& s, std::uint32_t q_max);

struct TheoremRow {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    BigInt D, E, f_at_one, product;

    bool match() const { return D == E && D == f_at_one && D == product; }
};

struct TheoremTable {
    CheckResult result;
    std::vector<TheoremRow> rows;  // cells where any of the four is nonzero

    std::string to_csv() const;  // header n,k,D,E,match
};

// Four independent routes to the same numbers: multiset-side count,
// gap-side count, base member at x = 1, infinite product expansion.
TheoremTable check_theorem(const SpectrumSet& s, std::uint32_t q_max);

}
