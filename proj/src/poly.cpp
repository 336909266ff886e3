#include "overq/poly.hpp"

#include <algorithm>
#include <vector>

#include "overq/errors.hpp"

namespace overq {

Poly Poly::constant(const BigInt& c) {
    Poly p;
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const BigInt& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

BigInt Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint32_t Poly::degree_d() const noexcept {
    std::uint32_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.d);
    return deg;
}

std::uint32_t Poly::degree_x() const noexcept {
    std::uint32_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.x);
    return deg;
}

std::uint32_t Poly::degree_q() const noexcept {
    // Map order is q-major, so the last term carries the q degree.
    return terms_.empty() ? 0 : terms_.rbegin()->first.q;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.d + mb.d, ma.x + mb.x, ma.q + mb.q};
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::q_scaled(std::uint32_t s) const {
    Poly out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(Monomial{m.d, m.x, m.q * s}, c);
    return out;
}

Poly Poly::at_q_one() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{m.d, m.x, 0}, c);
    return out;
}

namespace {

// Dense univariate polynomial in q, index = exponent. Only used for the
// Gaussian binomial kernel, whose degree r(m - r) stays small.
using Dense = std::vector<BigInt>;

Dense mul_one_minus_qpow(const Dense& f, std::size_t e) {
    Dense out(f.size() + e, BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] += f[i];
        out[i + e] -= f[i];
    }
    return out;
}

// Exact quotient f / (1 - q^e). From f_n = g_n - g_{n-e} the quotient obeys
// g_n = f_n + g_{n-e}; the trailing e coefficients must then reproduce f,
// which is re-checked by convolution.
Dense div_one_minus_qpow(const Dense& f, std::size_t e) {
    if (f.empty()) return {};
    if (f.size() <= e) fail(ErrorKind::InexactDivision, "degree below divisor");
    Dense g(f.size() - e, BigInt(0));
    for (std::size_t n = 0; n < g.size(); ++n) {
        g[n] = f[n];
        if (n >= e) g[n] += g[n - e];
    }
    Dense back = mul_one_minus_qpow(g, e);
    back.resize(f.size(), BigInt(0));
    for (std::size_t n = 0; n < f.size(); ++n)
        if (back[n] != f[n]) fail(ErrorKind::InexactDivision, "nonzero remainder");
    return g;
}

}

Poly qbinom_poly(std::int64_t m, std::int64_t r, std::uint32_t step) {
    if (r < 0 || m < 0 || r > m) return Poly{};
    if (step == 0) fail(ErrorKind::InvalidArgument, "qbinom step must be positive");
    // [m, r] = prod_{i=0}^{r-1} (1 - q^{m-i}) / (1 - q^{i+1});
    // every intermediate division below is already exact.
    Dense acc{BigInt(1)};
    for (std::int64_t i = 0; i < r; ++i)
        acc = mul_one_minus_qpow(acc, static_cast<std::size_t>(m - i));
    for (std::int64_t i = 1; i <= r; ++i)
        acc = div_one_minus_qpow(acc, static_cast<std::size_t>(i));
    Poly out;
    for (std::size_t n = 0; n < acc.size(); ++n)
        if (acc[n] != 0)
            out.add_term(Monomial{0, 0, static_cast<std::uint32_t>(n) * step}, acc[n]);
    return out;
}

}
