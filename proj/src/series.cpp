#include "overq/series.hpp"

#include "overq/errors.hpp"

namespace overq {

Series Series::monomial(Window w, const Monomial& m, const BigInt& c) {
    Series s(w);
    s.add_term(m, c);
    return s;
}

Series Series::from_poly(const Poly& p, Window w) {
    Series s(w);
    for (const auto& [m, c] : p.terms()) s.add_term(m, c);
    return s;
}

void Series::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0 || m.q > win_.q_max || m.x > win_.x_max) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt Series::coefficient(const Monomial& m) const {
    if (m.q > win_.q_max || m.x > win_.x_max)
        fail(ErrorKind::OutsideWindow, "coefficient query beyond the truncation window");
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Series::require_same_window(const Series& o) const {
    if (!(win_ == o.win_))
        fail(ErrorKind::WindowMismatch, "operands carry different truncation windows");
}

Series& Series::operator+=(const Series& o) {
    require_same_window(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_window(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series Series::operator-() const {
    Series out(win_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Series operator*(const Series& a, const Series& b) {
    a.require_same_window(b);
    Series out(a.win_);
    // Iterate the smaller operand outside: factors here are usually a short
    // polynomial against a bulky series.
    const Series& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const Series& large = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ms, cs] : small.terms_) {
        for (const auto& [ml, cl] : large.terms_) {
            std::uint64_t q = std::uint64_t(ms.q) + ml.q;
            std::uint64_t x = std::uint64_t(ms.x) + ml.x;
            if (q > out.win_.q_max || x > out.win_.x_max) continue;
            Monomial m{ms.d + ml.d, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(q)};
            out.add_term(m, cs * cl);
        }
    }
    return out;
}

Series Series::subst_x(std::uint32_t t) const {
    Series out(win_);
    for (const auto& [m, c] : terms_) {
        std::uint64_t q = std::uint64_t(m.q) + std::uint64_t(t) * m.x;
        if (q > win_.q_max) continue;
        out.terms_.emplace(Monomial{m.d, m.x, static_cast<std::uint32_t>(q)}, c);
    }
    return out;
}

Series Series::eval_x_one() const {
    Series out(Window{win_.q_max, 0});
    for (const auto& [m, c] : terms_) out.add_term(Monomial{m.d, 0, m.q}, c);
    return out;
}

Series Series::rewindowed(Window w) const {
    Series out(w);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

Series invert_one_minus(const Series& u) {
    for (const auto& [m, c] : u.terms())
        if (m.x == 0 && m.q == 0)
            fail(ErrorKind::NonzeroConstantTerm,
                 "series to invert has a term constant in (x, q)");
    Series acc = Series::one(u.window());
    Series power = Series::one(u.window());
    // Each multiplication raises the minimal x+q degree, so power vanishes
    // after at most q_max + x_max + 1 rounds.
    while (true) {
        power = power * u;
        if (power.is_zero()) break;
        acc += power;
    }
    return acc;
}

Series pochhammer_product(Window w, int sign, bool d_attached, bool x_attached,
                          std::uint32_t offset, std::uint32_t step, bool numerator) {
    if (sign != 1 && sign != -1)
        fail(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    if (step == 0) fail(ErrorKind::InvalidArgument, "step must be positive");
    if (offset == 0 && !x_attached)
        fail(ErrorKind::DivergentAtWindow,
             "offset 0 without an attached x leaves the first factor no valuation");
    Series acc = Series::one(w);
    for (std::uint64_t e = offset; e <= w.q_max; e += step) {
        Monomial m{d_attached ? 1u : 0u, x_attached ? 1u : 0u, static_cast<std::uint32_t>(e)};
        if (numerator) {
            Series factor = Series::one(w);
            factor.add_term(m, sign);
            acc = acc * factor;
        } else {
            acc = acc * invert_one_minus(Series::monomial(w, m, -sign));
        }
    }
    return acc;
}

Series qbinom(std::int64_t m, std::int64_t r, std::uint32_t step) {
    Poly p = qbinom_poly(m, r, step);
    return Series::from_poly(p, Window{p.degree_q(), 0});
}

}
