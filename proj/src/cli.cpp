#include "overq/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "overq/errors.hpp"
#include "overq/version.hpp"

namespace overq {

namespace {

const char* format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    }
    return "?";
}

const char* target_name(ExpandTarget t) {
    switch (t) {
    case ExpandTarget::product: return "product";
    case ExpandTarget::f: return "f";
    case ExpandTarget::r1: return "r1";
    }
    return "?";
}

std::string power(const char* var, std::uint32_t e) {
    if (e == 0) return "";
    std::string s = var;
    if (e > 1) {
        s += '^';
        s += std::to_string(e);
    }
    return s;
}

std::string term_text(const BigInt& c, std::uint32_t d, std::uint32_t x, std::uint32_t q) {
    std::string vars = power("d", d) + power("x", x) + power("q", q);
    if (vars.empty()) return c.get_str();
    if (c == 1) return vars;
    if (c == -1) return "-" + vars;
    return c.get_str() + vars;
}

template <typename Fn>
int guarded(std::ostream& out, Fn&& body) {
    try {
        return body();
    } catch (const Error& e) {
        out.flush();
        std::ostream& err = std::cerr;
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

nlohmann::json envelope(const RunConfig& cfg) {
    return {{"tool_version", kToolVersion}, {"config", cfg.to_json()}};
}

}

nlohmann::json RunConfig::to_json() const {
    return {{"a", a},
            {"N", modulus},
            {"q_max", q_max},
            {"x_max", effective_x_max()},
            {"k_max", effective_k_max()},
            {"format", format_name(format)},
            {"checks", checks},
            {"out", out}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string render_series_text(const Series& s) {
    std::vector<std::string> summands;
    const TermMap& terms = s.terms();
    for (auto it = terms.begin(); it != terms.end();) {
        const std::uint32_t q = it->first.q, x = it->first.x;
        std::vector<std::pair<std::uint32_t, BigInt>> slice;
        for (; it != terms.end() && it->first.q == q && it->first.x == x; ++it)
            slice.emplace_back(it->first.d, it->second);
        if ((q == 0 && x == 0) || slice.size() == 1) {
            for (const auto& [d, c] : slice) summands.push_back(term_text(c, d, x, q));
        } else {
            std::string inner;
            for (const auto& [d, c] : slice) {
                std::string t = term_text(c, d, 0, 0);
                if (!inner.empty() && t[0] != '-') inner += '+';
                inner += t;
            }
            summands.push_back('(' + inner + ')' + power("x", x) + power("q", q));
        }
    }
    if (summands.empty()) return "0";
    std::string text = summands.front();
    for (std::size_t i = 1; i < summands.size(); ++i) {
        if (summands[i][0] == '-')
            text += " - " + summands[i].substr(1);
        else
            text += " + " + summands[i];
    }
    return text;
}

nlohmann::json series_terms_json(const Series& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : s.terms())
        arr.push_back({{"d", m.d}, {"x", m.x}, {"q", m.q}, {"c", c.get_str()}});
    return arr;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    return guarded(out, [&]() -> int {
        SpectrumSet s(cfg.a, cfg.modulus);
        switch (cfg.format) {
        case OutputFormat::text: {
            out << "a =";
            for (std::uint32_t v : s.base()) out << ' ' << v;
            out << "  N = " << s.modulus() << '\n';
            out << std::left << std::setw(8) << "alpha" << std::setw(8) << "weight"
                << std::setw(10) << "smallest" << std::setw(6) << "gap"
                << "gap(overlined)" << '\n';
            for (std::uint32_t i = 1; i <= s.alpha_count(); ++i) {
                const AlphaEntry& e = s.alpha(i);
                out << std::left << std::setw(8) << e.value << std::setw(8) << e.weight
                    << std::setw(10) << e.smallest;
                if (e.sentinel)
                    out << "sentinel";
                else
                    out << std::setw(6) << s.gap(e.value, false) << s.gap(e.value, true);
                out << '\n';
            }
            return 0;
        }
        case OutputFormat::json: {
            nlohmann::json j = envelope(cfg);
            nlohmann::json alpha = nlohmann::json::array();
            for (std::uint32_t i = 1; i <= s.alpha_count(); ++i) {
                const AlphaEntry& e = s.alpha(i);
                nlohmann::json row{{"value", e.value},
                                   {"weight", e.weight},
                                   {"smallest", e.smallest},
                                   {"sentinel", e.sentinel}};
                if (e.sentinel) {
                    row["gap_plain"] = nullptr;
                    row["gap_overlined"] = nullptr;
                } else {
                    row["gap_plain"] = s.gap(e.value, false);
                    row["gap_overlined"] = s.gap(e.value, true);
                }
                alpha.push_back(std::move(row));
            }
            j["a"] = s.base();
            j["N"] = s.modulus();
            j["alpha"] = std::move(alpha);
            out << dump_json(j);
            return 0;
        }
        case OutputFormat::csv: {
            out << "value,weight,smallest,gap_plain,gap_overlined\n";
            for (std::uint32_t i = 1; i <= s.alpha_count(); ++i) {
                const AlphaEntry& e = s.alpha(i);
                out << e.value << ',' << e.weight << ',' << e.smallest << ',';
                if (e.sentinel)
                    out << ',';
                else
                    out << s.gap(e.value, false) << ',' << s.gap(e.value, true);
                out << '\n';
            }
            return 0;
        }
        }
        return 2;
    });
}

int cmd_count(const RunConfig& cfg, Side side, std::ostream& out) {
    return guarded(out, [&]() -> int {
        SpectrumSet s(cfg.a, cfg.modulus);
        CountTable table = side == Side::D ? count_D(s, cfg.effective_k_max(), cfg.q_max)
                                           : count_E(s, cfg.effective_k_max(), cfg.q_max);
        switch (cfg.format) {
        case OutputFormat::text: {
            out << "side " << to_string(side) << "  a =";
            for (std::uint32_t v : s.base()) out << ' ' << v;
            out << "  N = " << s.modulus() << "  n <= " << cfg.q_max << "  k <= "
                << cfg.effective_k_max() << '\n';
            out << std::left << std::setw(6) << "n" << std::setw(10) << "total"
                << "by k" << '\n';
            for (std::uint32_t n = 0; n <= cfg.q_max; ++n) {
                out << std::left << std::setw(6) << n << std::setw(10)
                    << table.row_total(n).get_str();
                bool first = true;
                for (std::uint32_t k = 0; k <= cfg.effective_k_max(); ++k) {
                    const BigInt& c = table.at(k, n);
                    if (c == 0) continue;
                    if (!first) out << ' ';
                    out << 'k' << k << ':' << c.get_str();
                    first = false;
                }
                out << '\n';
            }
            return 0;
        }
        case OutputFormat::json: {
            nlohmann::json j = envelope(cfg);
            j["table"] = table.to_json();
            out << dump_json(j);
            return 0;
        }
        case OutputFormat::csv:
            out << table.to_csv();
            return 0;
        }
        return 2;
    });
}

int cmd_expand(const RunConfig& cfg, ExpandTarget target, std::ostream& out) {
    return guarded(out, [&]() -> int {
        SpectrumSet s(cfg.a, cfg.modulus);
        Series series = Series::zero(Window{0, 0});
        switch (target) {
        case ExpandTarget::product:
            series = product_formula(s, cfg.q_max);
            break;
        case ExpandTarget::f:
            series = build_f_family(s, cfg.q_max, cfg.effective_x_max()).at(1);
            break;
        case ExpandTarget::r1:
            series = solve_r1(s.a(1), s.modulus(), Window{cfg.q_max, cfg.effective_x_max()});
            break;
        }
        switch (cfg.format) {
        case OutputFormat::text:
            out << render_series_text(series) << '\n';
            return 0;
        case OutputFormat::json: {
            nlohmann::json j = envelope(cfg);
            j["target"] = target_name(target);
            j["window"] = {{"q_max", series.window().q_max}, {"x_max", series.window().x_max}};
            j["terms"] = series_terms_json(series);
            out << dump_json(j);
            return 0;
        }
        case OutputFormat::csv: {
            out << "d,x,q,coeff\n";
            for (const auto& [m, c] : series.terms())
                out << m.d << ',' << m.x << ',' << m.q << ',' << c.get_str() << '\n';
            return 0;
        }
        }
        return 2;
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    return guarded(out, [&]() -> int {
        SpectrumSet s(cfg.a, cfg.modulus);

        if (cfg.format == OutputFormat::csv) {
            // CSV is defined for the theorem table only.
            if (cfg.checks != std::vector<std::string>{"theorem"})
                fail(ErrorKind::InvalidArgument,
                     "csv verify output needs --checks theorem");
            TheoremTable table = check_theorem(s, cfg.q_max);
            out << table.to_csv();
            return table.result.ok() ? 0 : 1;
        }

        RunContext ctx(s, Window{cfg.q_max, cfg.effective_x_max()}, cfg.q_max);
        std::vector<CheckResult> results = run_checks(ctx, cfg.checks);

        std::size_t failed = 0, skipped = 0;
        for (const auto& r : results) {
            if (r.status == CheckStatus::fail) ++failed;
            if (r.status == CheckStatus::skipped) ++skipped;
        }
        const char* overall = failed ? "fail" : "ok";

        if (cfg.format == OutputFormat::json) {
            nlohmann::json j = envelope(cfg);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : results) arr.push_back(r.to_json());
            j["results"] = std::move(arr);
            j["status"] = overall;
            out << dump_json(j);
        } else {
            for (const auto& r : results) {
                out << std::left << std::setw(9) << to_string(r.status) << r.name << ' '
                    << r.params.dump();
                if (r.counterexample) {
                    const Counterexample& ce = *r.counterexample;
                    out << "  at d^" << ce.monomial.d << " x^" << ce.monomial.x << " q^"
                        << ce.monomial.q << ": lhs=" << ce.lhs << " rhs=" << ce.rhs;
                }
                out << '\n';
            }
            out << "status: " << overall << " (" << results.size() << " results, " << failed
                << " failed, " << skipped << " skipped)\n";
        }
        return failed ? 1 : 0;
    });
}

}
