#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "overq/checks.hpp"

namespace overq {

enum class OutputFormat { text, json, csv };

inline constexpr std::uint32_t kFollowQMax = UINT32_MAX;  // x_max/k_max default marker

struct RunConfig {
    std::vector<std::uint32_t> a;
    std::uint32_t modulus = 0;
    std::uint32_t q_max = 40;
    std::uint32_t x_max = kFollowQMax;  // explicit 0 is meaningful (constant slice)
    std::uint32_t k_max = kFollowQMax;
    OutputFormat format = OutputFormat::text;
    std::vector<std::string> checks;  // empty means all
    std::string out;                  // empty means stdout

    std::uint32_t effective_x_max() const { return x_max == kFollowQMax ? q_max : x_max; }
    std::uint32_t effective_k_max() const { return k_max == kFollowQMax ? q_max : k_max; }
    nlohmann::json to_json() const;
};

enum class ExpandTarget { product, f, r1 };

// Exit codes: 0 success, 1 at least one check failed, 2 invalid input.
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);
int cmd_count(const RunConfig& cfg, Side side, std::ostream& out);
int cmd_expand(const RunConfig& cfg, ExpandTarget target, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Renders with sorted keys and stable layout; used everywhere JSON leaves
// the process so that re-parsing and re-emitting reproduces the bytes.
std::string dump_json(const nlohmann::json& j);

std::string render_series_text(const Series& s);
nlohmann::json series_terms_json(const Series& s);

}
