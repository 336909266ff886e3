#pragma once

namespace overq {

inline constexpr const char* kToolVersion = "0.1.0";

}
