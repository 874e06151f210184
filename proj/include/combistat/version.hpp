#pragma once

#include <string_view>

namespace combistat {

// Stamped into cache keys; bump on any change that affects serialized output.
inline constexpr std::string_view kCodeVersion = "1.0.0";

}  // namespace combistat
