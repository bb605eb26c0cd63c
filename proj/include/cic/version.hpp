#pragma once

namespace cic {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cic
