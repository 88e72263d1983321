#pragma once

namespace artinlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace artinlab
