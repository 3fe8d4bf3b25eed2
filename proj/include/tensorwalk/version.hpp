#pragma once

namespace tensorwalk {

inline constexpr const char* kVersion = "tensorwalk 0.1.0";

}  // namespace tensorwalk
