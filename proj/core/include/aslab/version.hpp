#pragma once

namespace aslab {

inline constexpr const char* kVersion = "aslab 1.0.0";

}  // namespace aslab
