#pragma once

namespace clipvol {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace clipvol
