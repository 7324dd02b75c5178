#pragma once

namespace tws {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tws
