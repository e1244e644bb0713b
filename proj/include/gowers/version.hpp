#pragma once

namespace gowers {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gowers
