#pragma once

namespace transurf {

inline constexpr const char* kVersion = "0.1.0";

} // namespace transurf
