#pragma once

namespace bosewalk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bosewalk
