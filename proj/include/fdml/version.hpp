#pragma once

namespace fdml {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fdml
