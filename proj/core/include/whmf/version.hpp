#pragma once

namespace whmf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace whmf
