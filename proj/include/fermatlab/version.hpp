#pragma once

namespace fermatlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fermatlab
