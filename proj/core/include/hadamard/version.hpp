#pragma once

namespace hadamard {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hadamard
