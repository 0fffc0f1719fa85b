#pragma once

namespace symcurve {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace symcurve
