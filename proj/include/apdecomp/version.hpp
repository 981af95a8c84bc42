#pragma once

namespace apd {

inline constexpr const char* kVersion = "1.0.0";

}
