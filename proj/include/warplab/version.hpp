#pragma once

namespace warplab {

inline constexpr const char* kVersion = "0.1.0";

}
