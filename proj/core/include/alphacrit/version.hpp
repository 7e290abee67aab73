#pragma once

namespace alphacrit {

inline constexpr const char* kVersion = "0.1.0";

}
