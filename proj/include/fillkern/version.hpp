#pragma once

namespace fillkern {
inline constexpr const char *kVersion = "0.1.0";
}
