#pragma once

namespace crged {

inline constexpr const char* kVersion = "1.0.0";

} // namespace crged
