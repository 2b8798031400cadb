#pragma once

namespace choicepa {
inline constexpr const char* kVersion = "0.1.0";
}
