#pragma once

namespace halfhex {

inline constexpr const char* library_version = "1.0.0";

}
