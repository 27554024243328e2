#pragma once

namespace holoconn {

inline constexpr const char* kEngineName = "holoconn";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace holoconn
