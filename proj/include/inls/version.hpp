#pragma once

namespace inls {

inline constexpr const char* kVersion = "inlslab 0.1.0";

}
