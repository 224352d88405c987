#pragma once

namespace vohedge {

#ifndef VOHEDGE_VERSION
#define VOHEDGE_VERSION "0.0.0"
#endif

inline constexpr const char* kVersion = VOHEDGE_VERSION;

}  // namespace vohedge
