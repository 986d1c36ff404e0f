#pragma once

#define RESREC_VERSION_MAJOR 0
#define RESREC_VERSION_MINOR 1
#define RESREC_VERSION_PATCH 0

namespace resrec {
inline const char* version() { return "0.1.0"; }
}  // namespace resrec
