#pragma once

namespace pegsim {

inline constexpr const char* kVersion = "0.1.0";

/// Bumped whenever any emitted CSV column set changes. Recorded in every run manifest.
inline constexpr int kCsvFormatVersion = 1;

} // namespace pegsim
