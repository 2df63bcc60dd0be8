#pragma once

namespace hausdorff {

inline constexpr const char* kVersion = "1.0.0";

/// Stamped into every CSV/JSON artifact so reported numbers stay reproducible.
inline constexpr const char* kSchemaVersion = "hausdorff-1";

}  // namespace hausdorff
