#pragma once

#include <iosfwd>
#include <string>

#include "dualwave/grid.hpp"

namespace dualwave {

/// DMF1 binary field format, little-endian:
///   "DMF1" | u32 version=1 | u8 sector (0=XT,1=KE) | u8 n_axes |
///   per axis: u64 n_points, f64 origin, f64 spacing |
///   samples as (re,im) f64 pairs, row-major.
/// Round-trips bit-exactly.
void dump_field(const Field& f, std::ostream& out);
void dump_field(const Field& f, const std::string& path);

/// Rejects foreign or truncated files with a FormatError naming the first
/// bad byte offset.
Field load_field(std::istream& in);
Field load_field(const std::string& path);

}  // namespace dualwave
