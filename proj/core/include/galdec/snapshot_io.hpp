#pragma once

#include <iosfwd>
#include <string>

#include "galdec/density_kernel.hpp"

namespace galdec {

/// Kernel snapshot: a `key = value` header block (rep, n, min, max, mass,
/// hbar) terminated by `---`, followed by n*n lines "re,im" in row-major
/// order. Decimal text, 17 significant digits, platform independent.
void write_snapshot(std::ostream& out, const DensityKernel& k);
void write_snapshot_file(const std::string& path, const DensityKernel& k);

DensityKernel read_snapshot(std::istream& in);
DensityKernel read_snapshot_file(const std::string& path);

/// 17-significant-digit decimal rendering used by all CSV emitters.
std::string format_g17(double v);

}  // namespace galdec
