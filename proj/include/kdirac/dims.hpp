// Exact dimension formulas for the inducing modules.
//
//   * sl(k) factor via the Weyl dimension formula in gl-coordinates:
//       dim = prod_{a<b} (hw_a - hw_b + b - a) / (b - a),
//     evaluated with gcd-reduced 128-bit integer accumulation and an
//     overflow-checked narrowing back to 64 bits.
//   * so(4) = sl(2) + sl(2) factor: dim(a,b) = (a+1)(b+1).
//
// Inputs come from pushdown::ModuleDescriptor; dim_module multiplies the two
// factors (again overflow-checked).

#pragma once

#include <cstdint>
#include <vector>

#include "kdirac/pushdown.hpp"

namespace kdirac {

// Requires a nonincreasing entry vector (InvalidParameter otherwise; the
// zero-length vector is rejected too).  Shift-invariant:
// weyl_dim_sl(hw + c) == weyl_dim_sl(hw).
std::int64_t weyl_dim_sl(const std::vector<std::int64_t>& hw);

// (a,b) >= 0 required.
std::int64_t dim_so4(std::int64_t a, std::int64_t b);

std::int64_t dim_module(const ModuleDescriptor& d);

}  // namespace kdirac
