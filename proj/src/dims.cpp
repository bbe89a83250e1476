#include "kdirac/dims.hpp"

#include <string>

#include "kdirac/errors.hpp"

namespace kdirac {

namespace {

using Wide = __int128;
using UWide = unsigned __int128;

UWide uabs(Wide x) { return x < 0 ? UWide(-(x + 1)) + 1 : UWide(x); }

UWide gcd_u(UWide a, UWide b) {
  while (b != 0) {
    UWide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

constexpr Wide kMax64 = Wide(INT64_MAX);

std::int64_t narrow_checked(Wide x, const char* what) {
  if (x > kMax64 || x < -kMax64) {
    throw StructuralError(std::string(what) + ": result exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

std::int64_t weyl_dim_sl(const std::vector<std::int64_t>& hw) {
  const std::size_t n = hw.size();
  if (n == 0) throw InvalidParameter("weyl_dim_sl: empty highest weight");
  for (std::size_t m = 0; m + 1 < n; ++m) {
    if (hw[m] < hw[m + 1]) {
      throw InvalidParameter("weyl_dim_sl: entries not nonincreasing at position " +
                             std::to_string(m + 1));
    }
  }
  // Running fraction num/den, reduced after every factor so both stay small
  // (the final value is an integer, so den ends at 1).
  Wide num = 1, den = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Wide fn = Wide(hw[a]) - Wide(hw[b]) + Wide(b - a);
      const Wide fd = Wide(b - a);
      if (uabs(num) > uabs(kMax64) * uabs(kMax64) / uabs(fn)) {
        throw StructuralError("weyl_dim_sl: intermediate product overflow");
      }
      num *= fn;
      den *= fd;
      const UWide g = gcd_u(uabs(num), uabs(den));
      if (g > 1) {
        num /= Wide(g);
        den /= Wide(g);
      }
    }
  }
  if (den != 1) throw StructuralError("weyl_dim_sl: non-integral dimension");
  return narrow_checked(num, "weyl_dim_sl");
}

std::int64_t dim_so4(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) {
    throw InvalidParameter("dim_so4: (" + std::to_string(a) + "," + std::to_string(b) +
                           ") is not dominant");
  }
  return narrow_checked((Wide(a) + 1) * (Wide(b) + 1), "dim_so4");
}

std::int64_t dim_module(const ModuleDescriptor& d) {
  const std::int64_t ds = weyl_dim_sl(d.slk_hw);
  const std::int64_t dr = dim_so4(d.so4_a, d.so4_b);
  return narrow_checked(Wide(ds) * Wide(dr), "dim_module");
}

}  // namespace kdirac
