#pragma once

#include <cmath>

#if defined(__SIZEOF_FLOAT128__)
#include <quadmath.h>
#define LOGPOLE_HAVE_FLOAT128 1
#endif

namespace logpole {

// Math shims so value-level evaluators can run in double or, where a
// cross-check needs headroom below the double rounding floor, __float128.
template <class Real>
struct num {
  static Real exp(Real x) { return std::exp(x); }
  static Real sqrt(Real x) { return std::sqrt(x); }
  static Real pow(Real x, Real p) { return std::pow(x, p); }
  static Real abs(Real x) { return std::fabs(x); }
};

#if LOGPOLE_HAVE_FLOAT128
template <>
struct num<__float128> {
  static __float128 exp(__float128 x) { return ::expq(x); }
  static __float128 sqrt(__float128 x) { return ::sqrtq(x); }
  static __float128 pow(__float128 x, __float128 p) { return ::powq(x, p); }
  static __float128 abs(__float128 x) { return ::fabsq(x); }
};
#endif

}  // namespace logpole
