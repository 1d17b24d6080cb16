#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>

#include "lebgeo/scalar.hpp"

namespace lebgeo {

// arbitrary-precision real with runtime-settable mantissa, no expression templates
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Working mantissa width plus the derived margin for accepting a sign decision.
/// A sign is accepted only when |value| > decision_margin() * scale, where scale
/// is the magnitude of the largest intermediate term.
struct PrecisionContext {
  int mantissa_bits = 256;

  double decision_margin() const { return std::ldexp(1.0, -mantissa_bits / 4); }

  static int digits10_for_bits(int bits) {
    return static_cast<int>(std::ceil(bits * 0.30103)) + 2;
  }

  // default widths: node gaps near +-1 shrink like 1/n^2, and the signed-piece
  // cancellation grows with n
  static PrecisionContext for_degree(int n) {
    PrecisionContext ctx;
    ctx.mantissa_bits = n <= 200 ? 256 : 1024;
    return ctx;
  }
};

// sets the global BigFloat precision for the current scope
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int mantissa_bits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(PrecisionContext::digits10_for_bits(mantissa_bits));
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

}  // namespace lebgeo
