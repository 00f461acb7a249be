#pragma once

// Test-only tanh-sinh quadrature over [0,1] at high precision. Independent of
// the exact integral decompositions it is used to check.

#include <functional>

#include "apery/numbers.hpp"

namespace apery_test {

using apery::BigFloat;

inline BigFloat tanh_sinh_01(const std::function<BigFloat(const BigFloat&)>& f, int digits) {
  int d = digits + 25;
  BigFloat pi = BigFloat::pi(d);
  BigFloat half_pi = pi / BigFloat(2.0, d);
  BigFloat quarter_pi = pi / BigFloat(4.0, d);
  BigFloat h(1.0 / 128.0, d);
  BigFloat sum(0.0, d);
  BigFloat cutoff = BigFloat::pow10(-(digits + 15), d);
  const int N = static_cast<int>(6.0 * 128);
  for (int j = -N; j <= N; ++j) {
    BigFloat t = h * BigFloat(static_cast<double>(j), d);
    BigFloat et = t.exp();
    BigFloat sinh_t = (et - BigFloat(1.0, d) / et) / BigFloat(2.0, d);
    BigFloat cosh_t = (et + BigFloat(1.0, d) / et) / BigFloat(2.0, d);
    BigFloat s = half_pi * sinh_t;
    BigFloat es = s.exp();
    BigFloat cosh_s = (es + BigFloat(1.0, d) / es) / BigFloat(2.0, d);
    BigFloat w = quarter_pi * cosh_t / (cosh_s * cosh_s);
    if (w < cutoff) continue;
    BigFloat x = BigFloat(1.0, d) / (BigFloat(1.0, d) + (-(BigFloat(2.0, d) * s)).exp());
    sum = sum + w * f(x);
  }
  return sum * h;
}

}  // namespace apery_test
