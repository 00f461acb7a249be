#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/poly.hpp"

namespace apery {

// Complex value over BigFloat; enough arithmetic for simultaneous iteration.
struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  BigFloat modulus() const;
};

// Dominant-root record: value is the maximum modulus among all roots.
struct GrowthRoot {
  BigFloat value;
  std::vector<Complex> all_roots;
};

// All complex roots of p (degree >= 1) by Durand-Kerner simultaneous
// iteration at the given decimal precision; every returned root satisfies
// |p(root)| < 10^(-precision/2) * scale.
GrowthRoot dominant_root(const PolyQ& p, int precision_digits);

// Exact u + t*sqrt(D) form of the dominant real root of a quadratic with
// rational coefficients and positive discriminant; nullopt otherwise.
// Degree-1 polynomials yield their exact rational root.
std::optional<std::string> exact_radical_form(const PolyQ& p);

}  // namespace apery
