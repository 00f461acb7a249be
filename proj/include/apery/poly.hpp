#pragma once

#include <map>
#include <string>
#include <vector>

#include "apery/numbers.hpp"

namespace apery {

// Dense univariate polynomial over Q, lowest degree first.
// Trailing coefficient is nonzero unless the polynomial is zero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::string var) : var_(std::move(var)) {}
  PolyQ(std::vector<Rational> coeffs, std::string var = "n");

  static PolyQ constant(const Rational& c, std::string var = "n");
  static PolyQ variable(std::string var = "n");  // the monomial x

  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading_coeff() const;

  Rational eval(const Rational& at) const;

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ operator-() const;
  PolyQ scaled(const Rational& s) const;
  PolyQ pow(unsigned e) const;
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  // lcm of coefficient denominators
  Integer denominator_lcm() const;
  // gcd of numerators of an integer-coefficient polynomial
  Integer integer_content() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
  std::string var_ = "n";
};

// poly_eval per contract (exact evaluation).
inline Rational poly_eval(const PolyQ& p, const Rational& at) { return p.eval(at); }

// Sparse Laurent polynomial over Q: exponent -> coefficient, no stored zeros.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<long, Rational> coeffs);

  static LaurentPoly unit();  // x^0

  bool is_zero() const { return c_.empty(); }
  Rational coeff(long e) const;
  const std::map<long, Rational>& coeffs() const { return c_; }
  long min_exponent() const;  // requires nonzero
  long max_exponent() const;
  void set(long e, const Rational& v);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const Rational& s) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::map<long, Rational> c_;
};

// laurent_mul per contract: exact convolution of coefficient maps.
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

}  // namespace apery
