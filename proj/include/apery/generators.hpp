#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/poly.hpp"

namespace apery {

// One binomial factor C(top, bottom)^exponent with linear forms a*n + b*k + c.
struct LinearForm {
  Integer n_coeff{0};
  Integer k_coeff{0};
  Integer constant{0};

  Integer eval(const Integer& n, const Integer& k) const {
    return n_coeff * n + k_coeff * k + constant;
  }
  std::string to_string() const;
};

struct BinomialFactor {
  LinearForm top;
  LinearForm bottom;
  unsigned exponent = 1;
};

// Summand F(n,k) = scalar * prod C(top,bottom)^e * geometricBase^k.
struct HyperSummand {
  std::vector<BinomialFactor> binomial_factors;
  Rational geometric_base{1};
  Rational scalar{1};

  Rational eval(long n, long k) const;
  std::string to_string() const;
};

// Named constant usable as a basis element of a ValueInSpan.
struct BasisConstant {
  enum class Kind { Unit, LogRational, ArctanInverse, LogOnePlusInverseSquare };
  Kind kind = Kind::Unit;
  Rational log_arg{1};   // LogRational: the rational a in ln(a)
  long m = 1;            // Arctan / LogOnePlusInverseSquare parameter

  std::string name() const;
  BigFloat value(int digits) const;
  friend bool operator==(const BasisConstant& a, const BasisConstant& b) {
    return a.kind == b.kind && a.log_arg == b.log_arg && a.m == b.m;
  }
};

// Exact value sum_i coords[i] * basis[i]; basis[0] is always the constant 1.
struct ValueInSpan {
  std::vector<BasisConstant> basis;
  std::vector<Rational> coords;

  BigFloat value(int digits) const;
};

// term n = sum_{k=0}^{n} F(n,k), exactly.
std::vector<Rational> binomial_sum_sequence(const HyperSummand& F, long K);

// term n = constant term of P^n, exact Laurent powering.
std::vector<Rational> constant_term_sequence(const LaurentPoly& P, long K);

// I(n) = int_0^1 (x(1-x)/(1-(1-a)x))^n / (1-(1-a)x) dx, decomposed exactly
// over the basis [1, ln a]. Requires a > 0, a != 1.
std::vector<ValueInSpan> log_integral_sequence(const Rational& a, long K);

// I(n) = 2^(s1*n) m^(s2*n) int_0^1 x^(2n)(1-x)^(2n) / (m^2+x^2)^(2n+1) dx,
// decomposed exactly over [1, arctan(1/m), ln(1+1/m^2)]. Requires m >= 1.
// Defaults s1 = 3, s2 = 2 (the odd-denominator arctan family).
std::vector<ValueInSpan> arctan_integral_sequence(long m, long scale_log2, long scale_m, long K);

// q(n) = coordinate of basis[target], p(n) = -(coordinate of 1): the value
// then satisfies theta - p(n)/q(n) = I(n)/q(n). Coordinates on every other
// non-unit basis element must vanish.
struct PQSequences {
  std::vector<Rational> p;
  std::vector<Rational> q;
};
PQSequences pq_from_values(const std::vector<ValueInSpan>& vals, size_t target);

}  // namespace apery
