#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apery/poly.hpp"

namespace apery {

// Linear recurrence operator sum_{i=0}^{L} a_i(n) N^i with polynomial
// coefficients in n; coeffs[L] nonzero, L >= 1.
class RecOperator {
 public:
  RecOperator() = default;
  explicit RecOperator(std::vector<PolyQ> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const PolyQ& coeff(int i) const { return coeffs_[i]; }
  const std::vector<PolyQ>& coeffs() const { return coeffs_; }

  // Display normalization: rational denominators cleared, integer content
  // removed, leading polynomial's leading coefficient positive.
  RecOperator normalized() const;

  std::string to_string() const;

  friend bool operator==(const RecOperator& a, const RecOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<PolyQ> coeffs_;
};

// sum_i a_i(n) seq[n+i]; seq must cover n..n+L.
Rational apply_operator(const RecOperator& ope, std::span<const Rational> seq, long n);

// Let d = max_i deg_n(a_i); returns sum_i [n^d coefficient of a_i] N^i.
PolyQ leading_poly_in_N(const RecOperator& ope);

}  // namespace apery
