#include "apery/oper.hpp"

#include <sstream>

namespace apery {

RecOperator::RecOperator(std::vector<PolyQ> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.size() < 2) {
    throw Error(ErrorCode::NotARecurrence, "operator must have positive order in N");
  }
}

RecOperator RecOperator::normalized() const {
  Integer den_lcm(1);
  for (const auto& p : coeffs_) den_lcm = Integer::lcm(den_lcm, p.denominator_lcm());
  std::vector<PolyQ> c;
  c.reserve(coeffs_.size());
  Rational scale{Rational(den_lcm)};
  for (const auto& p : coeffs_) c.push_back(p.scaled(scale));
  Integer content(0);
  for (const auto& p : c) content = Integer::gcd(content, p.integer_content());
  if (!content.is_zero() && !content.is_one()) {
    Rational inv = Rational(Integer(1), content);
    for (auto& p : c) p = p.scaled(inv);
  }
  if (c.back().leading_coeff().sign() < 0) {
    for (auto& p : c) p = -p;
  }
  return RecOperator(std::move(c));
}

std::string RecOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    PolyQ p = coeffs_[i];
    if (p.is_zero()) continue;
    bool neg = true;
    for (const auto& co : p.coeffs()) {
      if (co.sign() > 0) neg = false;
    }
    if (neg) p = -p;
    std::string ps = p.to_string();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    std::string body = p.degree() > 0 ? "(" + ps + ")" : ps;
    if (i == 0) {
      os << body;
    } else {
      if (ps != "1") os << body << "*";
      os << "N";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

Rational apply_operator(const RecOperator& ope, std::span<const Rational> seq, long n) {
  long L = ope.order();
  if (n < 0 || n + L >= static_cast<long>(seq.size())) {
    throw Error(ErrorCode::OutOfRange, "apply_operator: sequence does not cover n..n+L");
  }
  Rational acc(0);
  Rational at(n);
  for (int i = 0; i <= L; ++i) {
    acc += ope.coeff(i).eval(at) * seq[n + i];
  }
  return acc;
}

PolyQ leading_poly_in_N(const RecOperator& ope) {
  int d = 0;
  for (const auto& p : ope.coeffs()) d = std::max(d, p.degree());
  std::vector<Rational> c;
  c.reserve(ope.coeffs().size());
  for (const auto& p : ope.coeffs()) c.push_back(p.coeff(d));
  return PolyQ(std::move(c), "N");
}

}  // namespace apery
