#include "apery/poly.hpp"

#include <sstream>

namespace apery {

PolyQ::PolyQ(std::vector<Rational> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
  normalize();
}

void PolyQ::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c, std::string var) {
  return PolyQ({c}, std::move(var));
}

PolyQ PolyQ::variable(std::string var) {
  return PolyQ({Rational(0), Rational(1)}, std::move(var));
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational PolyQ::leading_coeff() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Rational PolyQ::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return PolyQ(std::move(c), a.var_);
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return PolyQ(std::move(c), a.var_);
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ(a.var_);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PolyQ(std::move(c), a.var_);
}

PolyQ PolyQ::operator-() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return PolyQ(std::move(c), var_);
}

PolyQ PolyQ::scaled(const Rational& s) const {
  if (s.is_zero()) return PolyQ(var_);
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x * s);
  return PolyQ(std::move(c), var_);
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ r = PolyQ::constant(Rational(1), var_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Integer PolyQ::denominator_lcm() const {
  Integer l(1);
  for (const auto& x : c_) l = Integer::lcm(l, x.den());
  return l;
}

Integer PolyQ::integer_content() const {
  Integer g(0);
  for (const auto& x : c_) g = Integer::gcd(g, x.num());
  return g.abs();
}

std::string PolyQ::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& co = c_[i];
    if (co.is_zero()) continue;
    Rational a = co.abs();
    if (first) {
      if (co.sign() < 0) os << "-";
      first = false;
    } else {
      os << (co.sign() < 0 ? "-" : "+");
    }
    bool unit_coeff = (a == Rational(1)) && i > 0;
    if (!unit_coeff) {
      if (a.is_integer()) {
        os << a.to_string();
      } else {
        os << a.num().to_string() << "/" << a.den().to_string();
      }
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

LaurentPoly::LaurentPoly(std::map<long, Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero()) {
      it = c_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPoly LaurentPoly::unit() {
  LaurentPoly p;
  p.c_[0] = Rational(1);
  return p;
}

Rational LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exponent() const { return c_.begin()->first; }
long LaurentPoly::max_exponent() const { return c_.rbegin()->first; }

void LaurentPoly::set(long e, const Rational& v) {
  if (v.is_zero()) {
    c_.erase(e);
  } else {
    c_[e] = v;
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, v] : b.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) {
      r.c_[e] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, va] : a.c_) {
    for (const auto& [eb, vb] : b.c_) {
      long e = ea + eb;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        Rational prod = va * vb;
        if (!prod.is_zero()) r.c_[e] = std::move(prod);
      } else {
        it->second += va * vb;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  LaurentPoly r;
  if (s.is_zero()) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    Rational a = v.abs();
    if (first) {
      if (v.sign() < 0) os << "-";
      first = false;
    } else {
      os << (v.sign() < 0 ? "-" : "+");
    }
    bool unit_coeff = (a == Rational(1)) && e != 0;
    if (!unit_coeff) os << a.to_string();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      os << "x";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace apery
