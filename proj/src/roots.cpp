#include "apery/roots.hpp"

#include <sstream>

namespace apery {

BigFloat Complex::modulus() const {
  BigFloat r(std::max(re.digits(), im.digits()));
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

namespace {

Complex eval_complex(const std::vector<BigFloat>& coeffs, const Complex& z) {
  int d = std::max(z.re.digits(), z.im.digits());
  Complex acc{BigFloat(0.0, d), BigFloat(0.0, d)};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + *it;
  }
  return acc;
}

}  // namespace

GrowthRoot dominant_root(const PolyQ& p, int precision_digits) {
  if (p.is_zero()) throw Error(ErrorCode::BadArgument, "dominant_root of the zero polynomial");
  int deg = p.degree();
  if (deg < 1) throw Error(ErrorCode::BadArgument, "dominant_root requires degree >= 1");
  int d = precision_digits + 20;

  // monic coefficients
  std::vector<BigFloat> c;
  c.reserve(deg + 1);
  Rational lead = p.leading_coeff();
  for (int i = 0; i <= deg; ++i) c.emplace_back(p.coeff(i) / lead, d);

  GrowthRoot out;
  out.value = BigFloat(0.0, d);

  if (deg == 1) {
    Complex r{-c[0], BigFloat(0.0, d)};
    out.all_roots.push_back(r);
    out.value = r.modulus();
    return out;
  }

  // Cauchy bound seed radius, perturbed circle start.
  BigFloat radius(1.0, d);
  for (int i = 0; i < deg; ++i) {
    BigFloat m = c[i].abs() + BigFloat(1.0, d);
    if (m > radius) radius = m;
  }
  std::vector<Complex> z;
  z.reserve(deg);
  BigFloat two_pi = BigFloat(2.0, d) * BigFloat::pi(d);
  for (int i = 0; i < deg; ++i) {
    BigFloat theta = two_pi * BigFloat(static_cast<double>(i), d) / BigFloat(static_cast<double>(deg), d) +
                     BigFloat(0.3971743, d);  // detune from axes and from symmetry
    BigFloat s(0.0, d), co(0.0, d);
    mpfr_sin_cos(s.raw(), co.raw(), theta.raw(), MPFR_RNDN);
    z.emplace_back(radius * co, radius * s);
  }

  BigFloat tol = BigFloat::pow10(-(precision_digits / 2) - 10, d) * radius;
  const int max_iter = 500;
  for (int iter = 0; iter < max_iter; ++iter) {
    BigFloat max_step(0.0, d);
    for (int i = 0; i < deg; ++i) {
      Complex num = eval_complex(c, z[i]);
      Complex den{BigFloat(1.0, d), BigFloat(0.0, d)};
      for (int j = 0; j < deg; ++j) {
        if (j != i) den = den * (z[i] - z[j]);
      }
      Complex step = num / den;
      z[i] = z[i] - step;
      BigFloat sm = step.modulus();
      if (sm > max_step) max_step = sm;
    }
    if (max_step < tol) break;
  }

  out.all_roots = z;
  for (const auto& r : z) {
    BigFloat m = r.modulus();
    if (m > out.value) out.value = m;
  }
  // residual check at the contract tolerance
  BigFloat res_tol = BigFloat::pow10(-(precision_digits / 2), d) * (radius + BigFloat(1.0, d));
  for (const auto& r : z) {
    if (!(eval_complex(c, r).modulus() < res_tol)) {
      throw Error(ErrorCode::BadArgument, "dominant_root: iteration did not converge");
    }
  }
  return out;
}

namespace {

// sqrt of a positive rational as s*sqrt(D) with rational s and squarefree D
std::optional<std::pair<Rational, Integer>> sqrt_as_radical(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return std::make_pair(Rational(0), Integer(1));
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = x.num() * x.den();
  Integer s(1), D(1);
  for (const auto& [prime, e] : factor_integer(pq)) {
    for (int i = 0; i < e / 2; ++i) s *= prime;
    if (e % 2) D *= prime;
  }
  return std::make_pair(Rational(s, x.den()), D);
}

std::string format_rational(const Rational& r) { return r.to_string(); }

}  // namespace

std::optional<std::string> exact_radical_form(const PolyQ& p) {
  if (p.degree() == 1) {
    Rational root = -p.coeff(0) / p.coeff(1);
    return format_rational(root);
  }
  if (p.degree() != 2) return std::nullopt;
  Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() <= 0) return std::nullopt;
  auto rad = sqrt_as_radical(disc);
  if (!rad) return std::nullopt;
  auto [s, D] = *rad;
  Rational u = -b / (Rational(2) * a);
  Rational t = s / (Rational(2) * a);
  // dominant root: pick the sign giving the larger modulus
  // |u + t sqrt(D)| vs |u - t sqrt(D)|: larger when t*u >= 0 keeps + sign
  bool plus = (t * u).sign() >= 0;
  if (!plus) t = -t;
  std::ostringstream os;
  if (D.is_one()) {
    return format_rational(u + t);
  }
  if (!u.is_zero()) os << format_rational(u);
  if (t.sign() >= 0 && !u.is_zero()) os << "+";
  if (t == Rational(-1)) {
    os << "-";
  } else if (t != Rational(1)) {
    os << format_rational(t) << "*";
  }
  os << "sqrt(" << D.to_string() << ")";
  return os.str();
}

}  // namespace apery
