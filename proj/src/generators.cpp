#include "apery/generators.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace apery {

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Integer& c, const char* sym) {
    if (c.is_zero()) return;
    std::string cs = c.abs().to_string();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    if (sym[0] == '\0') {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << sym;
    }
  };
  emit(n_coeff, "n");
  emit(k_coeff, "k");
  emit(constant, "");
  if (first) os << "0";
  return os.str();
}

Rational HyperSummand::eval(long n, long k) const {
  Rational acc = scalar;
  for (const auto& bf : binomial_factors) {
    Integer top = bf.top.eval(Integer(n), Integer(k));
    Integer bot = bf.bottom.eval(Integer(n), Integer(k));
    if (bot.sign() < 0) return Rational(0);
    if (top.sign() >= 0 && bot > top) return Rational(0);
    if (!bot.fits_long()) {
      throw Error(ErrorCode::OutOfRange, "binomial lower index too large");
    }
    Integer b = Integer::binomial(top, static_cast<unsigned long>(bot.to_long()));
    Rational bp{Rational(b)};
    for (unsigned e = 1; e < bf.exponent; ++e) bp *= Rational(b);
    acc *= bp;
    if (acc.is_zero()) return acc;
  }
  if (!(geometric_base == Rational(1))) acc *= geometric_base.pow(k);
  return acc;
}

std::string HyperSummand::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (!(scalar == Rational(1))) {
    os << scalar.to_string();
    first = false;
  }
  for (const auto& bf : binomial_factors) {
    if (!first) os << "*";
    first = false;
    os << "binomial(" << bf.top.to_string() << "," << bf.bottom.to_string() << ")";
    if (bf.exponent != 1) os << "^" << bf.exponent;
  }
  if (!(geometric_base == Rational(1))) {
    if (!first) os << "*";
    first = false;
    std::string b = geometric_base.to_string();
    if (geometric_base.is_integer() && geometric_base.sign() > 0) {
      os << b << "^k";
    } else {
      os << "(" << b << ")^k";
    }
  }
  if (first) os << "1";
  return os.str();
}

std::string BasisConstant::name() const {
  switch (kind) {
    case Kind::Unit:
      return "1";
    case Kind::LogRational:
      return "ln(" + log_arg.to_string() + ")";
    case Kind::ArctanInverse:
      return "arctan(1/" + std::to_string(m) + ")";
    case Kind::LogOnePlusInverseSquare:
      return "ln(1+1/" + std::to_string(m * m) + ")";
  }
  return "?";
}

BigFloat BasisConstant::value(int digits) const {
  switch (kind) {
    case Kind::Unit:
      return BigFloat(1.0, digits);
    case Kind::LogRational:
      return BigFloat::ln_rational(log_arg, digits);
    case Kind::ArctanInverse: {
      BigFloat x(Rational(1, m), digits);
      return x.atan();
    }
    case Kind::LogOnePlusInverseSquare:
      return BigFloat::ln_rational(Rational(Integer(m * m + 1), Integer(m * m)), digits);
  }
  throw Error(ErrorCode::BadArgument, "unknown basis constant");
}

BigFloat ValueInSpan::value(int digits) const {
  BigFloat acc(0.0, digits);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coords[i].is_zero()) continue;
    acc = acc + BigFloat(coords[i], digits) * basis[i].value(digits);
  }
  return acc;
}

std::vector<Rational> binomial_sum_sequence(const HyperSummand& F, long K) {
  if (K < 0) throw Error(ErrorCode::BadArgument, "K must be >= 0");
  std::vector<Rational> out;
  out.reserve(K + 1);
  for (long n = 0; n <= K; ++n) {
    Rational s(0);
    for (long k = 0; k <= n; ++k) s += F.eval(n, k);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Rational> constant_term_sequence(const LaurentPoly& P, long K) {
  if (K < 0) throw Error(ErrorCode::BadArgument, "K must be >= 0");
  std::vector<Rational> out;
  out.reserve(K + 1);
  out.push_back(Rational(1));  // P^0 = 1
  LaurentPoly power = LaurentPoly::unit();
  for (long n = 1; n <= K; ++n) {
    power = power * P;  // incremental cache of P^n
    out.push_back(power.coeff(0));
  }
  return out;
}

std::vector<ValueInSpan> log_integral_sequence(const Rational& a, long K) {
  if (a.sign() <= 0 || a == Rational(1)) {
    throw Error(ErrorCode::BadArgument, "log family requires a > 0, a != 1");
  }
  std::vector<BasisConstant> basis(2);
  basis[0].kind = BasisConstant::Kind::Unit;
  basis[1].kind = BasisConstant::Kind::LogRational;
  basis[1].log_arg = a;

  // Substitution t = 1 - (1-a)x maps the integrand to a Laurent polynomial
  // in t over [1, a]: (1-t)^n (t-a)^n / ((1-a)^{2n} (a-1) t^{n+1}).
  std::vector<ValueInSpan> out;
  out.reserve(K + 1);
  // powers of t-polynomials built incrementally
  PolyQ one_minus_t({Rational(1), Rational(-1)}, "t");
  PolyQ t_minus_a({-a, Rational(1)}, "t");
  PolyQ kernel = one_minus_t * t_minus_a;
  PolyQ kernel_pow = PolyQ::constant(Rational(1), "t");
  Rational one_minus_a = Rational(1) - a;
  Rational scale_step = (one_minus_a * one_minus_a).inverse();
  Rational scale = (a - Rational(1)).inverse();

  // cached antiderivative values: for exponent e != -1, integral over [1,a]
  // of t^e dt = (a^{e+1} - 1)/(e+1)
  std::map<long, Rational> t_integrals;
  auto t_int = [&](long e) -> const Rational& {
    auto it = t_integrals.find(e);
    if (it == t_integrals.end()) {
      Rational v = (a.pow(e + 1) - Rational(1)) / Rational(e + 1);
      it = t_integrals.emplace(e, std::move(v)).first;
    }
    return it->second;
  };

  for (long n = 0; n <= K; ++n) {
    ValueInSpan v;
    v.basis = basis;
    v.coords = {Rational(0), Rational(0)};
    for (int j = 0; j <= kernel_pow.degree(); ++j) {
      Rational cj = kernel_pow.coeff(j) * scale;
      if (cj.is_zero()) continue;
      long e = j - (n + 1);
      if (e == -1) {
        v.coords[1] += cj;
      } else {
        v.coords[0] += cj * t_int(e);
      }
    }
    out.push_back(std::move(v));
    kernel_pow = kernel_pow * kernel;
    scale *= scale_step;
  }
  return out;
}

namespace {

struct SpanCoords {
  Rational u, v, w;  // over [1, arctan(1/m), ln(1+1/m^2)]
};

}  // namespace

std::vector<ValueInSpan> arctan_integral_sequence(long m, long scale_log2, long scale_m, long K) {
  if (m < 1) throw Error(ErrorCode::BadArgument, "arctan family requires m >= 1");
  std::vector<BasisConstant> basis(3);
  basis[0].kind = BasisConstant::Kind::Unit;
  basis[1].kind = BasisConstant::Kind::ArctanInverse;
  basis[1].m = m;
  basis[2].kind = BasisConstant::Kind::LogOnePlusInverseSquare;
  basis[2].m = m;

  Rational m2{Rational(m * m)};
  Rational m2p1 = m2 + Rational(1);

  // J0[M] = int_0^1 dx/(m^2+x^2)^M, via the standard reduction ending at
  // arctan(1/m)/m; J1[M] = int_0^1 x dx/(m^2+x^2)^M, rational for M >= 2.
  std::vector<SpanCoords> J0{{Rational(0), Rational(0), Rational(0)},
                             {Rational(0), Rational(1, m), Rational(0)}};
  auto get_J0 = [&](long M) -> const SpanCoords& {
    while (static_cast<long>(J0.size()) <= M) {
      long Mc = static_cast<long>(J0.size());
      const SpanCoords& prev = J0[Mc - 1];
      Rational t = Rational(Integer(1), Integer(2 * m * m * (Mc - 1)));
      Rational boundary = t / m2p1.pow(Mc - 1);
      Rational f = t * Rational(2 * Mc - 3);
      J0.push_back({boundary + f * prev.u, f * prev.v, f * prev.w});
    }
    return J0[M];
  };
  auto get_J1 = [&](long M) -> SpanCoords {
    if (M == 1) return {Rational(0), Rational(0), Rational(1, 2)};
    Rational val = Rational(1, 2 * (M - 1)) * (m2.pow(1 - M) - m2p1.pow(1 - M));
    return {val, Rational(0), Rational(0)};
  };

  // J(t, M) memo via x^t = x^{t-2}((m^2+x^2) - m^2)
  std::map<std::pair<long, long>, SpanCoords> memo;
  std::function<SpanCoords(long, long)> J = [&](long t, long M) -> SpanCoords {
    if (t == 0) return get_J0(M);
    if (t == 1) return get_J1(M);
    auto key = std::make_pair(t, M);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SpanCoords r;
    if (M == 1) {
      SpanCoords b = J(t - 2, 1);
      Rational head = Rational(1, t - 1);  // int_0^1 x^{t-2} dx
      r = {head - m2 * b.u, -(m2 * b.v), -(m2 * b.w)};
    } else {
      SpanCoords a1 = J(t - 2, M - 1);
      SpanCoords b = J(t - 2, M);
      r = {a1.u - m2 * b.u, a1.v - m2 * b.v, a1.w - m2 * b.w};
    }
    memo.emplace(key, r);
    return r;
  };

  std::vector<ValueInSpan> out;
  out.reserve(K + 1);
  Rational norm(1);
  Rational norm_step = Rational(2).pow(scale_log2) * Rational(m).pow(scale_m);
  for (long n = 0; n <= K; ++n) {
    long M = 2 * n + 1;
    SpanCoords acc{Rational(0), Rational(0), Rational(0)};
    // x^{2n}(1-x)^{2n} = sum_j C(2n,j)(-1)^j x^{2n+j}
    for (long j = 0; j <= 2 * n; ++j) {
      Integer bc = Integer::binomial(Integer(2 * n), static_cast<unsigned long>(j));
      Rational cj{Rational(j % 2 ? -bc : bc)};
      SpanCoords term = J(2 * n + j, M);
      acc.u += cj * term.u;
      acc.v += cj * term.v;
      acc.w += cj * term.w;
    }
    ValueInSpan v;
    v.basis = basis;
    v.coords = {acc.u * norm, acc.v * norm, acc.w * norm};
    out.push_back(std::move(v));
    norm *= norm_step;
  }
  return out;
}

PQSequences pq_from_values(const std::vector<ValueInSpan>& vals, size_t target) {
  if (vals.empty()) throw Error(ErrorCode::BadArgument, "pq_from_values: empty input");
  if (target == 0) throw Error(ErrorCode::BadArgument, "target must not be the constant-1 slot");
  const auto& basis = vals.front().basis;
  if (target >= basis.size()) throw Error(ErrorCode::BadArgument, "target out of range");
  PQSequences out;
  out.p.reserve(vals.size());
  out.q.reserve(vals.size());
  for (size_t n = 0; n < vals.size(); ++n) {
    const auto& v = vals[n];
    if (!(v.basis.size() == basis.size())) {
      throw Error(ErrorCode::BadArgument, "pq_from_values: mixed bases");
    }
    for (size_t i = 1; i < basis.size(); ++i) {
      if (i != target && !v.coords[i].is_zero()) {
        throw Error(ErrorCode::SpanViolation,
                    "value not in the two-dimensional span at index " + std::to_string(n));
      }
    }
    out.q.push_back(v.coords[target]);
    out.p.push_back(-v.coords[0]);
  }
  return out;
}

}  // namespace apery
