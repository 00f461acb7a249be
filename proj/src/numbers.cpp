#include "apery/numbers.hpp"

#include <memory>

namespace apery {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroDenominator: return "zero-denominator";
    case ErrorCode::BadArgument: return "bad-argument";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::NotARecurrence: return "not-a-recurrence";
    case ErrorCode::SingularLeadingCoefficient: return "singular-leading-coefficient";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::NoExponentialGrowth: return "no-exponential-growth";
    case ErrorCode::MeasurePole: return "measure-pole";
    case ErrorCode::InsufficientTerms: return "insufficient-terms";
    case ErrorCode::InsufficientPrecision: return "insufficient-precision";
    case ErrorCode::SpanViolation: return "span-violation";
    case ErrorCode::NoOperatorFound: return "no-operator-found";
    case ErrorCode::IoError: return "io-error";
  }
  return "unknown";
}

Integer::Integer(const std::string& s) {
  if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
    mpz_clear(z_);
    mpz_init(z_);
    throw Error(ErrorCode::ParseError, "invalid integer literal: " + s);
  }
}

Integer operator+(const Integer& a, const Integer& b) {
  Integer r;
  mpz_add(r.z_, a.z_, b.z_);
  return r;
}

Integer operator-(const Integer& a, const Integer& b) {
  Integer r;
  mpz_sub(r.z_, a.z_, b.z_);
  return r;
}

Integer operator*(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mul(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::operator-() const {
  Integer r;
  mpz_neg(r.z_, z_);
  return r;
}

Integer& Integer::operator+=(const Integer& b) {
  mpz_add(z_, z_, b.z_);
  return *this;
}

Integer& Integer::operator*=(const Integer& b) {
  mpz_mul(z_, z_, b.z_);
  return *this;
}

Integer Integer::abs() const {
  Integer r;
  mpz_abs(r.z_, z_);
  return r;
}

Integer Integer::divexact(const Integer& d) const {
  Integer r;
  mpz_divexact(r.z_, z_, d.z_);
  return r;
}

Integer Integer::fdiv(const Integer& d) const {
  Integer r;
  mpz_fdiv_q(r.z_, z_, d.z_);
  return r;
}

Integer Integer::mod(const Integer& d) const {
  Integer r;
  mpz_fdiv_r(r.z_, z_, d.z_);
  return r;
}

Integer Integer::pow(unsigned long e) const {
  Integer r;
  mpz_pow_ui(r.z_, z_, e);
  return r;
}

std::string Integer::to_string() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.z_, a.z_, b.z_);
  return r;
}

Integer Integer::binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.z_, n.raw(), k);
  return r;
}

Integer Integer::factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.z_, n);
  return r;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(const Integer& v) {
  mpq_init(q_);
  mpz_set(mpq_numref(q_), v.raw());
}

Rational::Rational(const std::string& s) {
  mpq_init(q_);
  if (mpq_set_str(q_, s.c_str(), 10) != 0) {
    throw Error(ErrorCode::ParseError, "invalid rational literal: " + s);
  }
  if (mpz_sgn(mpq_denref(q_)) == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  mpq_canonicalize(q_);
}

Integer Rational::num() const {
  Integer r;
  mpz_set(r.raw(), mpq_numref(q_));
  return r;
}

Integer Rational::den() const {
  Integer r;
  mpz_set(r.raw(), mpq_denref(q_));
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  mpq_add(r.q_, a.q_, b.q_);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  mpq_sub(r.q_, a.q_, b.q_);
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  mpq_mul(r.q_, a.q_, b.q_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational& Rational::operator+=(const Rational& b) {
  mpq_add(q_, q_, b.q_);
  return *this;
}

Rational& Rational::operator-=(const Rational& b) {
  mpq_sub(q_, q_, b.q_);
  return *this;
}

Rational& Rational::operator*=(const Rational& b) {
  mpq_mul(q_, q_, b.q_);
  return *this;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
  return r;
}

std::string Rational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

BigFloat::BigFloat(const std::string& s, int digits) : digits_(digits) {
  mpfr_init2(f_, bits_for(digits));
  if (mpfr_set_str(f_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorCode::ParseError, "invalid float literal: " + s);
  }
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

namespace {
int join_digits(const BigFloat& a, const BigFloat& b) { return std::max(a.digits(), b.digits()); }
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_digits(a, b));
  mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_digits(a, b));
  mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_digits(a, b));
  mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(join_digits(a, b));
  mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(digits_);
  mpfr_neg(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(digits_);
  mpfr_abs(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln() const {
  BigFloat r(digits_);
  mpfr_log(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(digits_);
  mpfr_exp(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(digits_);
  mpfr_sqrt(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::atan() const {
  BigFloat r(digits_);
  mpfr_atan(r.f_, f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::floor() const {
  BigFloat r(digits_);
  mpfr_floor(r.f_, f_);
  return r;
}

BigFloat BigFloat::pow_si(long e) const {
  BigFloat r(digits_);
  mpfr_pow_si(r.f_, f_, e, MPFR_RNDN);
  return r;
}

Integer BigFloat::round_to_integer() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(f_));
  mpfr_round(t, f_);
  Integer z;
  mpfr_get_z(z.raw(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

Integer BigFloat::floor_to_integer() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(f_));
  mpfr_floor(t, f_);
  Integer z;
  mpfr_get_z(z.raw(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

std::string BigFloat::to_string(int sig_digits) const {
  char buf[64];
  int n = snprintf(buf, sizeof buf, "%%.%dRg", sig_digits);
  (void)n;
  char* out = nullptr;
  mpfr_asprintf(&out, buf, f_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigFloat BigFloat::pi(int digits) {
  BigFloat r(digits);
  mpfr_const_pi(r.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::euler_gamma(int digits) {
  BigFloat r(digits);
  mpfr_const_euler(r.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::catalan(int digits) {
  BigFloat r(digits);
  mpfr_const_catalan(r.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zeta_ui(unsigned long n, int digits) {
  BigFloat r(digits);
  mpfr_zeta_ui(r.f_, n, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp1(int digits) {
  BigFloat r(digits);
  mpfr_set_ui(r.f_, 1, MPFR_RNDN);
  mpfr_exp(r.f_, r.f_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln_rational(const Rational& r, int digits) {
  if (r.sign() <= 0) throw Error(ErrorCode::BadArgument, "ln of non-positive rational");
  BigFloat x(r, digits + 10);
  BigFloat l = x.ln();
  BigFloat out(digits);
  mpfr_set(out.raw(), l.raw(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow10(long e, int digits) {
  BigFloat r(digits);
  mpfr_set_ui(r.f_, 10, MPFR_RNDN);
  mpfr_pow_si(r.f_, r.f_, e, MPFR_RNDN);
  return r;
}

Integer lcm_upto(long n) {
  if (n < 1) throw Error(ErrorCode::BadArgument, "lcm_upto requires n >= 1");
  Integer l(1);
  for (long i = 2; i <= n; ++i) {
    mpz_lcm_ui(l.raw(), l.raw(), static_cast<unsigned long>(i));
  }
  return l;
}

std::vector<std::pair<Integer, int>> factor_integer(const Integer& m) {
  if (m.sign() <= 0) throw Error(ErrorCode::BadArgument, "factor_integer requires m >= 1");
  std::vector<std::pair<Integer, int>> out;
  Integer rest = m;
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(rest.raw(), p)) {
      mpz_divexact_ui(rest.raw(), rest.raw(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(static_cast<long>(p)), e);
  };
  strip(2);
  strip(3);
  // wheel over 6k+-1
  unsigned long p = 5;
  while (!rest.is_one()) {
    if (mpz_cmp_ui(rest.raw(), p * p) < 0) {
      // remainder is prime
      bool merged = false;
      if (!out.empty() && out.back().first == rest) {
        out.back().second += 1;
        merged = true;
      }
      if (!merged) out.emplace_back(rest, 1);
      break;
    }
    strip(p);
    p += (p % 6 == 5) ? 2 : 4;
    if (p > 100000000UL) {
      throw Error(ErrorCode::BadArgument,
                  "factor_integer: input has a factor beyond the trial-division range");
    }
  }
  return out;
}

}  // namespace apery
