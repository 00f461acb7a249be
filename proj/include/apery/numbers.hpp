#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "apery/errors.hpp"

namespace apery {

// Arbitrary-precision signed integer. Thin RAII wrapper over GMP's mpz.
class Integer {
 public:
  Integer() { mpz_init(z_); }
  Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit Integer(const std::string& s);
  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  Integer operator-() const;
  Integer& operator+=(const Integer& b);
  Integer& operator*=(const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) > 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  Integer abs() const;
  bool divisible_by(const Integer& d) const { return mpz_divisible_p(z_, d.z_) != 0; }
  Integer divexact(const Integer& d) const;  // caller guarantees divisibility
  Integer fdiv(const Integer& d) const;      // floor division
  Integer mod(const Integer& d) const;
  Integer pow(unsigned long e) const;
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const { return mpz_get_si(z_); }
  double to_double() const { return mpz_get_d(z_); }
  size_t bits() const { return mpz_sizeinbase(z_, 2); }
  std::string to_string() const;

  static Integer gcd(const Integer& a, const Integer& b);
  static Integer lcm(const Integer& a, const Integer& b);
  static Integer binomial(const Integer& n, unsigned long k);
  static Integer factorial(unsigned long n);

  const mpz_t& raw() const { return z_; }
  mpz_t& raw() { return z_; }

 private:
  mpz_t z_;
};

// Exact rational, always canonical: den > 0, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);
  explicit Rational(const Integer& v);
  explicit Rational(const std::string& s);  // "p/q" or "p"
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  Integer num() const;
  Integer den() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // b != 0
  Rational operator-() const;
  Rational& operator+=(const Rational& b);
  Rational& operator-=(const Rational& b);
  Rational& operator*=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rational abs() const;
  Rational inverse() const;  // nonzero
  Rational pow(long e) const;
  std::string to_string() const;  // "p/q", or "p" when q = 1
  double to_double() const { return mpq_get_d(q_); }

  const mpq_t& raw() const { return q_; }

 private:
  mpq_t q_;
};

// Floating-point value with an explicit decimal-digit working precision.
class BigFloat {
 public:
  BigFloat() : digits_(20) { mpfr_init2(f_, bits_for(20)); mpfr_set_zero(f_, 1); }
  explicit BigFloat(int digits) : digits_(digits) {
    mpfr_init2(f_, bits_for(digits));
    mpfr_set_zero(f_, 1);
  }
  BigFloat(double v, int digits) : digits_(digits) {
    mpfr_init2(f_, bits_for(digits));
    mpfr_set_d(f_, v, MPFR_RNDN);
  }
  BigFloat(const Rational& r, int digits) : digits_(digits) {
    mpfr_init2(f_, bits_for(digits));
    mpfr_set_q(f_, r.raw(), MPFR_RNDN);
  }
  BigFloat(const Integer& z, int digits) : digits_(digits) {
    mpfr_init2(f_, bits_for(digits));
    mpfr_set_z(f_, z.raw(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, int digits);
  BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_swap(f_, o.f_);
  }
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(f_, o.f_);
    digits_ = o.digits_;
    return *this;
  }
  ~BigFloat() { mpfr_clear(f_); }

  int digits() const { return digits_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) == 0; }

  bool is_zero() const { return mpfr_zero_p(f_) != 0; }
  int sign() const { return mpfr_sgn(f_); }
  BigFloat abs() const;
  BigFloat ln() const;    // argument > 0
  BigFloat exp() const;
  BigFloat sqrt() const;  // argument >= 0
  BigFloat atan() const;
  BigFloat floor() const;
  BigFloat pow_si(long e) const;
  Integer round_to_integer() const;  // nearest
  Integer floor_to_integer() const;
  double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
  std::string to_string(int sig_digits) const;  // shortest "%.*Rg" form
  std::string to_string() const { return to_string(digits_); }

  static BigFloat pi(int digits);
  static BigFloat euler_gamma(int digits);
  static BigFloat catalan(int digits);
  static BigFloat zeta_ui(unsigned long n, int digits);
  static BigFloat exp1(int digits);
  static BigFloat ln_rational(const Rational& r, int digits);  // r > 0
  static BigFloat pow10(long e, int digits);

  static mpfr_prec_t bits_for(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 16);
  }

  const mpfr_t& raw() const { return f_; }
  mpfr_t& raw() { return f_; }

 private:
  mpfr_t f_;
  int digits_;
};

// make_rational per contract: canonical form, den > 0; zero denominator is an error.
inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

// L(n) = lcm(1..n); n >= 1.
Integer lcm_upto(long n);

// Prime factorization by trial division, primes ascending; m >= 1.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& m);

}  // namespace apery
