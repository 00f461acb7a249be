#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apery/identify.hpp"

using namespace apery;

TEST_CASE("dictionary literals agree with independently computed values") {
  ConstantDictionary dict = ConstantDictionary::defaults();
  const int d = 130;
  auto check = [&](const char* name, const BigFloat& v) {
    const DictionaryEntry* e = dict.find(name);
    REQUIRE(e != nullptr);
    CHECK((e->value(d) - v).abs() < BigFloat::pow10(-118, d));
  };
  check("Pi", BigFloat::pi(d));
  check("Pi^2", BigFloat::pi(d) * BigFloat::pi(d));
  check("ln(2)", BigFloat::ln_rational(Rational(2), d));
  check("ln(3)", BigFloat::ln_rational(Rational(3), d));
  check("ln(5)", BigFloat::ln_rational(Rational(5), d));
  check("zeta(3)", BigFloat::zeta_ui(3, d));
  check("Catalan", BigFloat::catalan(d));
  check("gamma", BigFloat::euler_gamma(d));
  check("e", BigFloat::exp1(d));
}

TEST_CASE("dictionary flags: irrationality open exactly for gamma and Catalan") {
  ConstantDictionary dict = ConstantDictionary::defaults();
  for (const auto& e : dict.entries()) {
    bool open = (e.name == "gamma" || e.name == "Catalan" || e.name == "1");
    CHECK(e.irrationality_known == !open);
  }
}

TEST_CASE("zeta(3) literal vs Euler-Maclaurin series oracle") {
  const int d = 60;
  const long N = 10000;
  BigFloat s(0.0, d);
  for (long n = 1; n < N; ++n) {
    s = s + BigFloat(Rational(1, n), d).pow_si(3);
  }
  BigFloat Nf(static_cast<double>(N), d);
  s = s + BigFloat(0.5, d) / (Nf * Nf) + BigFloat(0.5, d) / (Nf * Nf * Nf) +
      BigFloat(0.25, d) / Nf.pow_si(4) - BigFloat(Rational(1, 12), d) / Nf.pow_si(6);
  ConstantDictionary dict = ConstantDictionary::defaults();
  CHECK((dict.find("zeta(3)")->value(d) - s).abs() < BigFloat::pow10(-28, d));
}

TEST_CASE("gamma literal vs harmonic-limit series oracle") {
  const int d = 60;
  const long N = 100000;
  BigFloat h(0.0, d);
  for (long n = 1; n <= N; ++n) h = h + BigFloat(Rational(1, n), d);
  BigFloat Nf(static_cast<double>(N), d);
  BigFloat g = h - Nf.ln() - BigFloat(0.5, d) / Nf + BigFloat(Rational(1, 12), d) / (Nf * Nf) -
               BigFloat(Rational(1, 120), d) / Nf.pow_si(4);
  ConstantDictionary dict = ConstantDictionary::defaults();
  CHECK((dict.find("gamma")->value(d) - g).abs() < BigFloat::pow10(-24, d));
}

TEST_CASE("continued_fraction fixtures") {
  BigFloat sqrt2 = BigFloat(2.0, 50).sqrt();
  auto cf = continued_fraction(sqrt2, 11);
  REQUIRE(cf.size() == 11);
  CHECK(cf[0] == Integer(1));
  for (size_t i = 1; i < cf.size(); ++i) CHECK(cf[i] == Integer(2));

  auto cf2 = continued_fraction(BigFloat(Rational(13, 4), 50), 10);
  REQUIRE(cf2.size() == 2);
  CHECK(cf2[0] == Integer(3));
  CHECK(cf2[1] == Integer(4));

  BigFloat phi = (BigFloat(1.0, 50) + BigFloat(5.0, 50).sqrt()) / BigFloat(2.0, 50);
  auto cf3 = continued_fraction(phi, 10);
  REQUIRE(cf3.size() == 10);
  for (const auto& a : cf3) CHECK(a == Integer(1));
}

TEST_CASE("continued_fraction of rationals is the exact Euclidean expansion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(1, 400);
  for (int t = 0; t < 40; ++t) {
    long num = d(rng), den = d(rng);
    // independent Euclidean expansion
    std::vector<Integer> expect;
    long a = num, b = den;
    while (b != 0) {
      expect.emplace_back(a / b);
      long r = a % b;
      a = b;
      b = r;
    }
    auto got = continued_fraction(BigFloat(Rational(num, den), 60), 40);
    CHECK(got == expect);
  }
}

TEST_CASE("integer_relation fixtures") {
  Integer bound(10);
  auto r1 = integer_relation({BigFloat(1.0, 60), BigFloat(0.5, 60)}, bound);
  REQUIRE(r1.has_value());
  // (1, -2) up to sign; it annihilates (1, 1/2) exactly: 2*r0 + r1 = 0
  CHECK((*r1)[0].abs() == Integer(1));
  CHECK((*r1)[1].abs() == Integer(2));
  CHECK(((*r1)[0] * Integer(2) + (*r1)[1]).is_zero());

  BigFloat ln2 = BigFloat::ln_rational(Rational(2), 80);
  BigFloat ln4 = BigFloat::ln_rational(Rational(4), 80);
  auto r2 = integer_relation({ln4, ln2}, bound);
  REQUIRE(r2.has_value());
  CHECK((*r2)[0].abs() == Integer(1));
  CHECK((*r2)[1].abs() == Integer(2));

  // [1, pi, pi^2] admits no small relation
  BigFloat pi = BigFloat::pi(100);
  auto r3 = integer_relation({BigFloat(1.0, 100), pi, pi * pi}, Integer(10000));
  CHECK(!r3.has_value());

  CHECK_THROWS_AS(integer_relation({BigFloat(1.0, 60)}, bound), Error);
  CHECK_THROWS_WITH_AS(integer_relation({BigFloat(1.0, 20), BigFloat(0.5, 20)}, Integer(10000)),
                       doctest::Contains("insufficient precision"), Error);
}

TEST_CASE("identify_constant fixtures") {
  ConstantDictionary dict = ConstantDictionary::defaults();
  // ln(4/3) = 2 ln 2 - ln 3
  BigFloat x = BigFloat::ln_rational(Rational(4, 3), 80);
  auto id = identify_constant(x, dict);
  REQUIRE(id.has_value());
  CHECK(id->name == "ln(4/3)");
  CHECK(id->conjectural);
  CHECK(id->irrationality_known);

  // 1 + sqrt(2): algebraic with minimal polynomial x^2-2x-1
  BigFloat s = BigFloat(1.0, 80) + BigFloat(2.0, 80).sqrt();
  auto id2 = identify_constant(s, dict);
  REQUIRE(id2.has_value());
  CHECK(id2->kind == Identification::Kind::Algebraic);
  CHECK(id2->name == "x^2-2*x-1");
  CHECK(id2->irrationality_known);

  // pi^2/6
  BigFloat z2 = BigFloat::pi(80) * BigFloat::pi(80) / BigFloat(6.0, 80);
  auto id3 = identify_constant(z2, dict);
  REQUIRE(id3.has_value());
  CHECK(id3->name == "(1/6)*Pi^2");

  // the paper's unidentified constant stays unidentified at 40 digits
  BigFloat u("0.02266573727755793921443951574137531420027", 40);
  CHECK(!identify_constant(u, dict).has_value());
}

TEST_CASE("round-trip: 30 planted rational multiples recovered exactly at 80 digits") {
  ConstantDictionary dict = ConstantDictionary::defaults();
  std::mt19937 rng(4096);
  std::uniform_int_distribution<long> cd(1, 9999);
  const char* names[] = {"Pi", "Pi^2", "ln(2)", "ln(3)", "ln(5)", "zeta(3)", "Catalan", "gamma", "e"};
  int done = 0;
  while (done < 30) {
    const char* nm = names[rng() % 9];
    long num = cd(rng), den = cd(rng);
    if (rng() % 2) num = -num;
    Rational r(num, den);
    BigFloat x = BigFloat(r, 80) * dict.find(nm)->value(80);
    auto id = identify_constant(x, dict);
    REQUIRE(id.has_value());
    std::string expect;
    if (r == Rational(1)) {
      expect = nm;
    } else if (r == Rational(-1)) {
      expect = std::string("-") + nm;
    } else {
      expect = "(" + r.to_string() + ")*" + nm;
    }
    CHECK(id->name == expect);
    // soundness: the identification still satisfies the bound at 2x precision
    BigFloat x160 = BigFloat(r, 160) * dict.find(nm)->value(160);
    BigFloat x80_widened(x.to_string(80), 160);
    CHECK((x160 - x80_widened).abs() < BigFloat::pow10(-60, 160));
    ++done;
  }
}
