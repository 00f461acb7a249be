#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apery/generators.hpp"
#include "apery/parse.hpp"
#include "apery/sequence.hpp"

using namespace apery;

namespace {

std::vector<Rational> rl(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("run_recurrence on the Pell fixture") {
  RecOperator ope = parse_operator("N^2-2*N-1");
  auto x = run_recurrence(ope, rl({0, 1}), 5);
  CHECK(x == rl({0, 1, 2, 5, 12, 29}));
}

TEST_CASE("run_recurrence on the Apery fixture matches the binomial-sum oracle") {
  RecOperator ope = parse_operator("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3");
  auto q = run_recurrence(ope, rl({1, 5}), 4);
  CHECK(q == rl({1, 5, 73, 1445, 33001}));
  // independent evaluation of sum C(n,k)^2 C(n+k,k)^2
  auto oracle = binomial_sum_sequence(parse_summand("binomial(n,k)^2*binomial(n+k,k)^2"), 4);
  CHECK(q == oracle);
  // q(n) stays integral out to n = 100
  auto q100 = run_recurrence(ope, rl({1, 5}), 100);
  for (const auto& v : q100) CHECK(v.is_integer());
}

TEST_CASE("run_recurrence keeps exact rationals: ln 2 fixture") {
  RecOperator ope = parse_operator("(n+2)*N^2-(9+6*n)*N+(n+1)");
  auto p = run_recurrence(ope, rl({0, 2}), 3);
  REQUIRE(p.size() == 4);
  CHECK(p[2] == Rational(9));
  CHECK(p[3] == Rational(131, 3));
}

TEST_CASE("run_recurrence singular leading coefficient") {
  RecOperator ope = parse_operator("(n-3)*N-1");
  CHECK_THROWS_WITH_AS(run_recurrence(ope, rl({1}), 10), doctest::Contains("n = 3"), Error);
  CHECK_THROWS_AS(run_recurrence(ope, rl({1, 2}), 10), Error);  // wrong init length
  // short runs that never touch n = 3 are fine
  CHECK(run_recurrence(ope, rl({1}), 3).size() == 4);
}

TEST_CASE("compute_c fixtures") {
  auto c = compute_c(rl({1, 2, 5, 12}), rl({0, 1, 2, 5}));
  CHECK(c == rl({-1, 1, -1}));

  std::vector<Rational> p = {Rational(0), Rational(2), Rational(9), Rational(131, 3)};
  auto c2 = compute_c(p, rl({1, 3, 13, 63}));
  REQUIRE(c2.size() == 3);
  CHECK(c2[0] == Rational(2));
  CHECK(c2[1] == Rational(1));
  CHECK(c2[2] == Rational(2, 3));

  auto c3 = compute_c(rl({1, 2, 3}), rl({1, 2, 3}));
  CHECK(c3 == rl({0, 0}));

  CHECK_THROWS_AS(compute_c(rl({1, 2}), rl({1, 2, 3})), Error);
  CHECK_THROWS_AS(compute_c(rl({1}), rl({1})), Error);
}

TEST_CASE("reduce_convergent") {
  auto [p1, q1] = reduce_convergent(Rational(6), Rational(4));
  CHECK(p1 == Integer(3));
  CHECK(q1 == Integer(2));
  auto [p2, q2] = reduce_convergent(Rational(131, 3), Rational(63));
  CHECK(p2 == Integer(131));
  CHECK(q2 == Integer(189));
  auto [p3, q3] = reduce_convergent(Rational(0), Rational(7));
  CHECK(p3 == Integer(0));
  CHECK(q3 == Integer(1));
  auto [p4, q4] = reduce_convergent(Rational(-6), Rational(4));
  CHECK(p4 == Integer(-3));
  CHECK(q4 == Integer(2));
  CHECK_THROWS_AS(reduce_convergent(Rational(1), Rational(0)), Error);
}

TEST_CASE("sqrt2 pair: c(n) = (-1)^n exactly for n <= 50") {
  RecOperator ope = parse_operator("N^2-2*N-1");
  ApproxPair pair = make_pair(ope, rl({1, 2}), rl({0, 1}), 50);
  for (long n = 1; n <= 50; ++n) {
    CHECK(pair.c[n - 1] == Rational(n % 2 ? -1 : 1));
  }
}

TEST_CASE("telescoping identity holds exactly on fixtures and random operators") {
  auto check_pair = [](const ApproxPair& pair) {
    for (long n = 1; n <= pair.K(); ++n) {
      if (pair.q[n].is_zero() || pair.q[n - 1].is_zero()) continue;
      Rational lhs = pair.p[n] / pair.q[n] - pair.p[n - 1] / pair.q[n - 1];
      Rational rhs = pair.c[n - 1] / (pair.q[n] * pair.q[n - 1]);
      CHECK(lhs == rhs);
    }
  };
  check_pair(make_pair(parse_operator("N^2-2*N-1"), rl({1, 2}), rl({0, 1}), 40));
  check_pair(make_pair(parse_operator("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3"),
                       rl({0, 6}), rl({1, 5}), 40));
  check_pair(make_pair(parse_operator("(n+2)*N^2-(9+6*n)*N+(n+1)"), rl({0, 2}), rl({1, 3}), 40));
  check_pair(make_pair(parse_operator("(n+2)^2*N^2-(11*n^2+33*n+25)*N-(n+1)^2"), rl({0, 5}),
                       rl({1, 3}), 40));

  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> cd(-5, 5);
  int done = 0;
  while (done < 20) {
    // order-2 operators with nonvanishing leading coefficient on 0..30
    std::vector<PolyQ> coeffs;
    for (int i = 0; i < 2; ++i) {
      coeffs.emplace_back(std::vector<Rational>{Rational(cd(rng)), Rational(cd(rng))}, "n");
    }
    long lead = cd(rng);
    if (lead == 0) continue;
    coeffs.emplace_back(std::vector<Rational>{Rational(lead)}, "n");
    RecOperator ope(std::move(coeffs));
    ApproxPair pair = make_pair(ope, rl({cd(rng), cd(rng)}), rl({cd(rng), cd(rng)}), 30);
    check_pair(pair);
    ++done;
  }
}

TEST_CASE("apply_operator annihilates run_recurrence output (cross-module property)") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> cd(-7, 7);
  int done = 0;
  while (done < 30) {
    int order = 1 + static_cast<int>(rng() % 2);
    std::vector<PolyQ> coeffs;
    for (int i = 0; i < order; ++i) {
      coeffs.emplace_back(std::vector<Rational>{Rational(cd(rng)), Rational(cd(rng))}, "n");
    }
    long c0 = cd(rng), c1 = cd(rng);
    // leading polynomial with no roots at n >= 0: nonzero constant, or
    // positive slope with positive constant term
    bool ok_lead = (c1 == 0 && c0 != 0) || (c1 > 0 && c0 > 0);
    if (!ok_lead) continue;
    coeffs.emplace_back(std::vector<Rational>{Rational(c0), Rational(c1)}, "n");
    RecOperator ope(std::move(coeffs));
    std::vector<Rational> inits;
    for (int i = 0; i < order; ++i) inits.emplace_back(cd(rng));
    auto x = run_recurrence(ope, inits, 40);
    for (long n = 0; n + order < 40; ++n) {
      CHECK(apply_operator(ope, x, n) == Rational(0));
    }
    ++done;
  }
}
