#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/analysis.hpp"
#include "apery/generators.hpp"
#include "apery/guess.hpp"
#include "apery/parse.hpp"
#include "apery/report.hpp"

using namespace apery;

namespace {

double near(const BigFloat& x, double v) { return std::abs(x.to_double() - v); }

BigFloat root_of(const char* poly_text_in_N_as_operator, int digits) {
  // convenience: parse "N^2-34*N+1" style text and take the dominant root
  RecOperator op = parse_operator(poly_text_in_N_as_operator);
  return dominant_root(leading_poly_in_N(op), digits).value;
}

}  // namespace

TEST_CASE("rigorous_delta reproduces the three closed-form paper values") {
  BigFloat k3 = root_of("N^2-34*N+1", 60);
  CHECK(near(rigorous_delta(k3, BigFloat(1.0, 60), {1, 3, 1, 1}), 1.080529431) < 1e-6);
  BigFloat k2 = root_of("N^2-11*N-1", 60);
  CHECK(near(rigorous_delta(k2, BigFloat(1.0, 60), {1, 2, 1, 1}), 1.092159255) < 1e-6);
  BigFloat kl = root_of("N^2-6*N+1", 60);
  CHECK(near(rigorous_delta(kl, BigFloat(1.0, 60), {1, 1, 1, 1}), 1.276082872) < 1e-6);
}

TEST_CASE("rigorous_delta edge cases") {
  BigFloat k(4.0, 40);
  CHECK(rigorous_delta(k, k * k, {1, 0, 1, 1}).abs() < BigFloat::pow10(-30, 40));
  CHECK_THROWS_WITH_AS(rigorous_delta(BigFloat(0.5, 40), BigFloat(1.0, 40), {1, 1, 1, 1}),
                       doctest::Contains("no exponential growth"), Error);
  CHECK_THROWS_AS(rigorous_delta(BigFloat(1.0, 40), BigFloat(1.0, 40), {1, 1, 1, 1}), Error);
}

TEST_CASE("irrationality_measure") {
  CHECK(near(irrationality_measure(BigFloat(2.0, 40)), 2.0) < 1e-12);
  CHECK(near(irrationality_measure(BigFloat("1.449629514", 40)), 3.224053290) < 1e-6);
  BigFloat half = irrationality_measure(BigFloat(0.5, 40));
  CHECK(near(half, -1.0) < 1e-12);
  CHECK(half.sign() < 0);
  CHECK_THROWS_AS(irrationality_measure(BigFloat(1.0, 40)), Error);
  // involution: measure(measure(d)) = d
  for (double d : {1.5, 2.0, 3.0}) {
    BigFloat m = irrationality_measure(irrationality_measure(BigFloat(d, 50)));
    CHECK(near(m, d) < 1e-40);
  }
}

TEST_CASE("Alladi-Robertson consistency for a in {1,2,3}") {
  for (long a = 1; a <= 3; ++a) {
    std::string sm = "binomial(n,k)*binomial(n+k,k)*" + std::to_string(a) + "^k";
    auto q = binomial_sum_sequence(parse_summand(sm), 60);
    GuessConfig cfg;
    auto ope = guess_operator(q, cfg);
    REQUIRE(ope.has_value());
    BigFloat k = dominant_root(leading_poly_in_N(*ope), 60).value;
    // k must equal 2a+1+2*sqrt(a^2+a)
    BigFloat expect_k =
        BigFloat(static_cast<double>(2 * a + 1), 60) +
        BigFloat(2.0, 60) * BigFloat(static_cast<double>(a * a + a), 60).sqrt();
    CHECK((k - expect_k).abs() < BigFloat::pow10(-20, 60));
    BigFloat delta = rigorous_delta(k, BigFloat(1.0, 60), {1, 1, 1, 1});
    BigFloat closed = alladi_robertson_delta(a, 60);
    CHECK((delta - closed).abs() < BigFloat::pow10(-8, 60));
  }
}

TEST_CASE("RAct log-family consistency for (a,b) in {(1,2),(1,3),(2,3)}") {
  const std::pair<long, long> cases[] = {{1, 2}, {1, 3}, {2, 3}};
  for (auto [a, b] : cases) {
    std::string lp = "(1+" + std::to_string(a) + "*x)*(1+" + std::to_string(b) + "*x)/x";
    auto q = constant_term_sequence(parse_laurent(lp), 70);
    GuessConfig cfg;
    cfg.min_order = 2;
    auto ope = guess_operator(q, cfg);
    REQUIRE(ope.has_value());
    std::vector<Rational> p = run_recurrence(*ope, {Rational(0), Rational(1)}, 70);
    ApproxPair pair = make_pair_from_sequences(*ope, p, q);
    GuessConfig cg;
    cg.max_order = 2;
    cg.max_degree = 3;
    cg.first_index = 1;
    auto cop = guess_operator(pair.c, cg);
    GrowthConstants g = growth_constants(*ope, cop, 60);
    BigFloat delta = rigorous_delta(g.k, g.beta, {1, 1, 1, 1});
    BigFloat closed = ct_log_family_delta(a, b, 60);
    CHECK((delta - closed).abs() < BigFloat::pow10(-6, 60));
  }
}

TEST_CASE("arctan closed forms") {
  CHECK(near(arctan_odd_delta(0, 60), 0.79119792) < 1e-7);
  for (long k = 1; k <= 5; ++k) {
    CHECK(arctan_odd_delta(k, 60) > BigFloat(1.0, 60));
  }
  for (long k = 2; k <= 5; ++k) {
    CHECK(arctan_even_delta(k, 60) > BigFloat(1.0, 60));
  }
  // the k=1 even case is computed and reported; the paper claims > 1 only
  // for k >= 2, and indeed it lands below 1
  BigFloat e1 = arctan_even_delta(1, 60);
  CHECK(near(e1, 0.9204561753) < 1e-8);
}

TEST_CASE("fit_integrality_pattern fixtures") {
  RecOperator ap = parse_operator("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3");
  auto p3 = run_recurrence(ap, {Rational(0), Rational(6)}, 50);
  auto fit = fit_integrality_pattern(p3);
  REQUIRE(fit.pattern.has_value());
  CHECK(*fit.pattern == IntegralityPattern{1, 3, 1, 1});

  RecOperator l43 = parse_operator("(n+2)*N^2-(14*n+21)*N+(n+1)");
  auto p43 = run_recurrence(l43, {Rational(0), Rational(2)}, 50);
  auto fit43 = fit_integrality_pattern(p43);
  REQUIRE(fit43.pattern.has_value());
  CHECK(*fit43.pattern == IntegralityPattern{1, 1, 1, 1});

  std::vector<Rational> ints(40, Rational(7));
  auto fi = fit_integrality_pattern(ints);
  REQUIRE(fi.pattern.has_value());
  CHECK(*fi.pattern == IntegralityPattern{1, 0, 1, 1});

  std::vector<Rational> short_list(10, Rational(1));
  CHECK_THROWS_AS(fit_integrality_pattern(short_list), Error);
}

TEST_CASE("fit_integrality_pattern none-result carries the worst denominator") {
  // denominators 2^(3n) outgrow every L(Gn)^R P^n D0 bound with P <= 50? no:
  // P = 8 covers it; use primes beyond the P bound instead: 53^n
  std::vector<Rational> p;
  Rational v(1);
  for (int n = 0; n < 40; ++n) {
    p.push_back(v);
    v = v / Rational(53 * 53);
  }
  auto fit = fit_integrality_pattern(p);
  CHECK(!fit.pattern.has_value());
  CHECK(fit.worst_denominator == Integer(53).pow(78));
}

TEST_CASE("growth_constants fixtures") {
  RecOperator ap = parse_operator("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3");
  RecOperator cop = parse_operator("(n+1)^3*N-n^3");
  GrowthConstants g = growth_constants(ap, cop, 60);
  CHECK(near(g.k, 33.97056274847714) < 1e-9);
  CHECK(near(g.beta, 1.0) < 1e-9);
  CHECK(!g.beta_defaulted);
  REQUIRE(g.k_exact.has_value());
  CHECK(*g.k_exact == "17+12*sqrt(2)");

  GrowthConstants gl = growth_constants(parse_operator("(n+2)*N^2-(9+6*n)*N+(n+1)"),
                                        std::nullopt, 60);
  CHECK(near(gl.k, 5.82842712474619) < 1e-9);
  CHECK(gl.beta_defaulted);
  REQUIRE(gl.k_exact.has_value());
  CHECK(*gl.k_exact == "3+2*sqrt(2)");

  GrowthConstants gs = growth_constants(parse_operator("N^2-2*N-1"), std::nullopt, 60);
  CHECK(near(gs.k, 2.414213562373095) < 1e-12);
  CHECK(*gs.k_exact == "1+sqrt(2)");
}

TEST_CASE("classify_miracle") {
  ConstantDictionary dict = ConstantDictionary::defaults();
  MiracleReport rep;
  rep.ope = parse_operator("N^2-6*N+1");
  rep.alpha_float = BigFloat(0.69, 40);

  Identification ln2;
  ln2.kind = Identification::Kind::Dictionary;
  ln2.name = "ln(2)";
  ln2.irrationality_known = true;
  rep.identification = ln2;
  rep.delta_rigorous = BigFloat("1.276082872", 40);
  CHECK(classify_miracle(rep, dict) == Classification::Major);

  rep.delta_rigorous = BigFloat(0.8, 40);
  CHECK(classify_miracle(rep, dict) == Classification::Minor);

  rep.identification = std::nullopt;
  DeltaEstimate est;
  est.extrapolated = 0.4934;
  est.last_value = 0.52;
  rep.delta_rigorous = std::nullopt;
  rep.delta_empirical = est;
  CHECK(classify_miracle(rep, dict) == Classification::None);

  Identification gam;
  gam.kind = Identification::Kind::Dictionary;
  gam.name = "gamma";
  gam.irrationality_known = false;
  rep.identification = gam;
  rep.delta_rigorous = BigFloat(1.2, 40);
  CHECK(classify_miracle(rep, dict) == Classification::Super);

  rep.identification = std::nullopt;
  CHECK(classify_miracle(rep, dict) == Classification::Super);  // super-candidate
}

TEST_CASE("empirical delta respects its preconditions") {
  RecOperator s2 = parse_operator("N^2-2*N-1");
  ApproxPair pair = make_pair(s2, {Rational(1), Rational(2)}, {Rational(0), Rational(1)}, 100);
  BigFloat alpha = estimate_alpha(pair, 300);
  CHECK_THROWS_AS(empirical_delta(pair, alpha, {1, 50}), Error);   // lo < 2
  CHECK_THROWS_AS(empirical_delta(pair, alpha, {2, 51}), Error);   // hi > K/2
  CHECK_THROWS_AS(empirical_delta(pair, alpha, {40, 30}), Error);  // empty
  DeltaEstimate est = empirical_delta(pair, alpha, {10, 50});
  CHECK(std::abs(est.extrapolated - 2.0) < 0.02);
}

TEST_CASE("empirical >= rigorous - 0.05 on the four classical fixtures (never equal)") {
  struct Fx {
    const char* ope;
    long p0, p1, q0, q1;
  };
  const Fx fixtures[] = {
      {"N^2-2*N-1", 1, 2, 0, 1},
      {"(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3", 0, 6, 1, 5},
      {"(n+2)^2*N^2-(11*n^2+33*n+25)*N-(n+1)^2", 0, 5, 1, 3},
      {"(n+2)*N^2-(9+6*n)*N+(n+1)", 0, 2, 1, 3},
  };
  RunConfig cfg;
  cfg.K = 200;
  for (const auto& f : fixtures) {
    MiracleReport rep = run_ra_rec(parse_operator(f.ope), {Rational(f.p0), Rational(f.p1)},
                                   {Rational(f.q0), Rational(f.q1)}, cfg);
    REQUIRE(rep.delta_rigorous.has_value());
    REQUIRE(rep.delta_empirical.has_value());
    double rig = rep.delta_rigorous->to_double();
    double emp = rep.delta_empirical->extrapolated;
    CHECK(emp >= rig - 0.05);
    CHECK(emp != rig);
  }
}

TEST_CASE("estimate_alpha fixtures") {
  RecOperator ap = parse_operator("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3");
  ApproxPair pair = make_pair(ap, {Rational(0), Rational(6)}, {Rational(1), Rational(5)}, 200);
  BigFloat alpha = estimate_alpha(pair, 100);
  BigFloat zeta3 = BigFloat::zeta_ui(3, 100);
  CHECK((alpha - zeta3).abs() < BigFloat::pow10(-40, 100));

  RecOperator s2 = parse_operator("N^2-2*N-1");
  ApproxPair ps = make_pair(s2, {Rational(1), Rational(2)}, {Rational(0), Rational(1)}, 100);
  BigFloat a2 = estimate_alpha(ps, 60);
  BigFloat expect = BigFloat(1.0, 60) + BigFloat(2.0, 60).sqrt();
  CHECK((a2 - expect).abs() < BigFloat::pow10(-40, 60));
}

TEST_CASE("auto_precision") {
  CHECK(auto_precision(200, 33.97) == 816);
  CHECK(auto_precision(60, 2.414) == 200);  // floor at 200
}
