#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apery/identify.hpp"
#include "apery/roots.hpp"
#include "apery/sequence.hpp"

namespace apery {

// Integers with L(Gn)^R * P^n * D0 * p(n) always integral, L(n) = lcm(1..n).
struct IntegralityPattern {
  int G = 1;
  int R = 0;
  int P = 1;
  int D0 = 1;
  friend bool operator==(const IntegralityPattern&, const IntegralityPattern&) = default;
};

struct PatternFit {
  std::optional<IntegralityPattern> pattern;
  Integer worst_denominator{1};  // largest denominator seen when no pattern fits
};

// Per-index empirical exponents plus the extrapolated headline value.
// delta_n = -ln|alpha - p(n)/q(n)| / ln q'(n) on reduced denominators; the
// extrapolated value is the intercept of a least-squares fit of delta_n
// against [(n - psi(n))/n, 1/n] over the window, psi(n) = ln lcm(1..n).
struct DeltaEstimate {
  std::vector<std::pair<long, double>> per_index;
  double last_value = 0.0;
  double extrapolated = 0.0;
};

// p(K)/q(K) at the stated precision; q(K) = 0 is an error.
BigFloat estimate_alpha(const ApproxPair& pair, int digits);

DeltaEstimate empirical_delta(const ApproxPair& pair, const BigFloat& alpha,
                              std::pair<long, long> window);

// delta = (2 ln|k| - ln|beta|) / (ln|k| + G*R + ln P); requires k > 1.
BigFloat rigorous_delta(const BigFloat& k, const BigFloat& beta, const IntegralityPattern& pat);

// delta / (delta - 1); delta = 1 is a pole. Negative results (delta < 1) are
// returned as-is; callers flag them as non-proving.
BigFloat irrationality_measure(const BigFloat& delta);

// Smallest pattern in the search order R 0..4, G 1..3, P 1..50, D0 1..100
// such that L(Gn)^R P^n D0 p(n) is an integer for every available n.
PatternFit fit_integrality_pattern(const std::vector<Rational>& p);

struct GrowthConstants {
  BigFloat k;
  std::optional<std::string> k_exact;  // radical form when the leading poly is quadratic
  BigFloat beta;
  bool beta_defaulted = false;  // true when c_ope was absent and beta := 1
};

GrowthConstants growth_constants(const RecOperator& ope, const std::optional<RecOperator>& c_ope,
                                 int digits);

enum class Classification { None, Minor, Major, Super };

const char* classification_name(Classification c);

// The full analysis record mirroring the 12-field output tuple.
struct MiracleReport {
  RecOperator ope;
  std::optional<RecOperator> c_ope;
  std::optional<IntegralityPattern> pattern;
  std::optional<Integer> worst_denominator;
  std::optional<BigFloat> growth_k;
  std::optional<std::string> growth_k_exact;
  std::optional<BigFloat> beta;
  bool beta_defaulted = false;
  std::optional<BigFloat> delta_rigorous;
  std::optional<DeltaEstimate> delta_empirical;
  std::optional<BigFloat> measure;
  BigFloat alpha_float;
  std::optional<Identification> identification;
  bool alpha_a_priori = false;
  std::vector<Rational> ini_p;
  std::vector<Rational> ini_q;
  Classification classification = Classification::None;
  bool super_candidate = false;
  long K = 0;
  int precision_digits = 0;
};

// minor: identified, delta <= 1; major: identified, delta > 1, irrationality
// already known; super: delta > 1 and irrationality open (an unidentified
// constant with delta > 1 is a super-candidate); none otherwise.
Classification classify_miracle(const MiracleReport& report, const ConstantDictionary& dict);

// Working precision rule: max(200, ceil(2.5 K log10(k_est)) + 50).
int auto_precision(long K, double k_estimate);

// Closed-form deltas used for consistency checks and the arctan families.
BigFloat alladi_robertson_delta(long a, int digits);
BigFloat ct_log_family_delta(long a, long b, int digits);
BigFloat arctan_odd_delta(long k, int digits);
BigFloat arctan_even_delta(long k, int digits);

}  // namespace apery
