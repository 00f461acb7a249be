#include "apery/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "apery/generators.hpp"

namespace apery {

namespace {

struct CandidateOutcome {
  std::optional<ScanHit> hit;
  bool skipped = false;
  std::vector<long> params;
};

std::pair<long, long> scan_window(long K) { return {std::max<long>(2, K / 10), K / 2}; }

CandidateOutcome eval_family_1(long a, long b, const ScanOptions& opts,
                               const ConstantDictionary& dict) {
  CandidateOutcome out;
  out.params = {a, b};
  PolyQ c0({Rational(1), Rational(1)}, "n");                    // n+1
  PolyQ c1({Rational(-b), Rational(-a)}, "n");                  // -(a n + b)
  PolyQ c2({Rational(2), Rational(1)}, "n");                    // n+2
  RecOperator ope({c0, c1, c2});
  ApproxPair pair;
  try {
    pair = make_pair(ope, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}, opts.K);
  } catch (const Error&) {
    out.skipped = true;
    return out;
  }
  if (pair.q[opts.K].is_zero()) {
    out.skipped = true;
    return out;
  }
  double k_est = 0.0;
  try {
    k_est = dominant_root(leading_poly_in_N(ope), 40).value.to_double();
  } catch (const Error&) {
    k_est = 2.0;
  }
  int digits = auto_precision(opts.K, k_est);
  DeltaEstimate est;
  try {
    BigFloat alpha = estimate_alpha(pair, digits);
    est = empirical_delta(pair, alpha, scan_window(opts.K));
  } catch (const Error&) {
    out.skipped = true;
    return out;
  }
  if (!(est.extrapolated > 1.0)) return out;  // not a hit, not skipped
  ScanHit hit;
  hit.family_params = {a, b};
  hit.ope = ope;
  hit.delta_empirical = est.extrapolated;
  hit.alpha_float = BigFloat(pair.p[opts.K] / pair.q[opts.K], opts.identify_digits);
  hit.identification = identify_constant(hit.alpha_float, dict);
  out.hit = std::move(hit);
  return out;
}

CandidateOutcome eval_ct(long a, long b, long c, const ScanOptions& opts,
                         const ConstantDictionary& dict) {
  CandidateOutcome out;
  out.params = {a, b, c};
  // (1+ax)(1+bx)(1+cx)/x^2
  LaurentPoly P;
  P.set(-2, Rational(1));
  P.set(-1, Rational(a + b + c));
  P.set(0, Rational(a * b + a * c + b * c));
  P.set(1, Rational(a * b * c));
  std::vector<Rational> q = constant_term_sequence(P, opts.K);
  GuessConfig gc = opts.guess;
  gc.min_order = 3;
  gc.max_order = 3;
  std::optional<RecOperator> ope;
  try {
    ope = guess_operator(q, gc);
  } catch (const Error&) {
    ope = std::nullopt;
  }
  if (!ope) {
    out.skipped = true;
    return out;
  }
  ApproxPair pair;
  try {
    std::vector<Rational> p =
        run_recurrence(*ope, {Rational(0), Rational(0), Rational(1)}, opts.K);
    pair = make_pair_from_sequences(*ope, std::move(p), std::move(q));
  } catch (const Error&) {
    out.skipped = true;
    return out;
  }
  if (pair.q[opts.K].is_zero()) {
    out.skipped = true;
    return out;
  }
  double k_est = 0.0;
  try {
    k_est = dominant_root(leading_poly_in_N(*ope), 40).value.to_double();
  } catch (const Error&) {
    k_est = 2.0;
  }
  int digits = auto_precision(opts.K, k_est);
  DeltaEstimate est;
  try {
    BigFloat alpha = estimate_alpha(pair, digits);
    est = empirical_delta(pair, alpha, scan_window(opts.K));
  } catch (const Error&) {
    out.skipped = true;
    return out;
  }
  if (!(est.extrapolated > 1.0)) return out;
  ScanHit hit;
  hit.family_params = {a, b, c};
  hit.ope = *ope;
  hit.delta_empirical = est.extrapolated;
  hit.alpha_float = BigFloat(pair.p[opts.K] / pair.q[opts.K], opts.identify_digits);
  hit.identification = identify_constant(hit.alpha_float, dict);
  out.hit = std::move(hit);
  return out;
}

ScanResult collect(std::vector<CandidateOutcome>& outcomes) {
  ScanResult res;
  res.candidates = static_cast<long>(outcomes.size());
  for (auto& o : outcomes) {
    if (o.skipped) {
      res.skipped.push_back(o.params);
    } else if (o.hit) {
      res.hits.push_back(std::move(*o.hit));
    }
  }
  return res;
}

}  // namespace

ScanResult scan_family_1_rect(std::pair<long, long> a_range, std::pair<long, long> b_range,
                              const ScanOptions& opts) {
  if (a_range.first < 1 || a_range.first > a_range.second || b_range.first < 1 ||
      b_range.first > b_range.second) {
    throw Error(ErrorCode::BadArgument, "family-1 ranges must satisfy 1 <= lo <= hi");
  }
  if (opts.K < 50) throw Error(ErrorCode::BadArgument, "family scan needs K >= 50");
  ConstantDictionary dict = ConstantDictionary::defaults();
  long nb = b_range.second - b_range.first + 1;
  long total = (a_range.second - a_range.first + 1) * nb;
  std::vector<CandidateOutcome> outcomes(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
  for (long idx = 0; idx < total; ++idx) {
    long a = a_range.first + idx / nb;
    long b = b_range.first + idx % nb;
    outcomes[idx] = eval_family_1(a, b, opts, dict);
  }
  return collect(outcomes);
}

ScanResult scan_family_1(long A, long B, const ScanOptions& opts) {
  return scan_family_1_rect({A, B}, {A, B}, opts);
}

ScanResult scan_family_1_serial(long A, long B, const ScanOptions& opts) {
  ScanOptions o = opts;
  o.parallel = false;
  return scan_family_1_rect({A, B}, {A, B}, o);
}

ScanResult scan_ct_family(std::pair<long, long> a_range, std::pair<long, long> b_range,
                          std::pair<long, long> c_range, const ScanOptions& opts) {
  auto check = [](std::pair<long, long> r) {
    if (r.first < 1) {
      throw Error(ErrorCode::BadArgument, "ct-family ranges must be positive");
    }
  };
  check(a_range);
  check(b_range);
  check(c_range);
  if (a_range.second < a_range.first || b_range.second < b_range.first ||
      c_range.second < c_range.first) {
    return ScanResult{};  // empty range, empty list
  }
  ConstantDictionary dict = ConstantDictionary::defaults();
  long na = a_range.second - a_range.first + 1;
  long nb = b_range.second - b_range.first + 1;
  long nc = c_range.second - c_range.first + 1;
  long total = na * nb * nc;
  std::vector<CandidateOutcome> outcomes(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
  for (long idx = 0; idx < total; ++idx) {
    long a = a_range.first + idx / (nb * nc);
    long b = b_range.first + (idx / nc) % nb;
    long c = c_range.first + idx % nc;
    outcomes[idx] = eval_ct(a, b, c, opts, dict);
  }
  return collect(outcomes);
}

}  // namespace apery
