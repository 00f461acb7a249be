#include "apery/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace apery {

BigFloat estimate_alpha(const ApproxPair& pair, int digits) {
  long K = pair.K();
  if (pair.q[K].is_zero()) throw Error(ErrorCode::ZeroDenominator, "q(K) = 0");
  return BigFloat(pair.p[K] / pair.q[K], digits);
}

namespace {

// psi(n) = ln lcm(1..n), computed exactly then rounded
std::vector<double> psi_table(long hi) {
  std::vector<double> psi(hi + 1, 0.0);
  Integer l(1);
  for (long i = 2; i <= hi; ++i) {
    mpz_lcm_ui(l.raw(), l.raw(), static_cast<unsigned long>(i));
    BigFloat lf(l, 30);
    psi[i] = lf.ln().to_double();
  }
  return psi;
}

// least-squares intercept of y ~ 1 + regressors, plain normal equations
double lsq_intercept(const std::vector<std::array<double, 3>>& X, const std::vector<double>& y) {
  constexpr int k = 3;
  double A[k][k] = {};
  double b[k] = {};
  for (size_t i = 0; i < X.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      for (int c = 0; c < k; ++c) A[a][c] += X[i][a] * X[i][c];
      b[a] += X[i][a] * y[i];
    }
  }
  for (int c = 0; c < k; ++c) {
    int pr = c;
    for (int r = c + 1; r < k; ++r) {
      if (std::abs(A[r][c]) > std::abs(A[pr][c])) pr = r;
    }
    std::swap(A[c], A[pr]);
    std::swap(b[c], b[pr]);
    if (A[c][c] == 0.0) continue;
    for (int r = 0; r < k; ++r) {
      if (r == c) continue;
      double f = A[r][c] / A[c][c];
      for (int j = 0; j < k; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  return A[0][0] == 0.0 ? 0.0 : b[0] / A[0][0];
}

}  // namespace

DeltaEstimate empirical_delta(const ApproxPair& pair, const BigFloat& alpha,
                              std::pair<long, long> window) {
  auto [lo, hi] = window;
  long K = pair.K();
  if (lo < 2) throw Error(ErrorCode::BadArgument, "window lo must be >= 2");
  if (hi > K / 2) throw Error(ErrorCode::BadArgument, "window hi must be <= K/2");
  if (lo > hi) throw Error(ErrorCode::BadArgument, "empty window");
  int digits = alpha.digits();

  DeltaEstimate est;
  for (long n = lo; n <= hi; ++n) {
    if (!pair.reduced[n]) continue;
    const Integer& qprime = pair.reduced[n]->second;
    if (qprime <= Integer(1)) continue;
    Rational conv = pair.p[n] / pair.q[n];
    BigFloat diff = alpha - BigFloat(conv, digits);
    if (diff.is_zero()) continue;
    double dn = (-(diff.abs().ln()) / BigFloat(qprime, 40).ln()).to_double();
    est.per_index.emplace_back(n, dn);
  }
  if (est.per_index.empty()) {
    throw Error(ErrorCode::BadArgument, "empirical delta window empty after exclusions");
  }
  est.last_value = est.per_index.back().second;

  auto psi = psi_table(hi);
  std::vector<std::array<double, 3>> X;
  std::vector<double> y;
  X.reserve(est.per_index.size());
  for (const auto& [n, dn] : est.per_index) {
    double nd = static_cast<double>(n);
    X.push_back({1.0, (nd - psi[n]) / nd, 1.0 / nd});
    y.push_back(dn);
  }
  est.extrapolated = X.size() >= 3 ? lsq_intercept(X, y) : est.last_value;
  return est;
}

BigFloat rigorous_delta(const BigFloat& k, const BigFloat& beta, const IntegralityPattern& pat) {
  int d = k.digits();
  if (!(k > BigFloat(1.0, d))) {
    throw Error(ErrorCode::NoExponentialGrowth, "no exponential growth: k <= 1");
  }
  if (!(beta.abs() > BigFloat(0.0, d))) {
    throw Error(ErrorCode::BadArgument, "beta must be nonzero");
  }
  BigFloat lnk = k.abs().ln();
  BigFloat lnb = beta.abs().ln();
  BigFloat lnP = BigFloat(static_cast<double>(pat.P), d).ln();
  BigFloat num = BigFloat(2.0, d) * lnk - lnb;
  BigFloat den = lnk + BigFloat(static_cast<double>(pat.G) * pat.R, d) + lnP;
  return num / den;
}

BigFloat irrationality_measure(const BigFloat& delta) {
  int d = delta.digits();
  BigFloat one(1.0, d);
  if (delta == one) throw Error(ErrorCode::MeasurePole, "irrationality measure pole at delta = 1");
  return delta / (delta - one);
}

namespace {

// exponent of prime p in L(x) = lcm(1..x): the largest t with p^t <= x
int lcm_exponent(const Integer& p, long x) {
  if (x < 1) return 0;
  int t = 0;
  Integer pk = p;
  Integer xx(x);
  while (pk <= xx) {
    ++t;
    pk = pk * p;
  }
  return t;
}

}  // namespace

PatternFit fit_integrality_pattern(const std::vector<Rational>& p) {
  if (p.size() < 30) {
    throw Error(ErrorCode::InsufficientTerms, "pattern fitting needs at least 30 terms");
  }
  // factored denominators per index
  struct Den {
    long n;
    std::vector<std::pair<Integer, int>> factors;
  };
  std::vector<Den> dens;
  Integer worst(1);
  for (size_t n = 0; n < p.size(); ++n) {
    Integer d = p[n].den();
    if (d.is_one()) continue;
    if (d > worst) worst = d;
    dens.push_back({static_cast<long>(n), factor_integer(d)});
  }
  PatternFit out;
  out.worst_denominator = worst;
  if (dens.empty()) {
    out.pattern = IntegralityPattern{1, 0, 1, 1};
    return out;
  }
  for (int R = 0; R <= 4; ++R) {
    for (int G = 1; G <= 3; ++G) {
      for (int P = 1; P <= 50; ++P) {
        std::vector<std::pair<Integer, int>> pfac =
            P > 1 ? factor_integer(Integer(P)) : std::vector<std::pair<Integer, int>>{};
        // minimal D0 = product over primes of the worst remaining deficit
        std::map<std::string, std::pair<Integer, long>> need;  // prime -> (prime, deficit)
        bool feasible = true;
        for (const auto& dn : dens) {
          for (const auto& [prime, e] : dn.factors) {
            long deficit = e - static_cast<long>(R) * lcm_exponent(prime, G * dn.n);
            if (deficit <= 0) continue;
            for (const auto& [pp, pe] : pfac) {
              if (pp == prime) deficit -= static_cast<long>(pe) * dn.n;
            }
            if (deficit <= 0) continue;
            auto key = prime.to_string();
            auto it = need.find(key);
            if (it == need.end()) {
              need.emplace(key, std::make_pair(prime, deficit));
            } else {
              it->second.second = std::max(it->second.second, deficit);
            }
          }
        }
        Integer d0(1);
        for (const auto& [key, pd] : need) {
          for (long i = 0; i < pd.second; ++i) {
            d0 = d0 * pd.first;
            if (d0 > Integer(100)) {
              feasible = false;
              break;
            }
          }
          if (!feasible) break;
        }
        if (feasible && d0 <= Integer(100)) {
          out.pattern = IntegralityPattern{G, R, P, static_cast<int>(d0.to_long())};
          return out;
        }
      }
    }
  }
  return out;
}

GrowthConstants growth_constants(const RecOperator& ope, const std::optional<RecOperator>& c_ope,
                                 int digits) {
  GrowthConstants out;
  PolyQ lead = leading_poly_in_N(ope);
  GrowthRoot k = dominant_root(lead, digits);
  out.k = k.value;
  if (lead.degree() <= 2) out.k_exact = exact_radical_form(lead);
  if (c_ope) {
    PolyQ clead = leading_poly_in_N(*c_ope);
    if (clead.degree() >= 1) {
      out.beta = dominant_root(clead, digits).value;
    } else {
      out.beta = BigFloat(1.0, digits);
      out.beta_defaulted = true;
    }
  } else {
    out.beta = BigFloat(1.0, digits);
    out.beta_defaulted = true;
  }
  return out;
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::None: return "none";
    case Classification::Minor: return "minor";
    case Classification::Major: return "major";
    case Classification::Super: return "super";
  }
  return "?";
}

Classification classify_miracle(const MiracleReport& report, const ConstantDictionary& dict) {
  double delta = 0.0;
  if (report.delta_rigorous) {
    delta = report.delta_rigorous->to_double();
  } else if (report.delta_empirical) {
    delta = report.delta_empirical->extrapolated;
  }
  bool identified = report.identification.has_value();
  bool known = false;
  if (identified) {
    known = report.identification->irrationality_known;
    if (const auto* e = dict.find(report.identification->name)) {
      known = e->irrationality_known;
    }
  }
  if (identified && delta <= 1.0) return Classification::Minor;
  if (identified && delta > 1.0) return known ? Classification::Major : Classification::Super;
  if (delta > 1.0) return Classification::Super;  // unidentified super-candidate
  return Classification::None;
}

int auto_precision(long K, double k_estimate) {
  double lg = k_estimate > 1.0 ? std::log10(k_estimate) : 0.0;
  long want = static_cast<long>(std::ceil(2.5 * static_cast<double>(K) * lg)) + 50;
  return static_cast<int>(std::max<long>(200, want));
}

BigFloat alladi_robertson_delta(long a, int digits) {
  int d = digits;
  BigFloat sa = BigFloat(static_cast<double>(a), d).sqrt();
  BigFloat sa1 = BigFloat(static_cast<double>(a + 1), d).sqrt();
  BigFloat l = (sa + sa1).ln();
  BigFloat four(4.0, d), two(2.0, d), one(1.0, d);
  return (four * l) / (two * l + one);
}

BigFloat ct_log_family_delta(long a, long b, int digits) {
  int d = digits;
  BigFloat sa = BigFloat(static_cast<double>(a), d).sqrt();
  BigFloat sb = BigFloat(static_cast<double>(b), d).sqrt();
  BigFloat l = (sa + sb).ln();
  BigFloat lnba = BigFloat(static_cast<double>(b - a), d).ln();
  BigFloat two(2.0, d), one(1.0, d);
  return two * (two * l - lnba) / (two * l + one);
}

BigFloat arctan_odd_delta(long k, int digits) {
  int d = digits;
  BigFloat kk(static_cast<double>(k), d);
  BigFloat s = (BigFloat(2.0, d) * kk * kk + BigFloat(2.0, d) * kk + BigFloat(1.0, d)).sqrt();
  BigFloat sqrt2 = BigFloat(2.0, d).sqrt();
  BigFloat inner = BigFloat(16.0, d) * kk * kk + BigFloat(16.0, d) * kk + BigFloat(6.0, d) +
                   BigFloat(8.0, d) * sqrt2 * kk * s + BigFloat(4.0, d) * sqrt2 * s;
  BigFloat ln2 = BigFloat(2.0, d).ln();
  return BigFloat(2.0, d) * (inner.ln() - ln2) / (inner.ln() + BigFloat(2.0, d));
}

BigFloat arctan_even_delta(long k, int digits) {
  int d = digits;
  BigFloat kk(static_cast<double>(k), d);
  BigFloat inner = BigFloat(4.0, d) * kk +
                   BigFloat(2.0, d) * (BigFloat(4.0, d) * kk * kk + BigFloat(1.0, d)).sqrt();
  BigFloat ln2 = BigFloat(2.0, d).ln();
  return BigFloat(2.0, d) * (inner.ln() - ln2) / (inner.ln() + BigFloat(1.0, d));
}

}  // namespace apery
