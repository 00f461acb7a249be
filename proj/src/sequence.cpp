#include "apery/sequence.hpp"

namespace apery {

std::vector<Rational> run_recurrence(const RecOperator& ope, const std::vector<Rational>& inits,
                                     long K) {
  long L = ope.order();
  if (static_cast<long>(inits.size()) != L) {
    throw Error(ErrorCode::BadArgument, "initial conditions must match the operator order");
  }
  std::vector<Rational> x = inits;
  if (K + 1 <= static_cast<long>(x.size())) {
    x.resize(K + 1);
    return x;
  }
  x.reserve(K + 1);
  for (long n = 0; n + L <= K; ++n) {
    Rational at(n);
    Rational lead = ope.coeff(static_cast<int>(L)).eval(at);
    if (lead.is_zero()) {
      throw Error(ErrorCode::SingularLeadingCoefficient,
                  "singular leading coefficient at n = " + std::to_string(n));
    }
    Rational acc(0);
    for (int i = 0; i < L; ++i) acc += ope.coeff(i).eval(at) * x[n + i];
    x.push_back(-acc / lead);
  }
  return x;
}

std::vector<Rational> compute_c(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::BadArgument, "compute_c: sequence lengths differ");
  }
  if (p.size() < 2) {
    throw Error(ErrorCode::BadArgument, "compute_c: need at least two terms");
  }
  std::vector<Rational> c;
  c.reserve(p.size() - 1);
  for (size_t n = 1; n < p.size(); ++n) {
    c.push_back(p[n] * q[n - 1] - p[n - 1] * q[n]);
  }
  return c;
}

std::pair<Integer, Integer> reduce_convergent(const Rational& p_n, const Rational& q_n) {
  if (q_n.is_zero()) throw Error(ErrorCode::ZeroDenominator, "reduce_convergent: q(n) = 0");
  Rational r = p_n / q_n;
  return {r.num(), r.den()};
}

namespace {

std::vector<std::optional<std::pair<Integer, Integer>>> reduce_all(
    const std::vector<Rational>& p, const std::vector<Rational>& q) {
  std::vector<std::optional<std::pair<Integer, Integer>>> red(p.size());
  for (size_t n = 0; n < p.size(); ++n) {
    if (!q[n].is_zero()) red[n] = reduce_convergent(p[n], q[n]);
  }
  return red;
}

}  // namespace

ApproxPair make_pair(const RecOperator& ope, const std::vector<Rational>& ini_p,
                     const std::vector<Rational>& ini_q, long K) {
  ApproxPair pr;
  pr.ope = ope;
  pr.p = run_recurrence(ope, ini_p, K);
  pr.q = run_recurrence(ope, ini_q, K);
  pr.c = compute_c(pr.p, pr.q);
  pr.reduced = reduce_all(pr.p, pr.q);
  return pr;
}

ApproxPair make_pair_from_sequences(const RecOperator& ope, std::vector<Rational> p,
                                    std::vector<Rational> q) {
  ApproxPair pr;
  pr.ope = ope;
  pr.p = std::move(p);
  pr.q = std::move(q);
  pr.c = compute_c(pr.p, pr.q);
  pr.reduced = reduce_all(pr.p, pr.q);
  return pr;
}

}  // namespace apery
