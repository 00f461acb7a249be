#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "apery/oper.hpp"

namespace apery {

// x(0..L-1) = inits, then x(n+L) = -(sum_{i<L} a_i(n) x(n+i)) / a_L(n), exactly.
// Throws SingularLeadingCoefficient naming n when a_L(n) = 0 is needed.
std::vector<Rational> run_recurrence(const RecOperator& ope, const std::vector<Rational>& inits,
                                     long K);

// c(n) = p(n) q(n-1) - p(n-1) q(n) for n = 1..K; result[i] = c(i+1).
std::vector<Rational> compute_c(const std::vector<Rational>& p, const std::vector<Rational>& q);

// p/q in lowest terms with positive denominator; q != 0.
std::pair<Integer, Integer> reduce_convergent(const Rational& p_n, const Rational& q_n);

// The coupled pair of solutions with everything downstream analysis needs.
struct ApproxPair {
  RecOperator ope;
  std::vector<Rational> p;
  std::vector<Rational> q;
  std::vector<Rational> c;  // c[i] = c(i+1)
  std::vector<std::optional<std::pair<Integer, Integer>>> reduced;  // absent where q(n) = 0

  long K() const { return static_cast<long>(p.size()) - 1; }
};

ApproxPair make_pair(const RecOperator& ope, const std::vector<Rational>& ini_p,
                     const std::vector<Rational>& ini_q, long K);

// ApproxPair built from externally produced sequences (integral pipelines).
ApproxPair make_pair_from_sequences(const RecOperator& ope, std::vector<Rational> p,
                                    std::vector<Rational> q);

}  // namespace apery
