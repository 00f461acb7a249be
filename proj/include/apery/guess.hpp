#pragma once

#include <optional>
#include <vector>

#include "apery/oper.hpp"

namespace apery {

struct GuessConfig {
  int max_order = 4;
  int max_degree = 8;
  int verify_count = 10;   // held-out trailing terms
  int window_start = 1;    // skip this many leading rows of the linear system
  int min_order = 1;       // forced lower bound on the operator order
  long first_index = 0;    // seq[0] corresponds to x(first_index)
};

// Discover a polynomial-coefficient annihilating operator for seq by exact
// undetermined coefficients: search order ascending then degree ascending,
// solve the rational nullspace over a window of rows, verify on the whole
// sequence including the held-out tail. Returns nullopt when nothing within
// bounds annihilates the sequence.
std::optional<RecOperator> guess_operator(const std::vector<Rational>& seq,
                                          const GuessConfig& cfg);

// True iff apply_operator is exactly zero at every index where it is defined.
// seq[0] corresponds to x(first_index).
bool verify_operator(const RecOperator& ope, const std::vector<Rational>& seq,
                     long first_index = 0);

// Shrink the degree (then the order) bounds until the guessing precondition
// fits a sequence of the given length.
GuessConfig fit_bounds_to_length(GuessConfig cfg, size_t len);

}  // namespace apery
