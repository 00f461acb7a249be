#pragma once

#include <string>
#include <vector>

#include "apery/generators.hpp"
#include "apery/oper.hpp"

namespace apery {

// Operator DSL: integers, n, N, + - * ^ and parentheses; normalized to
// sum_i a_i(n) N^i. Degree 0 in N is rejected ("not a recurrence").
RecOperator parse_operator(const std::string& text);

// Laurent DSL: integers, x, + - * ^, parentheses, and division by a
// monomial power of x only.
LaurentPoly parse_laurent(const std::string& text);

// Summand DSL: products of binomial(lin,lin)^e factors over symbols n and k,
// integer or (p/q) scalars, and a geometric part base^k.
HyperSummand parse_summand(const std::string& text);

// Comma-separated rationals, with optional surrounding brackets: "[0,6]" or "0,6".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace apery
