#include "apery/guess.hpp"

#include <algorithm>

namespace apery {

namespace {

// Reduced row echelon form over Q; returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<Rational>>& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  int rows = static_cast<int>(M.size());
  int cols = static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (!M[i][c].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(M[r], M[pr]);
    Rational inv = M[r][c].inverse();
    for (int j = c; j < cols; ++j) M[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Rational f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Nullspace basis of the matrix (free-variable vectors), exact.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> M, int cols) {
  std::vector<int> pivots = rref(M);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[fc] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -M[r][fc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// integer-normalized copy: cleared denominators, content 1, first nonzero positive
std::vector<Rational> normalize_vector(const std::vector<Rational>& v) {
  Integer den(1);
  for (const auto& x : v) den = Integer::lcm(den, x.den());
  std::vector<Rational> out;
  out.reserve(v.size());
  Rational scale{Rational(den)};
  for (const auto& x : v) out.push_back(x * scale);
  Integer content(0);
  for (const auto& x : out) content = Integer::gcd(content, x.num());
  content = content.abs();
  if (!content.is_zero() && !content.is_one()) {
    Rational inv = Rational(Integer(1), content);
    for (auto& x : out) x *= inv;
  }
  for (const auto& x : out) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

std::vector<int> support_of(const std::vector<Rational>& v) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!v[i].is_zero()) s.push_back(i);
  }
  return s;
}

}  // namespace

GuessConfig fit_bounds_to_length(GuessConfig cfg, size_t len) {
  auto needed = [](const GuessConfig& c) {
    return static_cast<long>(c.max_order + 1) * (c.max_degree + 1) + c.max_order +
           c.verify_count + c.window_start;
  };
  while (needed(cfg) > static_cast<long>(len) && cfg.max_degree > 0) --cfg.max_degree;
  while (needed(cfg) > static_cast<long>(len) && cfg.max_order > std::max(1, cfg.min_order)) {
    --cfg.max_order;
  }
  return cfg;
}

bool verify_operator(const RecOperator& ope, const std::vector<Rational>& seq, long first_index) {
  long L = ope.order();
  if (static_cast<long>(seq.size()) <= L) {
    throw Error(ErrorCode::InsufficientTerms, "verify_operator: sequence shorter than the order");
  }
  for (long t = 0; t + L < static_cast<long>(seq.size()); ++t) {
    long n = first_index + t;
    Rational acc(0);
    Rational at(n);
    for (int i = 0; i <= L; ++i) acc += ope.coeff(i).eval(at) * seq[t + i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<RecOperator> guess_operator(const std::vector<Rational>& seq,
                                          const GuessConfig& cfg) {
  long len = static_cast<long>(seq.size());
  long needed = static_cast<long>(cfg.max_order + 1) * (cfg.max_degree + 1) + cfg.max_order +
                cfg.verify_count + cfg.window_start;
  if (len < needed) {
    throw Error(ErrorCode::InsufficientTerms,
                "guess_operator: need at least " + std::to_string(needed) + " terms, have " +
                    std::to_string(len));
  }

  for (int order = std::max(1, cfg.min_order); order <= cfg.max_order; ++order) {
    // precompute powers of n lazily per row below
    for (int degree = 0; degree <= cfg.max_degree; ++degree) {
      int cols = (order + 1) * (degree + 1);
      // rows use sequence positions t = window_start .. ; row count is capped
      // a little above cols; the held-out tail stays out of the system
      long max_t = len - 1 - cfg.verify_count - order;
      long first_t = cfg.window_start;
      long avail = max_t - first_t + 1;
      if (avail < cols) continue;
      long nrows = std::min<long>(cols + 6, avail);

      std::vector<std::vector<Rational>> M;
      M.reserve(nrows);
      for (long rr = 0; rr < nrows; ++rr) {
        long t = first_t + rr;
        Rational nval(cfg.first_index + t);
        std::vector<Rational> row;
        row.reserve(cols);
        for (int i = 0; i <= order; ++i) {
          Rational npow(1);
          for (int j = 0; j <= degree; ++j) {
            row.push_back(npow * seq[t + i]);
            npow *= nval;
          }
        }
        M.push_back(std::move(row));
      }

      auto basis = nullspace(std::move(M), cols);
      if (basis.empty()) continue;

      // candidates with a nonzero leading-coefficient polynomial, by
      // lexicographically smallest support after normalization
      std::optional<std::vector<Rational>> best;
      std::vector<int> best_support;
      for (const auto& b : basis) {
        auto v = normalize_vector(b);
        bool lead_nonzero = false;
        for (int j = 0; j <= degree; ++j) {
          if (!v[order * (degree + 1) + j].is_zero()) lead_nonzero = true;
        }
        if (!lead_nonzero) continue;
        auto sup = support_of(v);
        if (!best || sup < best_support) {
          best = std::move(v);
          best_support = std::move(sup);
        }
      }
      if (!best) continue;

      std::vector<PolyQ> coeffs;
      coeffs.reserve(order + 1);
      for (int i = 0; i <= order; ++i) {
        std::vector<Rational> pc(best->begin() + i * (degree + 1),
                                 best->begin() + (i + 1) * (degree + 1));
        coeffs.emplace_back(std::move(pc), "n");
      }
      RecOperator cand = RecOperator(std::move(coeffs)).normalized();
      if (cand.order() != order) continue;  // leading polynomial collapsed
      if (verify_operator(cand, seq, cfg.first_index)) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace apery
