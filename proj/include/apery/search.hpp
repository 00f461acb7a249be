#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "apery/analysis.hpp"
#include "apery/guess.hpp"

namespace apery {

struct ScanHit {
  std::vector<long> family_params;
  RecOperator ope;
  double delta_empirical = 0.0;  // extrapolated estimate; > 1 for stored hits
  BigFloat alpha_float;
  std::optional<Identification> identification;
};

struct ScanOptions {
  long K = 100;
  bool parallel = true;          // OpenMP over candidates; aggregation is ordered
  int identify_digits = 60;      // reduced precision for scan-time identification
  GuessConfig guess;             // ct-family operator discovery bounds
};

struct ScanResult {
  std::vector<ScanHit> hits;                // deterministic (a,b[,c]) order
  std::vector<std::vector<long>> skipped;   // degenerate candidates, logged
  long candidates = 0;
};

// Operators (n+2)N^2 - (a n + b)N + (n+1) for A <= a,b <= B, run with
// iniP = [0,1], iniQ = [1,1]; hits are candidates whose empirical delta
// (extrapolated, window (K/10, K/2)) exceeds 1.
ScanResult scan_family_1(long A, long B, const ScanOptions& opts);

// Rectangle variant over a_range x b_range (used for resumable row blocks).
ScanResult scan_family_1_rect(std::pair<long, long> a_range, std::pair<long, long> b_range,
                              const ScanOptions& opts);

// Serial reference implementation; bit-identical to the parallel path.
ScanResult scan_family_1_serial(long A, long B, const ScanOptions& opts);

// q(n) = CT[((1+ax)(1+bx)(1+cx)/x^2)^n]; guesses the third-order operator,
// builds p from [0,0,1], and keeps delta > 1 candidates.
ScanResult scan_ct_family(std::pair<long, long> a_range, std::pair<long, long> b_range,
                          std::pair<long, long> c_range, const ScanOptions& opts);

}  // namespace apery
