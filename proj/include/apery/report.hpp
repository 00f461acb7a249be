#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "apery/analysis.hpp"
#include "apery/guess.hpp"
#include "apery/search.hpp"

namespace apery {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  long K = 200;
  int precision_digits = 0;  // 0 = auto from the growth constant
  std::string dictionary_path;
  GuessConfig guess;
  std::optional<std::vector<Rational>> ini_p_override;
  int report_float_digits = 10;  // paper-style “1.449629514”
  int alpha_digits = 40;
  bool full_precision = false;

  void validate() const;
};

MiracleReport run_ra_rec(const RecOperator& ope, const std::vector<Rational>& ini1,
                         const std::vector<Rational>& ini2, const RunConfig& cfg);
MiracleReport run_ra_rec_text(const std::string& ope_text, const std::string& ini1,
                              const std::string& ini2, const RunConfig& cfg);
MiracleReport run_ra_sum(const std::string& summand_text, const RunConfig& cfg);
MiracleReport run_ra_ct(const std::string& laurent_text, const RunConfig& cfg);

enum class IntegralFamily { Log, ArctanOdd, ArctanCustom };

struct IntegralParams {
  Rational log_a{2};   // log family
  long arctan_k = 1;   // odd family: m = 2k+1
  long m = 3;          // custom family
  long scale_log2 = 3;
  long scale_m = 2;
};

MiracleReport run_ra_int(IntegralFamily family, const IntegralParams& params,
                         const RunConfig& cfg);

// JSON projection with the exact documented field order.
ordered_json report_to_json(const MiracleReport& report, const RunConfig& cfg);
// Inverse of report_to_json on its projection (per-index delta data is not
// part of the schema and comes back empty).
MiracleReport report_from_json(const ordered_json& j);

ordered_json scan_hit_to_json(const ScanHit& hit, const std::string& family);

// Human-readable proof sketch.
std::string render_verbose(const MiracleReport& report);

ConstantDictionary load_dictionary(const RunConfig& cfg);

}  // namespace apery
