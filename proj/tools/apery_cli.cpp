// Command-line entry points: ra-rec, ra-sum, ra-ct, ra-int, scan, identify.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "apery/parse.hpp"
#include "apery/report.hpp"

using namespace apery;

namespace {

struct CommonOpts {
  long K = 200;
  int precision = 0;
  std::string json_path;
  bool verbose = false;
  bool full_precision = false;
  std::string dictionary_path;
  int guess_max_order = 4;
  int guess_max_degree = 8;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("-K,--terms", c.K, "number of terms to compute");
  cmd->add_option("--precision", c.precision, "working precision in decimal digits (0 = auto)");
  cmd->add_option("--json", c.json_path, "write the JSON report to this file");
  cmd->add_flag("-v,--verbose", c.verbose, "print the human-readable proof sketch");
  cmd->add_flag("--full-precision", c.full_precision, "print alpha at full working precision");
  cmd->add_option("--dictionary", c.dictionary_path, "extra constant-dictionary file");
  cmd->add_option("--guess-max-order", c.guess_max_order, "operator guessing: max order");
  cmd->add_option("--guess-max-degree", c.guess_max_degree, "operator guessing: max degree");
}

RunConfig to_config(const CommonOpts& c) {
  RunConfig cfg;
  cfg.K = c.K;
  cfg.precision_digits = c.precision;
  cfg.dictionary_path = c.dictionary_path;
  cfg.full_precision = c.full_precision;
  cfg.guess.max_order = c.guess_max_order;
  cfg.guess.max_degree = c.guess_max_degree;
  return cfg;
}

void emit_report(const MiracleReport& rep, const RunConfig& cfg, const CommonOpts& c) {
  ordered_json j = report_to_json(rep, cfg);
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + c.json_path);
    out << j.dump(2) << "\n";
  }
  std::cout << j.dump(2) << "\n";
  if (c.verbose) std::cout << "\n" << render_verbose(rep) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Apery-style rational approximation laboratory"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a key=value file");

  // ra-rec
  auto* rec = app.add_subcommand("ra-rec", "analyze an operator with explicit initial conditions");
  CommonOpts rec_c;
  std::string rec_ope, rec_ini1, rec_ini2;
  rec->add_option("--ope", rec_ope, "operator in the n/N DSL");
  rec->add_option("--ini1", rec_ini1, "p initial conditions, e.g. 0,6 or [0,6]");
  rec->add_option("--ini2", rec_ini2, "q initial conditions");
  std::string rec_pos_ope, rec_pos_ini1, rec_pos_ini2;
  rec->add_option("OPE", rec_pos_ope, "operator (positional)");
  rec->add_option("INI1", rec_pos_ini1, "p initial conditions (positional)");
  rec->add_option("INI2", rec_pos_ini2, "q initial conditions (positional)");
  add_common(rec, rec_c);

  // ra-sum
  auto* sum = app.add_subcommand("ra-sum", "analyze a binomial-coefficient sum");
  CommonOpts sum_c;
  std::string sum_text, sum_ini_p;
  sum->add_option("--summand", sum_text, "summand, e.g. binomial(n,k)*binomial(n+k,k)*3^k")
      ->required();
  sum->add_option("--ini-p", sum_ini_p, "override p initial conditions (default [0,..,0,1])");
  add_common(sum, sum_c);

  // ra-ct
  auto* ct = app.add_subcommand("ra-ct", "analyze a Laurent constant-term sequence");
  CommonOpts ct_c;
  std::string ct_text, ct_ini_p;
  ct->add_option("--laurent", ct_text, "Laurent polynomial, e.g. (1+x)*(1+2*x)/x")->required();
  ct->add_option("--ini-p", ct_ini_p, "override p initial conditions");
  add_common(ct, ct_c);

  // ra-int
  auto* integ = app.add_subcommand("ra-int", "analyze an exact integral family");
  CommonOpts int_c;
  std::string int_family = "log";
  std::string int_a = "2";
  long int_k = 1, int_m = 3, int_s1 = 3, int_s2 = 2;
  integ->add_option("--family", int_family, "log | arctan-odd | arctan-custom")->required();
  integ->add_option("--a", int_a, "log family parameter a (rational, a>0, a!=1)");
  integ->add_option("--k", int_k, "arctan-odd parameter k (m = 2k+1)");
  integ->add_option("--m", int_m, "arctan-custom parameter m");
  integ->add_option("--scale-log2", int_s1, "arctan-custom per-n scale exponent of 2");
  integ->add_option("--scale-m", int_s2, "arctan-custom per-n scale exponent of m");
  add_common(integ, int_c);

  // scan
  auto* scan = app.add_subcommand("scan", "scan an operator family for delta > 1 candidates");
  CommonOpts scan_c;
  scan_c.K = 100;
  std::string scan_family = "f1", scan_out = "hits.ndjson";
  long A = 1, B = 20;
  long amin = 1, amax = 2, bmin = 1, bmax = 2, cmin = 1, cmax = 2;
  bool scan_serial = false, scan_resume = false;
  scan->add_option("--family", scan_family, "f1 | ct")->required();
  scan->add_option("--A", A, "family 1: lower bound for a and b");
  scan->add_option("--B", B, "family 1: upper bound for a and b");
  scan->add_option("--amin", amin)->group("ct family");
  scan->add_option("--amax", amax)->group("ct family");
  scan->add_option("--bmin", bmin)->group("ct family");
  scan->add_option("--bmax", bmax)->group("ct family");
  scan->add_option("--cmin", cmin)->group("ct family");
  scan->add_option("--cmax", cmax)->group("ct family");
  scan->add_option("--out", scan_out, "newline-delimited JSON hit file");
  scan->add_flag("--serial", scan_serial, "use the serial reference implementation");
  scan->add_flag("--resume", scan_resume, "resume an interrupted scan from <out>.progress");
  add_common(scan, scan_c);

  // identify
  auto* ident = app.add_subcommand("identify", "recognize a decimal constant");
  std::string ident_value;
  std::string ident_dict;
  long ident_bound = 10000;
  ident->add_option("--value", ident_value, "decimal digits of the constant")->required();
  ident->add_option("--dictionary", ident_dict, "extra constant-dictionary file");
  ident->add_option("--bound", ident_bound, "coefficient bound for integer relations");

  CLI11_PARSE(app, argc, argv);

  if (rec->parsed()) {
    if (rec_ope.empty()) rec_ope = rec_pos_ope;
    if (rec_ini1.empty()) rec_ini1 = rec_pos_ini1;
    if (rec_ini2.empty()) rec_ini2 = rec_pos_ini2;
    if (rec_ope.empty() || rec_ini1.empty() || rec_ini2.empty()) {
      throw Error(ErrorCode::BadArgument, "ra-rec needs an operator and two init lists");
    }
    RunConfig cfg = to_config(rec_c);
    MiracleReport rep = run_ra_rec_text(rec_ope, rec_ini1, rec_ini2, cfg);
    emit_report(rep, cfg, rec_c);
    return 0;
  }
  if (sum->parsed()) {
    RunConfig cfg = to_config(sum_c);
    if (!sum_ini_p.empty()) cfg.ini_p_override = parse_rational_list(sum_ini_p);
    MiracleReport rep = run_ra_sum(sum_text, cfg);
    emit_report(rep, cfg, sum_c);
    return 0;
  }
  if (ct->parsed()) {
    RunConfig cfg = to_config(ct_c);
    if (!ct_ini_p.empty()) cfg.ini_p_override = parse_rational_list(ct_ini_p);
    MiracleReport rep = run_ra_ct(ct_text, cfg);
    emit_report(rep, cfg, ct_c);
    return 0;
  }
  if (integ->parsed()) {
    RunConfig cfg = to_config(int_c);
    IntegralParams params;
    IntegralFamily fam;
    if (int_family == "log") {
      fam = IntegralFamily::Log;
      params.log_a = Rational(int_a);
    } else if (int_family == "arctan-odd") {
      fam = IntegralFamily::ArctanOdd;
      params.arctan_k = int_k;
    } else if (int_family == "arctan-custom") {
      fam = IntegralFamily::ArctanCustom;
      params.m = int_m;
      params.scale_log2 = int_s1;
      params.scale_m = int_s2;
    } else {
      throw Error(ErrorCode::BadArgument, "unknown integral family: " + int_family);
    }
    MiracleReport rep = run_ra_int(fam, params, cfg);
    emit_report(rep, cfg, int_c);
    return 0;
  }
  if (scan->parsed()) {
    ScanOptions opts;
    opts.K = scan_c.K;
    opts.parallel = !scan_serial;
    opts.guess.max_order = scan_c.guess_max_order;
    opts.guess.max_degree = scan_c.guess_max_degree;
    std::string progress_path = scan_out + ".progress";
    long done_block = -1;
    if (scan_resume) {
      std::ifstream in(progress_path);
      if (in) in >> done_block;
    }
    std::ofstream out(scan_out, (scan_resume && done_block >= 0) ? std::ios::app : std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + scan_out);
    long nhits = 0;
    auto flush_block = [&](long block_index, const ScanResult& res) {
      for (const auto& h : res.hits) {
        out << scan_hit_to_json(h, scan_family).dump() << "\n";
        ++nhits;
      }
      out.flush();
      std::ofstream prog(progress_path, std::ios::trunc);
      prog << block_index << "\n";
    };
    if (scan_family == "f1") {
      if (A < 1 || A > B) throw Error(ErrorCode::BadArgument, "need 1 <= A <= B");
      // one block per a-row: append-only output, resumable after any row
      for (long a = A; a <= B; ++a) {
        long block = a - A;
        if (block <= done_block) continue;
        ScanResult row = scan_family_1_rect({a, a}, {A, B}, opts);
        flush_block(block, row);
      }
      std::cerr << "scan complete: " << nhits << " hits appended to " << scan_out << "\n";
    } else if (scan_family == "ct") {
      ScanResult res = scan_ct_family({amin, amax}, {bmin, bmax}, {cmin, cmax}, opts);
      flush_block(0, res);
      std::cerr << "scan complete: " << res.hits.size() << " hits, " << res.skipped.size()
                << " skipped, " << res.candidates << " candidates\n";
    } else {
      throw Error(ErrorCode::BadArgument, "unknown scan family: " + scan_family);
    }
    return 0;
  }
  if (ident->parsed()) {
    ConstantDictionary dict = ConstantDictionary::defaults();
    if (!ident_dict.empty()) dict.load_extra(ident_dict);
    std::string digits = ident_value;
    int prec = static_cast<int>(digits.size());
    BigFloat x(digits, std::max(prec, 40));
    IdentifyOptions opts;
    opts.coeff_bound = Integer(ident_bound);
    auto id = identify_constant(x, dict, opts);
    ordered_json j;
    if (id) {
      j["kind"] = id->kind_name();
      j["name"] = id->name;
      j["conjectural"] = id->conjectural;
      j["residual"] = id->residual.to_string(5);
    } else {
      j = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    ordered_json err;
    err["error"]["code"] = e.code_name();
    err["error"]["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"]["code"] = "internal";
    err["error"]["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
