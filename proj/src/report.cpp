#include "apery/report.hpp"

#include <sstream>

#include "apery/generators.hpp"
#include "apery/parse.hpp"

namespace apery {

void RunConfig::validate() const {
  if (K < 20) throw Error(ErrorCode::BadArgument, "K must be >= 20");
  if (precision_digits != 0 && precision_digits < 100) {
    throw Error(ErrorCode::BadArgument, "explicit precision must be >= 100 digits");
  }
}

ConstantDictionary load_dictionary(const RunConfig& cfg) {
  ConstantDictionary dict = ConstantDictionary::defaults();
  if (!cfg.dictionary_path.empty()) dict.load_extra(cfg.dictionary_path);
  return dict;
}

namespace {

std::vector<Rational> joint_denominator_profile(const ApproxPair& pair) {
  std::vector<Rational> prof;
  prof.reserve(pair.p.size());
  for (size_t n = 0; n < pair.p.size(); ++n) {
    Integer d = Integer::lcm(pair.p[n].den(), pair.q[n].den());
    prof.emplace_back(Integer(1), d);
  }
  return prof;
}

int identification_digits(const ApproxPair& pair) {
  long K = pair.K();
  if (pair.q[K].is_zero() || pair.q[K - 1].is_zero()) return 60;
  BigFloat a1(pair.p[K] / pair.q[K], 130);
  BigFloat a0(pair.p[K - 1] / pair.q[K - 1], 130);
  BigFloat err = (a1 - a0).abs();
  if (err.is_zero()) return 100;
  double lg = -err.ln().to_double() / 2.302585092994046;
  int usable = static_cast<int>(lg) - 15;
  return std::clamp(usable, 40, 100);
}

struct APriori {
  BigFloat alpha;
  Identification id;
};

MiracleReport analyze_pair(const ApproxPair& pair, const RunConfig& cfg,
                           const ConstantDictionary& dict,
                           const std::optional<APriori>& a_priori) {
  MiracleReport rep;
  rep.ope = pair.ope;
  rep.ini_p = std::vector<Rational>(pair.p.begin(), pair.p.begin() + pair.ope.order());
  rep.ini_q = std::vector<Rational>(pair.q.begin(), pair.q.begin() + pair.ope.order());
  rep.K = pair.K();

  // c-operator by guessing; c(n) starts at n = 1
  GuessConfig cg;
  cg.max_order = std::min(cfg.guess.max_order, 3);
  cg.max_degree = std::min(cfg.guess.max_degree, 6);
  cg.verify_count = cfg.guess.verify_count;
  cg.first_index = 1;
  cg = fit_bounds_to_length(cg, pair.c.size());
  try {
    rep.c_ope = guess_operator(pair.c, cg);
  } catch (const Error&) {
    rep.c_ope = std::nullopt;
  }

  // growth constants at fixed analysis precision
  std::optional<GrowthConstants> growth;
  try {
    growth = growth_constants(pair.ope, rep.c_ope, 60);
    rep.growth_k = growth->k;
    rep.growth_k_exact = growth->k_exact;
    rep.beta = growth->beta;
    rep.beta_defaulted = growth->beta_defaulted;
  } catch (const Error&) {
    growth = std::nullopt;
  }

  int digits = cfg.precision_digits;
  if (digits == 0) {
    double k_est = growth ? growth->k.to_double() : 2.0;
    digits = auto_precision(rep.K, k_est);
  }
  rep.precision_digits = digits;

  // integrality pattern over the joint p/q denominator profile
  try {
    PatternFit fit = fit_integrality_pattern(joint_denominator_profile(pair));
    rep.pattern = fit.pattern;
    if (!fit.pattern) rep.worst_denominator = fit.worst_denominator;
  } catch (const Error&) {
  }

  if (growth && rep.pattern) {
    try {
      rep.delta_rigorous = rigorous_delta(growth->k, growth->beta, *rep.pattern);
    } catch (const Error&) {
    }
  }

  BigFloat alpha = a_priori ? a_priori->alpha : estimate_alpha(pair, digits);
  // report alpha from the convergents even when the target is known a priori
  rep.alpha_float = estimate_alpha(pair, digits);
  rep.alpha_a_priori = a_priori.has_value();

  try {
    std::pair<long, long> window{std::max<long>(2, rep.K / 10), rep.K / 2};
    BigFloat alpha_at_digits(alpha);
    if (alpha.digits() < digits) alpha_at_digits = BigFloat(alpha.to_string(alpha.digits()), digits);
    rep.delta_empirical = empirical_delta(pair, alpha_at_digits, window);
  } catch (const Error&) {
  }

  std::optional<BigFloat> delta_for_measure = rep.delta_rigorous;
  if (!delta_for_measure && rep.delta_empirical) {
    delta_for_measure = BigFloat(rep.delta_empirical->extrapolated, 30);
  }
  if (delta_for_measure) {
    try {
      rep.measure = irrationality_measure(*delta_for_measure);
    } catch (const Error&) {
    }
  }

  if (a_priori) {
    rep.identification = a_priori->id;
  } else {
    int id_digits = identification_digits(pair);
    BigFloat alpha_id(pair.p[rep.K] / pair.q[rep.K], id_digits);
    rep.identification = identify_constant(alpha_id, dict);
  }

  rep.classification = classify_miracle(rep, dict);
  rep.super_candidate =
      rep.classification == Classification::Super && !rep.identification.has_value();
  return rep;
}

}  // namespace

MiracleReport run_ra_rec(const RecOperator& ope, const std::vector<Rational>& ini1,
                         const std::vector<Rational>& ini2, const RunConfig& cfg) {
  cfg.validate();
  RecOperator nop = ope.normalized();
  if (static_cast<int>(ini1.size()) != nop.order() ||
      static_cast<int>(ini2.size()) != nop.order()) {
    throw Error(ErrorCode::BadArgument, "initial-condition lists must match the operator order");
  }
  ConstantDictionary dict = load_dictionary(cfg);
  ApproxPair pair = make_pair(nop, ini1, ini2, cfg.K);
  return analyze_pair(pair, cfg, dict, std::nullopt);
}

MiracleReport run_ra_rec_text(const std::string& ope_text, const std::string& ini1,
                              const std::string& ini2, const RunConfig& cfg) {
  return run_ra_rec(parse_operator(ope_text), parse_rational_list(ini1),
                    parse_rational_list(ini2), cfg);
}

namespace {

std::vector<Rational> default_p_inits(int order) {
  std::vector<Rational> ini(order, Rational(0));
  ini.back() = Rational(1);
  return ini;
}

MiracleReport analyze_generated_q(const RecOperator& ope, std::vector<Rational> q,
                                  const RunConfig& cfg) {
  ConstantDictionary dict = load_dictionary(cfg);
  std::vector<Rational> ini_p =
      cfg.ini_p_override ? *cfg.ini_p_override : default_p_inits(ope.order());
  if (static_cast<int>(ini_p.size()) != ope.order()) {
    throw Error(ErrorCode::BadArgument, "p initial conditions must match the operator order");
  }
  std::vector<Rational> p = run_recurrence(ope, ini_p, cfg.K);
  ApproxPair pair = make_pair_from_sequences(ope, std::move(p), std::move(q));
  return analyze_pair(pair, cfg, dict, std::nullopt);
}

}  // namespace

MiracleReport run_ra_sum(const std::string& summand_text, const RunConfig& cfg) {
  cfg.validate();
  HyperSummand F = parse_summand(summand_text);
  std::vector<Rational> q = binomial_sum_sequence(F, cfg.K);
  std::optional<RecOperator> ope = guess_operator(q, fit_bounds_to_length(cfg.guess, q.size()));
  if (!ope) {
    throw Error(ErrorCode::NoOperatorFound, "no operator within bounds; raise guessBounds");
  }
  return analyze_generated_q(*ope, std::move(q), cfg);
}

MiracleReport run_ra_ct(const std::string& laurent_text, const RunConfig& cfg) {
  cfg.validate();
  LaurentPoly P = parse_laurent(laurent_text);
  if (P.is_zero()) throw Error(ErrorCode::BadArgument, "zero Laurent polynomial");
  std::vector<Rational> q = constant_term_sequence(P, cfg.K);
  // expected order is the width of the Laurent support
  int span = 0;
  if (P.min_exponent() < 0) span -= static_cast<int>(P.min_exponent());
  if (P.max_exponent() > 0) span += static_cast<int>(P.max_exponent());
  std::optional<RecOperator> ope;
  if (span >= 1) {
    GuessConfig gc = cfg.guess;
    gc.min_order = span;
    gc.max_order = std::max(cfg.guess.max_order, span);
    try {
      ope = guess_operator(q, fit_bounds_to_length(gc, q.size()));
    } catch (const Error&) {
      ope = std::nullopt;
    }
  }
  if (!ope) ope = guess_operator(q, fit_bounds_to_length(cfg.guess, q.size()));
  if (!ope) {
    throw Error(ErrorCode::NoOperatorFound, "no operator within bounds; raise guessBounds");
  }
  return analyze_generated_q(*ope, std::move(q), cfg);
}

MiracleReport run_ra_int(IntegralFamily family, const IntegralParams& params,
                         const RunConfig& cfg) {
  cfg.validate();
  ConstantDictionary dict = load_dictionary(cfg);
  std::vector<ValueInSpan> vals;
  switch (family) {
    case IntegralFamily::Log:
      vals = log_integral_sequence(params.log_a, cfg.K);
      break;
    case IntegralFamily::ArctanOdd:
      if (params.arctan_k < 0) throw Error(ErrorCode::BadArgument, "k must be >= 0");
      vals = arctan_integral_sequence(2 * params.arctan_k + 1, 3, 2, cfg.K);
      break;
    case IntegralFamily::ArctanCustom:
      vals = arctan_integral_sequence(params.m, params.scale_log2, params.scale_m, cfg.K);
      break;
  }
  PQSequences pq = pq_from_values(vals, 1);

  std::optional<RecOperator> ope;
  try {
    GuessConfig gc = cfg.guess;
    gc.max_degree = std::max(gc.max_degree, 8);
    ope = guess_operator(pq.q, fit_bounds_to_length(gc, pq.q.size()));
  } catch (const Error&) {
    ope = std::nullopt;
  }
  if (!ope) {
    throw Error(ErrorCode::NoOperatorFound,
                "no operator within bounds for the integral denominators; raise guessBounds");
  }
  ApproxPair pair = make_pair_from_sequences(*ope, std::move(pq.p), std::move(pq.q));

  const BasisConstant& target = vals.front().basis[1];
  double k_est = 2.0;
  try {
    k_est = dominant_root(leading_poly_in_N(*ope), 40).value.to_double();
  } catch (const Error&) {
  }
  int digits = cfg.precision_digits ? cfg.precision_digits : auto_precision(cfg.K, k_est);
  APriori ap{target.value(digits), Identification{}};
  ap.id.kind = Identification::Kind::Dictionary;
  ap.id.name = target.name();
  ap.id.conjectural = false;  // the constant is known a priori
  ap.id.irrationality_known = true;
  ap.id.residual = BigFloat(0.0, 20);
  return analyze_pair(pair, cfg, dict, ap);
}

namespace {

std::string fmt_float(const BigFloat& x, int sig) { return x.to_string(sig); }

ordered_json rationals_to_json(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : v) arr.push_back(r.to_string());
  return arr;
}

std::vector<Rational> rationals_from_json(const ordered_json& arr) {
  std::vector<Rational> out;
  for (const auto& s : arr) out.emplace_back(s.get<std::string>());
  return out;
}

}  // namespace

ordered_json report_to_json(const MiracleReport& rep, const RunConfig& cfg) {
  int fd = cfg.report_float_digits;
  int ad = cfg.full_precision ? rep.precision_digits : cfg.alpha_digits;
  ordered_json j;
  j["operator"] = rep.ope.to_string();
  j["c_operator"] = rep.c_ope ? ordered_json(rep.c_ope->to_string()) : ordered_json(nullptr);
  if (rep.pattern) {
    ordered_json p;
    p["G"] = rep.pattern->G;
    p["R"] = rep.pattern->R;
    p["P"] = rep.pattern->P;
    p["D0"] = rep.pattern->D0;
    j["pattern"] = p;
  } else {
    j["pattern"] = nullptr;
  }
  {
    ordered_json g;
    g["k_float"] = rep.growth_k ? ordered_json(fmt_float(*rep.growth_k, fd)) : ordered_json(nullptr);
    g["k_exact"] = rep.growth_k_exact ? ordered_json(*rep.growth_k_exact) : ordered_json(nullptr);
    j["growth"] = g;
  }
  j["beta"] = rep.beta ? ordered_json(fmt_float(*rep.beta, fd)) : ordered_json(nullptr);
  {
    ordered_json d;
    d["rigorous"] =
        rep.delta_rigorous ? ordered_json(fmt_float(*rep.delta_rigorous, fd)) : ordered_json(nullptr);
    if (rep.delta_empirical) {
      d["empirical_last"] = fmt_float(BigFloat(rep.delta_empirical->last_value, 20), fd);
      d["empirical_extrapolated"] = fmt_float(BigFloat(rep.delta_empirical->extrapolated, 20), fd);
    } else {
      d["empirical_last"] = nullptr;
      d["empirical_extrapolated"] = nullptr;
    }
    j["delta"] = d;
  }
  j["measure"] = rep.measure ? ordered_json(fmt_float(*rep.measure, fd)) : ordered_json(nullptr);
  j["alpha"] = fmt_float(rep.alpha_float, ad);
  if (rep.identification) {
    ordered_json id;
    id["kind"] = rep.identification->kind_name();
    id["name"] = rep.identification->name;
    id["conjectural"] = rep.identification->conjectural;
    j["identification"] = id;
  } else {
    j["identification"] = nullptr;
  }
  j["ini_p"] = rationals_to_json(rep.ini_p);
  j["ini_q"] = rationals_to_json(rep.ini_q);
  j["classification"] = rep.super_candidate ? "super-candidate"
                                            : classification_name(rep.classification);
  return j;
}

MiracleReport report_from_json(const ordered_json& j) {
  MiracleReport rep;
  rep.ope = parse_operator(j.at("operator").get<std::string>());
  if (!j.at("c_operator").is_null()) {
    rep.c_ope = parse_operator(j["c_operator"].get<std::string>());
  }
  if (!j.at("pattern").is_null()) {
    const auto& p = j["pattern"];
    rep.pattern = IntegralityPattern{p.at("G"), p.at("R"), p.at("P"), p.at("D0")};
  }
  const auto& g = j.at("growth");
  if (!g.at("k_float").is_null()) {
    rep.growth_k = BigFloat(g["k_float"].get<std::string>(), 20);
  }
  if (!g.at("k_exact").is_null()) rep.growth_k_exact = g["k_exact"].get<std::string>();
  if (!j.at("beta").is_null()) rep.beta = BigFloat(j["beta"].get<std::string>(), 20);
  const auto& d = j.at("delta");
  if (!d.at("rigorous").is_null()) {
    rep.delta_rigorous = BigFloat(d["rigorous"].get<std::string>(), 20);
  }
  if (!d.at("empirical_last").is_null()) {
    DeltaEstimate est;
    est.last_value = BigFloat(d["empirical_last"].get<std::string>(), 20).to_double();
    est.extrapolated = BigFloat(d["empirical_extrapolated"].get<std::string>(), 20).to_double();
    rep.delta_empirical = est;
  }
  if (!j.at("measure").is_null()) rep.measure = BigFloat(j["measure"].get<std::string>(), 20);
  std::string alpha_str = j.at("alpha").get<std::string>();
  rep.alpha_float = BigFloat(alpha_str, static_cast<int>(alpha_str.size()));
  if (!j.at("identification").is_null()) {
    const auto& id = j["identification"];
    Identification out;
    std::string kind = id.at("kind").get<std::string>();
    out.kind = kind == "rational-multiple" ? Identification::Kind::RationalMultiple
               : kind == "algebraic"       ? Identification::Kind::Algebraic
                                           : Identification::Kind::Dictionary;
    out.name = id.at("name").get<std::string>();
    out.conjectural = id.at("conjectural").get<bool>();
    rep.identification = out;
  }
  rep.ini_p = rationals_from_json(j.at("ini_p"));
  rep.ini_q = rationals_from_json(j.at("ini_q"));
  std::string cls = j.at("classification").get<std::string>();
  if (cls == "super-candidate") {
    rep.classification = Classification::Super;
    rep.super_candidate = true;
  } else if (cls == "minor") {
    rep.classification = Classification::Minor;
  } else if (cls == "major") {
    rep.classification = Classification::Major;
  } else if (cls == "super") {
    rep.classification = Classification::Super;
  }
  return rep;
}

ordered_json scan_hit_to_json(const ScanHit& hit, const std::string& family) {
  ordered_json j;
  j["family"] = family;
  j["params"] = hit.family_params;
  j["operator"] = hit.ope.to_string();
  j["delta_empirical"] = BigFloat(hit.delta_empirical, 20).to_string(10);
  j["alpha"] = hit.alpha_float.to_string(40);
  if (hit.identification) {
    ordered_json id;
    id["kind"] = hit.identification->kind_name();
    id["name"] = hit.identification->name;
    id["conjectural"] = hit.identification->conjectural;
    j["identification"] = id;
  } else {
    j["identification"] = nullptr;
  }
  return j;
}

std::string render_verbose(const MiracleReport& rep) {
  std::ostringstream os;
  os << "Rational approximation analysis\n";
  os << "===============================\n\n";
  os << "Operator: " << rep.ope.to_string() << "\n";
  os << "Initial conditions: p " << rationals_to_json(rep.ini_p).dump() << ", q "
     << rationals_to_json(rep.ini_q).dump() << "\n";
  os << "Terms computed: K = " << rep.K << " (working precision " << rep.precision_digits
     << " digits)\n\n";

  if (rep.c_ope) {
    os << "Coupling sequence c(n) = p(n)q(n-1) - p(n-1)q(n) is annihilated by\n";
    os << "  " << rep.c_ope->to_string() << "\n";
    os << "(found by undetermined coefficients and verified on every computed index,\n";
    os << "including held-out trailing terms).\n\n";
  } else {
    os << "No annihilating operator for c(n) was found within the search bounds;\n";
    os << "beta falls back to 1.\n\n";
  }

  if (rep.growth_k) {
    os << "Growth: |q(n)| = O(k^n) with k = " << rep.growth_k->to_string(10);
    if (rep.growth_k_exact) os << " (exact: " << *rep.growth_k_exact << ")";
    os << ",\nthe dominant root of the leading-in-n coefficient equation.\n";
  }
  if (rep.beta) {
    os << "c(n) = O(beta^n) with beta = " << rep.beta->to_string(10);
    if (rep.beta_defaulted) os << " (defaulted: subexponential or unknown c-growth)";
    os << ".\n\n";
  }

  if (rep.pattern) {
    os << "Integrality pattern [G,R,P,D0] = [" << rep.pattern->G << "," << rep.pattern->R << ","
       << rep.pattern->P << "," << rep.pattern->D0 << "]:\n";
    os << "L(" << (rep.pattern->G == 1 ? "n" : std::to_string(rep.pattern->G) + "n") << ")^"
       << rep.pattern->R << " * " << rep.pattern->P << "^n * " << rep.pattern->D0
       << " * p(n) is an integer for every computed n, where L(n) = lcm(1..n).\n";
    os << "This divisibility claim is verified empirically for n <= " << rep.K
       << " and is the one unproven step of the argument.\n\n";
  } else {
    os << "No integrality pattern [G,R,P,D0] fits within the search bounds";
    if (rep.worst_denominator) {
      os << " (worst denominator " << rep.worst_denominator->to_string() << ")";
    }
    os << ".\n\n";
  }

  if (rep.delta_rigorous && rep.growth_k && rep.beta && rep.pattern) {
    os << "delta = (2*ln(k) - ln(beta)) / (ln(k) + G*R + ln(P))\n";
    os << "      = (2*ln(" << rep.growth_k->to_string(10) << ") - ln("
       << rep.beta->to_string(10) << ")) / (ln(" << rep.growth_k->to_string(10) << ") + "
       << rep.pattern->G * rep.pattern->R << " + ln(" << rep.pattern->P << "))\n";
    os << "      = " << rep.delta_rigorous->to_string(10) << "\n\n";
  }
  if (rep.delta_empirical) {
    os << "Empirical delta from reduced convergents: last = "
       << BigFloat(rep.delta_empirical->last_value, 20).to_string(10)
       << ", extrapolated = " << BigFloat(rep.delta_empirical->extrapolated, 20).to_string(10)
       << "\n\n";
  }
  if (rep.measure) {
    os << "Implied irrationality measure delta/(delta-1) = " << rep.measure->to_string(10);
    if (rep.measure->sign() < 0) os << " (negative: non-proving)";
    os << "\n\n";
  }

  os << "alpha = " << rep.alpha_float.to_string(40) << "\n";
  if (rep.identification) {
    if (rep.alpha_a_priori) {
      os << "The limit constant is known a priori: " << rep.identification->name << "\n";
    } else {
      os << "Conjectural identification (integer-relation detection, unproved): "
         << rep.identification->name << "\n";
    }
  } else {
    os << "Unidentified constant (no relation found at the default bounds).\n";
  }

  double delta = rep.delta_rigorous ? rep.delta_rigorous->to_double()
                : rep.delta_empirical ? rep.delta_empirical->extrapolated
                                      : 0.0;
  os << "\nClassification: "
     << (rep.super_candidate ? "super-candidate" : classification_name(rep.classification)) << "\n";
  if (delta <= 1.0) {
    os << "delta <= 1 proves nothing about irrationality here; the convergents still\n"
       << "approach alpha quickly, which remains of numerical-analysis interest.\n";
  } else {
    os << "delta > 1: granting the integrality pattern, alpha is irrational with\n"
       << "measure at most delta/(delta-1).\n";
  }
  return os.str();
}

}  // namespace apery
