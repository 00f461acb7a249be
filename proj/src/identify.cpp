#include "apery/identify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace apery {

ConstantDictionary ConstantDictionary::defaults() {
  ConstantDictionary d;
  auto add = [&](const char* name, const char* desc, const char* val, bool known) {
    d.entries_.push_back({name, desc, val, known});
  };
  add("1", "the rational unit", "1.0", false);
  add("Pi", "circle constant",
      "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679821480865132823066470938",
      true);
  add("Pi^2", "pi squared",
      "9.8696044010893586188344909998761511353136994072407906264133493762200448224192052430017734037185522318240259137740231440777723",
      true);
  add("ln(2)", "natural log of 2",
      "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471560586332699641868754200148102057068573368552",
      true);
  add("ln(3)", "natural log of 3",
      "1.0986122886681096913952452369225257046474905578227494517346943336374942932186089668736157548137320887879700290659578657423680",
      true);
  add("ln(5)", "natural log of 5",
      "1.6094379124341003746007593332261876395256013542685177219126478914741789877076577646301338780931796107999663030217155628997240",
      true);
  add("zeta(3)", "Apery's constant",
      "1.2020569031595942853997381615114499907649862923404988817922715553418382057863130901864558736093352581461991577952607194184920",
      true);
  add("Catalan", "Catalan's constant",
      "0.91596559417721901505460351493238411077414937428167213426649811962176301977625476947935651292611510624857442261919619957903590",
      false);
  add("gamma", "Euler-Mascheroni constant",
      "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144724980708248096050",
      false);
  add("e", "Euler's number",
      "2.7182818284590452353602874713526624977572470936999595749669676277240766303535475945713821785251664274274663919320030599218174",
      true);
  return d;
}

void ConstantDictionary::add(DictionaryEntry e) { entries_.push_back(std::move(e)); }

void ConstantDictionary::load_extra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open dictionary file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream is(line);
    DictionaryEntry e;
    std::string known;
    if (!(is >> e.name >> e.value_literal >> known)) continue;
    e.irrationality_known = (known == "true" || known == "1" || known == "yes");
    e.description = "user dictionary entry";
    entries_.push_back(std::move(e));
  }
}

const DictionaryEntry* ConstantDictionary::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<Integer> continued_fraction(const BigFloat& x, int depth) {
  if (depth < 1) throw Error(ErrorCode::BadArgument, "depth must be >= 1");
  int d = x.digits();
  std::vector<Integer> out;
  BigFloat cur = x;
  // noise floor grows with the square of the convergent denominator
  BigFloat noise = BigFloat::pow10(-(d - 8), d);
  Integer den_prev(1), den(0);  // convergent denominators k_{-2} = 1, k_{-1} = 0
  for (int i = 0; i < depth; ++i) {
    Integer a = cur.floor_to_integer();
    BigFloat frac = cur - BigFloat(a, d);
    Integer den_next = a * den + den_prev;
    BigFloat threshold = noise * BigFloat(den_next * den_next, d);
    // a remainder within noise of 1 means cur was an integer that rounded down
    if (BigFloat(1.0, d) - frac < threshold) {
      a += Integer(1);
      frac = BigFloat(0.0, d);
      den_next = a * den + den_prev;
    }
    out.push_back(a);
    den_prev = den;
    den = den_next;
    if (frac.is_zero() || frac < threshold) break;
    cur = BigFloat(1.0, d) / frac;
  }
  return out;
}

namespace {

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<BigFloat> a;
  Matrix(int r, int c, int digits) : rows(r), cols(c), a(r * c, BigFloat(0.0, digits)) {}
  BigFloat& at(int i, int j) { return a[i * cols + j]; }
  const BigFloat& at(int i, int j) const { return a[i * cols + j]; }
};

BigFloat nint(const BigFloat& x) {
  BigFloat r(x.digits());
  mpfr_round(r.raw(), x.raw());
  return r;
}

}  // namespace

std::optional<std::vector<Integer>> integer_relation(const std::vector<BigFloat>& xs,
                                                     const Integer& coeff_bound) {
  int n = static_cast<int>(xs.size());
  if (n < 2) throw Error(ErrorCode::BadArgument, "integer_relation needs at least two values");
  int digits = xs[0].digits();
  for (const auto& x : xs) digits = std::min(digits, x.digits());
  double bound_digits = coeff_bound.bits() * 0.30103;
  if (digits < n * bound_digits + 30) {
    throw Error(ErrorCode::InsufficientPrecision,
                "insufficient precision for the requested coefficient bound");
  }
  int d = digits;
  BigFloat eps = BigFloat::pow10(-(d - 10), d);
  BigFloat detect = BigFloat::pow10(-(d - 20), d);

  // PSLQ (one-level), following the standard Bailey formulation.
  std::vector<BigFloat> y;
  y.reserve(n);
  BigFloat norm(0.0, d);
  for (const auto& x : xs) norm = norm + x * x;
  norm = norm.sqrt();
  if (norm.is_zero()) return std::nullopt;
  for (const auto& x : xs) y.push_back(x / norm);

  std::vector<BigFloat> s(n, BigFloat(0.0, d));
  {
    BigFloat t(0.0, d);
    for (int i = n - 1; i >= 0; --i) {
      t = t + y[i] * y[i];
      s[i] = t.sqrt();
    }
  }
  Matrix H(n, n - 1, d);
  for (int j = 0; j < n - 1; ++j) {
    H.at(j, j) = s[j + 1] / s[j];
    for (int i = j + 1; i < n; ++i) {
      H.at(i, j) = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }
  }
  // B tracks column operations; a relation is a column of B.
  std::vector<std::vector<Integer>> B(n, std::vector<Integer>(n, Integer(0)));
  for (int i = 0; i < n; ++i) B[i][i] = Integer(1);

  auto size_reduce = [&]() {
    for (int i = 1; i < n; ++i) {
      for (int j = i - 1; j >= 0; --j) {
        if (H.at(j, j).is_zero()) continue;
        BigFloat t = nint(H.at(i, j) / H.at(j, j));
        if (t.is_zero()) continue;
        Integer ti = t.round_to_integer();
        y[j] = y[j] + t * y[i];
        for (int k = 0; k <= j; ++k) H.at(i, k) = H.at(i, k) - t * H.at(j, k);
        for (int k = 0; k < n; ++k) B[k][j] = B[k][j] + ti * B[k][i];
      }
    }
  };
  size_reduce();

  BigFloat gamma(2.0 / std::sqrt(3.0) + 0.0001, d);
  const int max_iter = 2000 + 200 * n * d / 10;
  for (int iter = 0; iter < max_iter; ++iter) {
    // pivot: maximize gamma^i |H_ii|
    int r = 0;
    BigFloat best(-1.0, d);
    BigFloat g(1.0, d);
    for (int i = 0; i < n - 1; ++i) {
      g = g * gamma;
      BigFloat v = g * H.at(i, i).abs();
      if (v > best) {
        best = v;
        r = i;
      }
    }
    // swap rows r, r+1 of H and y; columns r, r+1 of B
    std::swap(y[r], y[r + 1]);
    for (int k = 0; k < n; ++k) std::swap(B[k][r], B[k][r + 1]);
    for (int k = 0; k < n - 1; ++k) {
      BigFloat t = H.at(r, k);
      H.at(r, k) = H.at(r + 1, k);
      H.at(r + 1, k) = t;
    }
    // corner rotation
    if (r < n - 2) {
      BigFloat t0(0.0, d);
      mpfr_hypot(t0.raw(), H.at(r, r).raw(), H.at(r, r + 1).raw(), MPFR_RNDN);
      if (!t0.is_zero()) {
        BigFloat c = H.at(r, r) / t0;
        BigFloat sn = H.at(r, r + 1) / t0;
        for (int i = r; i < n; ++i) {
          BigFloat a = H.at(i, r), b = H.at(i, r + 1);
          H.at(i, r) = c * a + sn * b;
          H.at(i, r + 1) = c * b - sn * a;
        }
      }
    }
    size_reduce();

    // detection: a y-entry collapsed to ~0
    int best_i = -1;
    BigFloat min_y(0.0, d);
    for (int i = 0; i < n; ++i) {
      BigFloat ay = y[i].abs();
      if (best_i < 0 || ay < min_y) {
        min_y = ay;
        best_i = i;
      }
    }
    if (min_y < eps) {
      std::vector<Integer> rel(n);
      Integer maxc(0);
      for (int k = 0; k < n; ++k) {
        rel[k] = B[k][best_i];
        if (rel[k].abs() > maxc) maxc = rel[k].abs();
      }
      if (maxc.is_zero() || maxc > coeff_bound) return std::nullopt;
      // confirm the residual at full precision
      BigFloat resid(0.0, d);
      for (int k = 0; k < n; ++k) resid = resid + BigFloat(rel[k], d) * xs[k];
      if (resid.abs() < detect * norm) return rel;
      return std::nullopt;
    }
    // norm bound exit: 1/max|H_ii| exceeds the coefficient bound
    BigFloat maxh(0.0, d);
    for (int i = 0; i < n - 1; ++i) {
      BigFloat h = H.at(i, i).abs();
      if (h > maxh) maxh = h;
    }
    if (!maxh.is_zero()) {
      BigFloat lower = BigFloat(1.0, d) / maxh;
      if (lower > BigFloat(coeff_bound, d)) return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string Identification::kind_name() const {
  switch (kind) {
    case Kind::Dictionary: return "dictionary";
    case Kind::RationalMultiple: return "rational-multiple";
    case Kind::Algebraic: return "algebraic";
  }
  return "?";
}

namespace {

BigFloat eval_relation(const std::vector<Integer>& rel, const std::vector<BigFloat>& xs) {
  BigFloat acc(0.0, xs[0].digits());
  for (size_t i = 0; i < rel.size(); ++i) acc = acc + BigFloat(rel[i], xs[i].digits()) * xs[i];
  return acc.abs();
}

std::optional<std::vector<Integer>> try_relation(const std::vector<BigFloat>& xs,
                                                 const Integer& bound) {
  try {
    return integer_relation(xs, bound);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InsufficientPrecision) return std::nullopt;
    throw;
  }
}

bool is_log_name(const std::string& name, Rational* arg) {
  if (name.rfind("ln(", 0) != 0 || name.back() != ')') return false;
  *arg = Rational(name.substr(3, name.size() - 4));
  return true;
}

std::string format_coeff_times(const Rational& c, const std::string& name) {
  if (c == Rational(1)) return name;
  if (c == Rational(-1)) return "-" + name;
  return "(" + c.to_string() + ")*" + name;
}

std::string poly_in_x(const std::vector<Integer>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i].is_zero()) continue;
    Integer a = coeffs[i].abs();
    if (first) {
      if (coeffs[i].sign() < 0) os << "-";
      first = false;
    } else {
      os << (coeffs[i].sign() < 0 ? "-" : "+");
    }
    if (!a.is_one() || i == 0) {
      os << a.to_string();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// does the integer polynomial (lowest degree first) have a rational root?
bool has_rational_root(const std::vector<Integer>& c) {
  // candidates p/q with p | c[0], q | c[deg]; coefficients here are small
  int deg = static_cast<int>(c.size()) - 1;
  if (c[0].is_zero()) return true;  // x = 0
  auto divisors = [](const Integer& v) {
    std::vector<Integer> out;
    Integer av = v.abs();
    for (Integer d(1); d * d <= av; d += Integer(1)) {
      if (av.divisible_by(d)) {
        out.push_back(d);
        out.push_back(av.divexact(d));
      }
    }
    return out;
  };
  for (const auto& p : divisors(c[0])) {
    for (const auto& q : divisors(c[deg])) {
      for (int s = -1; s <= 1; s += 2) {
        Rational cand(s < 0 ? -p : p, q);
        Rational acc(0);
        for (int i = deg; i >= 0; --i) acc = acc * cand + Rational(c[i]);
        if (acc.is_zero()) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<Identification> identify_constant(const BigFloat& x, const ConstantDictionary& dict,
                                                const IdentifyOptions& opts) {
  int digits = x.digits();
  BigFloat threshold = BigFloat::pow10(-(digits - 20), digits);

  auto accept = [&](Identification id, const BigFloat& resid) -> std::optional<Identification> {
    if (!(resid < threshold)) return std::nullopt;
    id.residual = resid;
    return id;
  };

  // (1) rational multiple of a dictionary constant
  for (const auto& e : dict.entries()) {
    BigFloat theta = e.value(digits);
    auto rel = try_relation({x, theta}, opts.coeff_bound);
    if (!rel) continue;
    BigFloat resid = eval_relation(*rel, {x, theta});
    if ((*rel)[0].is_zero()) continue;
    Rational c = Rational((*rel)[1], (*rel)[0]);
    c = -c;  // x = c * theta
    if (c.is_zero()) continue;
    Identification id;
    id.kind = Identification::Kind::RationalMultiple;
    id.name = format_coeff_times(c, e.name);
    id.irrationality_known = e.irrationality_known && e.name != "1";
    if (e.name == "1") {
      id.kind = Identification::Kind::Dictionary;
      id.name = c.to_string();
    } else if (c == Rational(1)) {
      id.kind = Identification::Kind::Dictionary;
    }
    if (auto out = accept(id, resid)) return out;
  }

  // (2) small integer combinations: single constants, then pairs
  const auto& es = dict.entries();
  BigFloat one(1.0, digits);
  for (size_t i = 1; i < es.size(); ++i) {
    BigFloat theta = es[i].value(digits);
    auto rel = try_relation({one, x, theta}, opts.coeff_bound);
    if (!rel || (*rel)[1].is_zero()) continue;
    BigFloat resid = eval_relation(*rel, {one, x, theta});
    // x = (-r0 - r2*theta)/r1
    Rational r1{Rational((*rel)[1])};
    Rational a = -Rational((*rel)[0]) / r1;
    Rational b = -Rational((*rel)[2]) / r1;
    if (b.is_zero()) continue;
    Identification id;
    id.kind = Identification::Kind::Dictionary;
    Rational log_arg;
    if (a.is_zero() && is_log_name(es[i].name, &log_arg) && b.is_integer()) {
      if (!b.num().fits_long()) continue;
      id.name = "ln(" + log_arg.pow(b.num().to_long()).to_string() + ")";
      id.irrationality_known = true;
    } else {
      std::string expr = format_coeff_times(b, es[i].name);
      if (!a.is_zero()) expr = a.to_string() + (b.sign() > 0 ? "+" : "") + expr;
      id.name = expr;
      id.irrationality_known = es[i].irrationality_known;
    }
    if (auto out = accept(id, resid)) return out;
  }
  for (size_t i = 1; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      BigFloat ti = es[i].value(digits);
      BigFloat tj = es[j].value(digits);
      auto rel = try_relation({one, x, ti, tj}, opts.coeff_bound);
      if (!rel || (*rel)[1].is_zero()) continue;
      BigFloat resid = eval_relation(*rel, {one, x, ti, tj});
      Rational r1{Rational((*rel)[1])};
      Rational a = -Rational((*rel)[0]) / r1;
      Rational bi = -Rational((*rel)[2]) / r1;
      Rational bj = -Rational((*rel)[3]) / r1;
      if (bi.is_zero() || bj.is_zero()) continue;  // degenerate; stage 2 covers
      Identification id;
      id.kind = Identification::Kind::Dictionary;
      Rational ai, aj;
      if (a.is_zero() && is_log_name(es[i].name, &ai) && is_log_name(es[j].name, &aj) &&
          bi.is_integer() && bj.is_integer() && bi.num().fits_long() && bj.num().fits_long()) {
        Rational combined = ai.pow(bi.num().to_long()) * aj.pow(bj.num().to_long());
        id.name = "ln(" + combined.to_string() + ")";
        id.irrationality_known = true;
      } else {
        std::string expr = format_coeff_times(bi, es[i].name);
        std::string expr2 = format_coeff_times(bj, es[j].name);
        if (expr2[0] != '-') expr += "+";
        expr += expr2;
        if (!a.is_zero()) expr = a.to_string() + (expr[0] == '-' ? "" : "+") + expr;
        id.name = expr;
        id.irrationality_known = es[i].irrationality_known && es[j].irrationality_known;
      }
      if (auto out = accept(id, resid)) return out;
    }
  }

  // (3) algebraic: minimal-degree polynomial relation, degree 2 then 3
  BigFloat x2 = x * x;
  BigFloat x3 = x2 * x;
  for (int deg = 2; deg <= 3; ++deg) {
    std::vector<BigFloat> basis{one, x, x2};
    if (deg == 3) basis.push_back(x3);
    auto rel = try_relation(basis, opts.coeff_bound);
    if (!rel) continue;
    std::vector<Integer> coeffs = *rel;
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (static_cast<int>(coeffs.size()) - 1 < 2) continue;  // rational; stage 1 handles
    BigFloat resid = eval_relation(*rel, basis);
    Identification id;
    id.kind = Identification::Kind::Algebraic;
    if (coeffs.back().sign() < 0) {
      for (auto& c : coeffs) c = -c;
    }
    id.name = poly_in_x(coeffs);
    id.irrationality_known = !has_rational_root(coeffs);
    if (auto out = accept(id, resid)) return out;
  }
  return std::nullopt;
}

}  // namespace apery
