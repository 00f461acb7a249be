#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/numbers.hpp"

namespace apery {

struct DictionaryEntry {
  std::string name;
  std::string description;
  std::string value_literal;  // verified decimal literal, >= 120 digits
  bool irrationality_known = false;

  BigFloat value(int digits) const { return BigFloat(value_literal, digits); }
};

class ConstantDictionary {
 public:
  // Default entries: 1, Pi, Pi^2, ln(2), ln(3), ln(5), zeta(3), Catalan,
  // gamma, e; irrationality_known is false exactly for gamma and Catalan.
  static ConstantDictionary defaults();

  // Extend from a file of whitespace-separated records: name value known.
  void load_extra(const std::string& path);
  void add(DictionaryEntry e);

  const std::vector<DictionaryEntry>& entries() const { return entries_; }
  const DictionaryEntry* find(const std::string& name) const;

 private:
  std::vector<DictionaryEntry> entries_;
};

// Simple continued fraction partial quotients; stops early when the
// remainder drops below precision noise (exact Euclidean tail for rationals).
std::vector<Integer> continued_fraction(const BigFloat& x, int depth);

// Nonzero integer vector r with |sum r_i x_i| below the detection threshold
// and max |r_i| <= coeff_bound, or nullopt. PSLQ at the shared precision of
// the inputs; throws when that precision cannot support the bound.
std::optional<std::vector<Integer>> integer_relation(const std::vector<BigFloat>& xs,
                                                     const Integer& coeff_bound);

struct Identification {
  enum class Kind { Dictionary, RationalMultiple, Algebraic };
  Kind kind = Kind::Dictionary;
  std::string name;             // e.g. "ln(4/3)", "(1/6)*Pi^2", "x^2-2*x-1"
  BigFloat residual;
  bool conjectural = true;
  bool irrationality_known = false;

  std::string kind_name() const;
};

struct IdentifyOptions {
  Integer coeff_bound{10000};
};

// Recognition ladder: rational multiple of a dictionary constant, then small
// integer combinations (single constants, then pairs), then an algebraic
// relation [1, x, x^2, x^3]. First success below the residual threshold wins.
std::optional<Identification> identify_constant(const BigFloat& x, const ConstantDictionary& dict,
                                                const IdentifyOptions& opts = {});

}  // namespace apery
