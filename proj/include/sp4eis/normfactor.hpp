#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp4eis/characters.hpp"
#include "sp4eis/root_system.hpp"

namespace sp4eis {

enum class SymbolKind
{
  L,
  Epsilon,
};

/// A completed L-function L(arg, chi^power) or an epsilon factor eps(arg, chi^power).
struct LSymbol
{
  SymbolKind kind = SymbolKind::L;
  AffineForm arg;
  int power = 0;

  bool operator==(const LSymbol &) const = default;
  /// L before eps, then by power, then by argument.
  bool operator<(const LSymbol &o) const;
};

/// "chi", "1", "chi^2", "chi^-1".
std::string character_name(int power);
/// "L(s-1,chi)", "eps(2s+1,chi^2)".
std::string to_string(const LSymbol &sym);

/// scalar * prod sym^exponent, exponents nonzero. Kept canonical by every
/// mutating operation: sorted, cancelled, no zero exponents.
class LExpression
{
public:
  LExpression() = default;
  explicit LExpression(Rational scalar) : scalar_(scalar) {}
  static LExpression symbol(const LSymbol &sym, int exponent = 1);
  static LExpression L(AffineForm arg, int power, int exponent = 1)
  {
    return symbol({SymbolKind::L, arg, power}, exponent);
  }
  static LExpression eps(AffineForm arg, int power, int exponent = 1)
  {
    return symbol({SymbolKind::Epsilon, arg, power}, exponent);
  }

  const Rational &scalar() const { return scalar_; }
  const std::map<LSymbol, int> &factors() const { return factors_; }
  bool is_one() const { return scalar_ == 1 && factors_.empty(); }
  /// Number of symbol occurrences counted with multiplicity.
  int symbol_count() const;

  LExpression operator*(const LExpression &o) const;
  LExpression inverse() const;
  LExpression pow(int n) const;

  bool operator==(const LExpression &) const = default;

private:
  void multiply_symbol(const LSymbol &sym, int exponent);

  Rational scalar_{1};
  std::map<LSymbol, int> factors_;
};

/// Fixed grammar, e.g.
///   L(s-1,chi) / (L(s+2,chi)*eps(s,chi)*eps(s+1,chi)*eps(s+2,chi))
/// An empty numerator renders as "1"; repeated symbols as "L(s,chi)^2".
std::string to_string(const LExpression &e);

/// Parses the grammar produced by to_string (numerator, optional "/ (...)").
LExpression parse_lexpression(const std::string &text);

/// Reduces character powers by the class of chi (when given) and drops
/// epsilon factors of the trivial character, which are identically 1.
LExpression canonicalize(const LExpression &e, std::optional<CharClass> cls = std::nullopt);

/// The (k, e) pairs Lambda o alpha^vee for alpha in the negative set of w.
std::vector<ComposedCharacter> normalizing_pairs(const WeylGroup &group,
                                                 const TorusCharacter &lambda,
                                                 const WeylElement &w);

/// prod over alpha > 0 with w(alpha) < 0 of
///   L(e, chi^k) / (L(e+1, chi^k) eps(e+1, chi^k)),  (k, e) = Lambda o alpha^vee.
LExpression inverse_norm_factor(const WeylGroup &group, const TorusCharacter &lambda,
                                const WeylElement &w);

/// Rewrites L(x, chi^k) with x = a s + b, a < 0 (or a = 0, b < 1/2) as
/// eps(1-x, chi^-k) L(1-x, chi^-k), and eps(x, chi^k) in the same half-plane as
/// eps(1-x, chi^-k)^-1. Idempotent.
LExpression apply_functional_equation(const LExpression &e,
                                      std::optional<CharClass> cls = std::nullopt);

}  // namespace sp4eis
