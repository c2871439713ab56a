#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sp4eis/characters.hpp"
#include "sp4eis/normfactor.hpp"

namespace sp4eis {

/// Order of vanishing at a point. `base` is the part that is known exactly;
/// each L-factor whose argument lies in the open critical strip contributes an
/// unknown integer >= 0 (numerator: unknown_zeros) or <= 0 (denominator:
/// unknown_poles). With no unknowns the order is Known(base).
struct OrderValue
{
  int base = 0;
  int unknown_zeros = 0;
  int unknown_poles = 0;
  /// L-values in the strip whose (unknown) zero order enters, e.g. "L(1/2,chi)".
  std::vector<std::string> strip_values;

  static OrderValue known(int n) { return OrderValue{n, 0, 0, {}}; }

  bool is_known() const { return unknown_zeros == 0 && unknown_poles == 0; }
  bool is_strip_unknown() const { return !is_known(); }
  /// The order is at least this (absent when a denominator may vanish).
  std::optional<int> lower_bound() const;
  /// The order is at most this (absent when a numerator may vanish).
  std::optional<int> upper_bound() const;

  OrderValue operator+(const OrderValue &o) const;
  /// Only Known orders negate to Known orders; unknown directions swap.
  OrderValue operator-() const;
  bool operator==(const OrderValue &o) const
  {
    return base == o.base && unknown_zeros == o.unknown_zeros && unknown_poles == o.unknown_poles;
  }
};

/// "2", "-1", ">=0", "<=-1", "unknown".
std::string to_string(const OrderValue &v);

/// Minimum of orders, used when adding linearly independent terms.
OrderValue min_order(const std::vector<OrderValue> &orders);

/// Reasons an atom is known to be nonzero.
enum class AtomStatus
{
  ProvenNonzero,   ///< values of completed L off the strip, eps values, residues
  AssertedNonzero, ///< nonvanishing stated without proof in the source results
  Opaque,          ///< deeper Taylor/Laurent data; may vanish
};

/// A monomial in formal atoms: atom name -> exponent (may be negative for
/// atoms that are nonzero).
using Monomial = std::map<std::string, int>;
/// A Laurent polynomial in atoms with rational coefficients.
using Poly = std::map<Monomial, Rational>;

std::string to_string(const Poly &p);
Poly poly_constant(const Rational &c);
Poly poly_atom(const std::string &atom, const Rational &c = Rational(1));

/// Facts about completed L-functions used by the germ engine. Kept as data so
/// the same engine serves every character class.
struct KnowledgeBase
{
  /// Arguments where completed L(., 1) has a simple pole, with residues.
  std::map<Rational, Rational> trivial_poles;
  /// Open interval containing every possible zero.
  Rational strip_lo{0};
  Rational strip_hi{1};
  /// Opaque atoms whose nonvanishing is asserted, with the source statement.
  std::map<std::string, std::string> asserted_nonzero;
  /// Truncation depth of Laurent expansions (number of coefficients kept).
  int depth = 4;

  static const KnowledgeBase &standard();

  AtomStatus status(const std::string &atom) const;
  bool in_strip(const Rational &x) const { return strip_lo < x && x < strip_hi; }
};

/// Atom naming. Values are "L(x,chi)" / "eps(y,chi)"; derivatives carry the
/// global class, "L'(0,chi)@quadratic", "L^(3)(-1,chi)@other"; Laurent
/// coefficients of completed zeta at 0 are "LC0[L(0,1)]".
std::string value_atom(SymbolKind kind, const Rational &x, int power);
std::string derivative_atom(SymbolKind kind, const Rational &x, int power, int order,
                            CharClass cls);
std::string laurent_atom(int index);

/// Truncated Laurent series sum_i coeffs[i] t^(order+i) in t = s - s0.
struct Series
{
  int order = 0;
  std::vector<Poly> coeffs;

  static Series constant(const Poly &c, int depth);
  bool exhausted() const { return coeffs.empty(); }
  Series operator*(const Series &o) const;
  /// Requires a provably nonzero monomial leading coefficient.
  Series inverse(const KnowledgeBase &kb) const;
  Series pow(int n, const KnowledgeBase &kb) const;
  Series scaled(const Poly &c) const;
  /// Drops formally vanishing leading coefficients.
  void normalize();
};

/// Meromorphic germ of an expression at a rational point.
struct Germ
{
  OrderValue order;
  /// Present whenever no strip factor is involved.
  std::optional<Series> series;

  /// Leading coefficient (the first kept series coefficient).
  const Poly &leading() const;
  /// Status of the leading coefficient: a single monomial whose atoms are all
  /// proven (or asserted) nonzero, or Opaque otherwise.
  AtomStatus leading_status(const KnowledgeBase &kb = KnowledgeBase::standard()) const;

  Germ operator*(const Germ &o) const;
  static Germ from_series(Series s, const KnowledgeBase &kb = KnowledgeBase::standard());
};

struct StripUnknownError : std::domain_error
{
  using std::domain_error::domain_error;
};

struct IndeterminateError : std::domain_error
{
  using std::domain_error::domain_error;
};

/// Sum of per-symbol orders from the knowledge base. Throws
/// std::invalid_argument when a symbol is identically infinite or the class
/// cannot be used globally (Sgn).
OrderValue order_at(const LExpression &e, CharClass cls, const Rational &s0,
                    const KnowledgeBase &kb = KnowledgeBase::standard());

/// Laurent expansion of e at s0; series is absent when a strip factor occurs.
Germ expand(const LExpression &e, CharClass cls, const Rational &s0,
            const KnowledgeBase &kb = KnowledgeBase::standard());

/// Like expand but refuses (StripUnknownError) when the order is not Known.
Germ germ_at(const LExpression &e, CharClass cls, const Rational &s0,
             const KnowledgeBase &kb = KnowledgeBase::standard());

/// Weighted sum. The minimal order wins; formally cancelling leading
/// coefficients are dropped and the next coefficient examined. When the
/// surviving leading coefficient is not provably nonzero the resulting order
/// is only a lower bound (unknown_zeros = 1).
Germ sum_germs(const std::vector<std::pair<Germ, Rational>> &terms,
               const KnowledgeBase &kb = KnowledgeBase::standard());

/// Throws IndeterminateError unless the germ's order is exact.
void require_exact(const Germ &g, const KnowledgeBase &kb = KnowledgeBase::standard());

}  // namespace sp4eis
