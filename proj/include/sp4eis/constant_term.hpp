#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp4eis/lgerms.hpp"
#include "sp4eis/local_ops.hpp"
#include "sp4eis/normfactor.hpp"

namespace sp4eis {

/// A place where the section is specified explicitly. Places not listed carry
/// the normalized spherical vector.
struct PlaceSpec
{
  std::string name;
  PlaceKind kind = PlaceKind::NonArch;
  CharClass local_char = CharClass::Trivial;
  SubquotientLabel choice = SubquotientLabel::spherical();
};

struct PlaceProfile
{
  CharClass global_char = CharClass::Trivial;
  /// The finite set S together with the single archimedean place.
  std::vector<PlaceSpec> places;

  /// Exactly one archimedean place; sgn only there; distinct names;
  /// global class not sgn.
  void validate() const;
  /// Archimedean place only, spherical.
  static PlaceProfile spherical(CharClass global, CharClass arch_char = CharClass::Trivial);
  /// Adds finite places p1, p2, ... with the given class and choice.
  PlaceProfile &add_finite(int count, CharClass local_char, const std::string &choice);
  PlaceProfile &set_arch(CharClass local_char, const std::string &choice);
  int finite_count() const;
};

struct PlaceImage
{
  std::string place;
  std::string label;
  std::string structure;
};

struct TermReport
{
  WeylElement w = WeylElement::identity(2);
  LExpression expr;
  /// The same factor after the functional equation moved every argument to
  /// the right half-plane.
  LExpression expr_fe;
  OrderValue global_order;
  int local_poles = 0;
  OrderValue term_order;
  /// +1 / -1 product of local actions, 0 when some place kills the term.
  int weight = 1;
  TorusCharacter target;
  std::vector<PlaceImage> images;
  std::vector<std::string> citations;
};

struct PoleOrder
{
  /// Pole order (0 = holomorphic); absent when it depends on strip zeros.
  std::optional<int> value;
  /// False when value is only an upper bound.
  bool exact = true;
  /// For strip-dependent answers, e.g. "order of zero of L(1/2,chi)".
  std::string condition;
};

std::string to_string(const PoleOrder &p);

struct ConstantTermReport
{
  Case cs = Case::Heisenberg;
  Rational s0{0};
  PlaceProfile profile;
  std::vector<TermReport> terms;
  /// Indices into terms, grouped by equal target at s0.
  std::vector<std::vector<int>> groups;
  std::vector<OrderValue> group_orders;  ///< one per group; dead groups omitted below
  std::vector<bool> group_live;
  OrderValue combined;
  PoleOrder pole;
  bool vanishing = false;
  std::vector<PlaceImage> image;
};

/// order_at(inverse normalizing factor) minus the local pole count.
OrderValue term_order(Case cs, const PlaceProfile &profile, const WeylElement &w,
                      const Rational &s0, const RuleTable &rules = RuleTable::builtin());

/// Partition of the coset representatives by target w(Lambda) at s0.
std::vector<std::vector<WeylElement>> same_target_groups(Case cs, const Rational &s0,
                                                         CharClass global_char);

ConstantTermReport eisenstein_order(Case cs, const PlaceProfile &profile, const Rational &s0,
                                    const RuleTable &rules = RuleTable::builtin());

}  // namespace sp4eis
