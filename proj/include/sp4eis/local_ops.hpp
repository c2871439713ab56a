#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4eis/characters.hpp"
#include "sp4eis/root_system.hpp"

namespace sp4eis {

enum class Case
{
  Heisenberg,
  Siegel,
};

std::string to_string(Case c);
/// Accepts heisenberg|heis|H and siegel|S.
Case parse_case(const std::string &text);

enum class PlaceKind
{
  NonArch,
  Arch,
};

std::string to_string(PlaceKind p);
PlaceKind parse_place_kind(const std::string &text);

/// The rank-2 Weyl group shared by both cases.
const WeylGroup &sp4_weyl_group();
/// Lambda_s for the case.
TorusCharacter case_lambda(Case c);
/// Minimal coset representatives: w(2e2) > 0 (Heisenberg), w(e1-e2) > 0 (Siegel).
const std::vector<WeylElement> &case_coset_reps(Case c);

/// Opaque subquotient label, compared textually.
struct SubquotientLabel
{
  std::string text;

  static SubquotientLabel spherical() { return {"Spherical"}; }
  bool is_spherical() const { return text == "Spherical"; }
  bool operator==(const SubquotientLabel &) const = default;
  bool operator<(const SubquotientLabel &o) const { return text < o.text; }
};

enum class Action
{
  Plus,
  Minus,
  Iso,
  Kernel,
};

std::string to_string(Action a);
Action parse_action(const std::string &text);

struct LocalRuleKey
{
  Case cs = Case::Heisenberg;
  WeylElement w = WeylElement::identity(2);
  PlaceKind place = PlaceKind::NonArch;
  CharClass local_char = CharClass::Trivial;
  Rational s0{0};
};

/// One row of the rule table.
struct RuleRow
{
  Case cs = Case::Heisenberg;
  std::vector<WeylElement> ws;
  std::optional<PlaceKind> place;  ///< absent: both
  std::vector<CharClass> chars;
  std::string s0_text;
  std::vector<std::string> choices;  ///< empty: any choice
  int pole = 0;
  Action action = Action::Iso;
  std::string image;
  std::string structure;
  std::string citation;
  int line = 0;

  bool matches_key(const LocalRuleKey &key) const;
  bool matches_choice(const SubquotientLabel &choice) const;
  /// "Spherical|L(nu^1;T1)", or "*".
  std::string choice_text() const;
};

struct ActionNote
{
  SubquotientLabel choice;
  Action action = Action::Iso;
  int pole = 0;
};

struct LocalRuleResult
{
  int pole_order = 0;
  std::optional<SubquotientLabel> carrier;
  std::vector<ActionNote> notes;
};

struct UncoveredKeyError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct UnknownChoiceError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

/// How a local operator treats a chosen section.
struct LocalOutcome
{
  int pole = 0;
  Action action = Action::Iso;
  std::string image;      ///< "-" when the image is the choice itself
  std::string structure;  ///< "-" when nothing is stated
  std::string citation;   ///< empty for the default (no rule)
};

class RuleTable
{
public:
  /// The table compiled into the library from data/local_rules.tsv.
  static const RuleTable &builtin();
  static RuleTable load(const std::string &path);
  static RuleTable parse(const std::string &text, const std::string &source = "<text>");

  const std::vector<RuleRow> &rows() const { return rows_; }

  /// Order and carrier of the pole of N(Lambda_s, w) at the place.
  LocalRuleResult local_pole(const LocalRuleKey &key) const;
  Action sign_action(const LocalRuleKey &key, const SubquotientLabel &choice) const;
  /// Full outcome for a chosen section; first matching row wins.
  LocalOutcome resolve(const LocalRuleKey &key, const SubquotientLabel &choice) const;

private:
  void validate(const LocalRuleKey &key) const;
  std::vector<const RuleRow *> rows_for(const LocalRuleKey &key) const;

  std::vector<RuleRow> rows_;
};

/// Predicate language of the s0 column.
bool s0_predicate_holds(const std::string &predicate, const Rational &s0);

/// chi nu^x x 1 reducible for SL2 (x = exponent of the character).
bool sl2_reducible(PlaceKind place, CharClass local_char, const Rational &x);
/// chi nu^x (ratio of the two GL1 characters) gives a reducible GL2 principal series.
bool gl2_reducible(PlaceKind place, CharClass local_char, const Rational &x);

}  // namespace sp4eis
