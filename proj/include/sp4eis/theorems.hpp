#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp4eis/constant_term.hpp"

namespace sp4eis {

/// H+ / H- : Heisenberg, s >= 0 / s < 0. S+ / S- : Siegel.
enum class TheoremId
{
  HPlus,
  HMinus,
  SPlus,
  SMinus,
};

std::string to_string(TheoremId id);
/// "H+", "h-", "S+", "s-".
TheoremId parse_theorem_id(const std::string &text);

/// What a clause says about one template.
struct Expectation
{
  std::optional<int> pole;          ///< exact pole order
  std::optional<bool> vanishing;
  /// Conditional answers: the strip value the order depends on.
  std::optional<std::string> strip_value;
  /// Expected image label at a named place.
  std::optional<std::pair<std::string, std::string>> image;
};

std::string to_string(const Expectation &e);

struct ClauseRow
{
  TheoremId theorem = TheoremId::HPlus;
  std::string clause;       ///< "(1)", "(5)", ...
  std::string description;  ///< template: character, s0, choices
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string citation;
  /// Set when the clause as stated disagrees with the factor formulas it rests on.
  std::string note;
};

/// Evaluates the clause templates of one theorem.
std::vector<ClauseRow> verify_theorem(TheoremId id, const RuleTable &rules = RuleTable::builtin());

bool all_pass(const std::vector<ClauseRow> &rows);
/// Failing rows without a note.
std::vector<ClauseRow> unexplained_failures(const std::vector<ClauseRow> &rows);

}  // namespace sp4eis
