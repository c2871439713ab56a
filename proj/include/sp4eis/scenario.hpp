#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp4eis/constant_term.hpp"
#include "sp4eis/numerics.hpp"

namespace sp4eis {

/// A scenario file: key = value lines, then [place NAME] sections.
/// See docs/scenario-format.md.
struct Scenario
{
  std::string name;
  Case cs = Case::Heisenberg;
  PlaceProfile profile;
  std::optional<int> modulus;  ///< numeric stand-in for chi: 1, 4 or 5
  std::vector<Rational> s0;
  std::vector<std::string> checks;  ///< poles, numcheck
  /// Optional expectations, one per s0 or a single value for all.
  std::vector<int> expect_pole;
  std::vector<bool> expect_vanishing;

  int effective_modulus() const;
  DirichletTable table() const;
};

struct ScenarioError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

Scenario parse_scenario(const std::string &text, const std::string &source = "<scenario>");
Scenario load_scenario(const std::string &path);

struct NumericCheckRow
{
  std::string label;
  std::string expected;
  std::string computed;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Slope fits for every coset factor with a Known order at each s0, plus the
/// identity checks that apply to the scenario's character.
std::vector<NumericCheckRow> run_numcheck(const Scenario &sc);

/// Order fits for all factors of both cases at the listed points whose order
/// lgerms knows exactly.
std::vector<NumericCheckRow> order_agreement_grid(CharClass cls, const DirichletTable &tbl,
                                                  const std::vector<Rational> &points);

}  // namespace sp4eis
