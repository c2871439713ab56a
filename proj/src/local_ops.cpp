#include "sp4eis/local_ops.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string_view>

#include <boost/algorithm/string.hpp>

namespace sp4eis {

namespace detail {
extern const std::string_view kBuiltinRules;
}

std::string to_string(Case c) { return c == Case::Heisenberg ? "heisenberg" : "siegel"; }

Case parse_case(const std::string &text)
{
  const auto t = boost::algorithm::to_lower_copy(text);
  if(t == "heisenberg" || t == "heis" || t == "h")
    return Case::Heisenberg;
  if(t == "siegel" || t == "s")
    return Case::Siegel;
  throw std::invalid_argument("unknown case '" + text + "'");
}

std::string to_string(PlaceKind p) { return p == PlaceKind::NonArch ? "nonarch" : "arch"; }

PlaceKind parse_place_kind(const std::string &text)
{
  if(text == "nonarch" || text == "finite")
    return PlaceKind::NonArch;
  if(text == "arch" || text == "infinite" || text == "real")
    return PlaceKind::Arch;
  throw std::invalid_argument("unknown place kind '" + text + "'");
}

std::string to_string(Action a)
{
  switch(a)
    {
    case Action::Plus: return "+1";
    case Action::Minus: return "-1";
    case Action::Iso: return "iso";
    case Action::Kernel: return "kernel";
    }
  return "?";
}

Action parse_action(const std::string &text)
{
  if(text == "+1")
    return Action::Plus;
  if(text == "-1")
    return Action::Minus;
  if(text == "iso")
    return Action::Iso;
  if(text == "kernel")
    return Action::Kernel;
  throw std::invalid_argument("unknown action '" + text + "'");
}

const WeylGroup &sp4_weyl_group()
{
  static const WeylGroup g(2);
  return g;
}

TorusCharacter case_lambda(Case c)
{
  return c == Case::Heisenberg ? heisenberg_lambda() : siegel_lambda();
}

const std::vector<WeylElement> &case_coset_reps(Case c)
{
  static const std::vector<WeylElement> heis =
    sp4_weyl_group().coset_reps({RootVector({Rational(0), Rational(2)})});
  static const std::vector<WeylElement> siegel =
    sp4_weyl_group().coset_reps({RootVector({Rational(1), Rational(-1)})});
  return c == Case::Heisenberg ? heis : siegel;
}

// ---------------------------------------------------------------- predicates

namespace {

std::string trim(const std::string &s) { return boost::algorithm::trim_copy(s); }

std::vector<std::string> split(const std::string &s, char sep)
{
  std::vector<std::string> out;
  boost::algorithm::split(out, s, [sep](char c) { return c == sep; });
  return out;
}

/// "s", "s+1/2", "s-3" evaluated at s0.
Rational eval_shift(const std::string &expr, const Rational &s0)
{
  if(expr.empty() || expr[0] != 's')
    throw std::invalid_argument("bad s0 expression '" + expr + "'");
  if(expr.size() == 1)
    return s0;
  return s0 + parse_rational(expr.substr(1));
}

bool clause_holds(const std::string &clause, const Rational &s0)
{
  for(const char *fn : {"int(", "even(", "odd("})
    {
      const std::string f = fn;
      if(clause.rfind(f, 0) == 0)
        {
          if(clause.back() != ')')
            throw std::invalid_argument("bad s0 clause '" + clause + "'");
          const Rational x = eval_shift(clause.substr(f.size(), clause.size() - f.size() - 1), s0);
          if(!is_integer(x))
            return false;
          if(f == "int(")
            return true;
          const bool even = x.numerator() % 2 == 0;
          return f == "even(" ? even : !even;
        }
    }
  if(clause.size() < 3 || clause[0] != 's')
    throw std::invalid_argument("bad s0 clause '" + clause + "'");
  for(const char *op : {"<=", ">=", "=", "<", ">"})
    {
      const std::string o = op;
      if(clause.compare(1, o.size(), o) == 0)
        {
          const Rational q = parse_rational(clause.substr(1 + o.size()));
          if(o == "<=")
            return s0 <= q;
          if(o == ">=")
            return s0 >= q;
          if(o == "=")
            return s0 == q;
          if(o == "<")
            return s0 < q;
          return s0 > q;
        }
    }
  throw std::invalid_argument("bad s0 clause '" + clause + "'");
}

}  // namespace

bool s0_predicate_holds(const std::string &predicate, const Rational &s0)
{
  const std::string p = trim(predicate);
  if(p == "*")
    return true;
  for(const auto &c : split(p, '&'))
    if(!clause_holds(trim(c), s0))
      return false;
  return true;
}

bool sl2_reducible(PlaceKind place, CharClass local_char, const Rational &x)
{
  const bool odd = is_integer(x) && x.numerator() % 2 != 0;
  const bool even = is_integer(x) && x.numerator() % 2 == 0;
  if(place == PlaceKind::NonArch)
    return (local_char == CharClass::QuadraticNontrivial && x == 0)
           || (local_char == CharClass::Trivial && (x == 1 || x == -1));
  if(local_char == CharClass::Trivial)
    return odd;
  if(local_char == CharClass::Sgn)
    return even;
  return false;
}

bool gl2_reducible(PlaceKind place, CharClass local_char, const Rational &x)
{
  const bool odd = is_integer(x) && x.numerator() % 2 != 0;
  const bool even_nonzero = is_integer(x) && x.numerator() % 2 == 0 && !(x == 0);
  if(place == PlaceKind::NonArch)
    return local_char == CharClass::Trivial && (x == 1 || x == -1);
  if(local_char == CharClass::Trivial)
    return odd;
  if(local_char == CharClass::Sgn)
    return even_nonzero;
  return false;
}

// --------------------------------------------------------------------- rows

bool RuleRow::matches_key(const LocalRuleKey &key) const
{
  if(key.cs != cs)
    return false;
  if(place && *place != key.place)
    return false;
  if(std::find(chars.begin(), chars.end(), key.local_char) == chars.end())
    return false;
  if(std::find(ws.begin(), ws.end(), key.w) == ws.end())
    return false;
  return s0_predicate_holds(s0_text, key.s0);
}

bool RuleRow::matches_choice(const SubquotientLabel &choice) const
{
  return choices.empty() || std::find(choices.begin(), choices.end(), choice.text) != choices.end();
}

std::string RuleRow::choice_text() const
{
  return choices.empty() ? "*" : boost::algorithm::join(choices, "|");
}

RuleTable RuleTable::parse(const std::string &text, const std::string &source)
{
  RuleTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const auto &group = sp4_weyl_group();
  while(std::getline(in, line))
    {
      ++lineno;
      if(!line.empty() && line.back() == '\r')
        line.pop_back();
      if(trim(line).empty() || trim(line)[0] == '#')
        continue;
      const auto f = split(line, '\t');
      auto fail = [&](const std::string &why) {
        throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": " + why);
      };
      if(f.size() != 11)
        fail("expected 11 tab-separated fields, got " + std::to_string(f.size()));
      if(f[0] == "case")
        continue;
      try
        {
          RuleRow row;
          row.line = lineno;
          row.cs = parse_case(f[0]);
          for(const auto &w : split(f[1], '|'))
            {
              const WeylElement e = group.parse(trim(w));
              const auto &reps = case_coset_reps(row.cs);
              if(std::find(reps.begin(), reps.end(), e) == reps.end())
                fail("'" + w + "' is not a coset representative for " + f[0]);
              row.ws.push_back(e);
            }
          if(f[2] != "*")
            row.place = parse_place_kind(f[2]);
          for(const auto &c : split(f[3], '|'))
            row.chars.push_back(parse_char_class(trim(c)));
          row.s0_text = trim(f[4]);
          s0_predicate_holds(row.s0_text, Rational(0));
          if(f[5] != "*")
            for(const auto &c : split(f[5], '|'))
              row.choices.push_back(trim(c));
          if(f[6] != "0" && f[6] != "1")
            fail("pole must be 0 or 1");
          row.pole = f[6] == "1" ? 1 : 0;
          row.action = parse_action(f[7]);
          row.image = f[8];
          row.structure = f[9];
          row.citation = f[10];
          if(row.citation.empty())
            fail("row without citation");
          table.rows_.push_back(std::move(row));
        }
      catch(const std::invalid_argument &e)
        {
          const std::string what = e.what();
          if(what.rfind(source + ":", 0) == 0)
            throw;
          fail(what);
        }
    }
  return table;
}

RuleTable RuleTable::load(const std::string &path)
{
  std::ifstream in(path);
  if(!in)
    throw std::runtime_error("cannot open rule table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const RuleTable &RuleTable::builtin()
{
  static const RuleTable table = parse(std::string(detail::kBuiltinRules), "local_rules.tsv");
  return table;
}

// ---------------------------------------------------------------- lookups

void RuleTable::validate(const LocalRuleKey &key) const
{
  if(key.local_char == CharClass::Sgn && key.place == PlaceKind::NonArch)
    throw UncoveredKeyError("uncovered key: sgn at a non-archimedean place");
  const auto &reps = case_coset_reps(key.cs);
  if(std::find(reps.begin(), reps.end(), key.w) == reps.end())
    throw UncoveredKeyError("uncovered key: " + key.w.name() + " is not a coset representative for "
                            + to_string(key.cs));
}

std::vector<const RuleRow *> RuleTable::rows_for(const LocalRuleKey &key) const
{
  validate(key);
  std::vector<const RuleRow *> out;
  for(const auto &row : rows_)
    if(row.matches_key(key))
      out.push_back(&row);
  return out;
}

LocalRuleResult RuleTable::local_pole(const LocalRuleKey &key) const
{
  LocalRuleResult res;
  for(const RuleRow *row : rows_for(key))
    {
      const SubquotientLabel label{row->choice_text()};
      res.notes.push_back({label, row->action, row->pole});
      if(row->pole > res.pole_order)
        {
          res.pole_order = row->pole;
          res.carrier = label;
        }
    }
  return res;
}

LocalOutcome RuleTable::resolve(const LocalRuleKey &key, const SubquotientLabel &choice) const
{
  const auto rows = rows_for(key);
  if(rows.empty())
    return LocalOutcome{0, Action::Iso, "-", "-", ""};
  for(const RuleRow *row : rows)
    if(row->matches_choice(choice))
      return LocalOutcome{row->pole, row->action, row->image, row->structure, row->citation};
  throw UnknownChoiceError("unknown choice '" + choice.text + "' for " + to_string(key.cs) + " w="
                           + key.w.name() + " at s0=" + to_string(key.s0));
}

Action RuleTable::sign_action(const LocalRuleKey &key, const SubquotientLabel &choice) const
{
  return resolve(key, choice).action;
}

}  // namespace sp4eis
