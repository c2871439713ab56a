#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sp4eis/report_json.hpp"

using namespace sp4eis;

namespace {

struct Output
{
  std::string path;
  bool json = false;

  void write(const std::string &text) const
  {
    if(path.empty() || path == "-")
      {
        std::cout << text;
        return;
      }
    std::ofstream out(path, std::ios::binary);
    if(!out)
      throw std::runtime_error("cannot write '" + path + "'");
    out << text;
  }
};

RuleTable load_rules(const std::string &path)
{
  return path.empty() ? RuleTable::builtin() : RuleTable::load(path);
}

int cmd_weyl(const Output &o)
{
  const Json j = weyl_json();
  if(o.json)
    {
      o.write(dump(envelope("weyl", j, true)));
      return 0;
    }
  std::ostringstream os;
  for(const char *key : {"heisenberg", "siegel", "group"})
    {
      os << key << ":\n";
      for(const auto &row : j[key])
        {
          os << "  " << row["w"].get<std::string>() << " (" << row["alias"].get<std::string>() << ")"
             << "  length " << row["length"].get<int>() << "  N(w) = {";
          bool first = true;
          for(const auto &a : row["negative_set"])
            {
              os << (first ? "" : ", ") << a.get<std::string>();
              first = false;
            }
          os << "}\n";
        }
    }
  o.write(os.str());
  return 0;
}

int cmd_normfactor(const Output &o, const std::string &cs_text, const std::string &w_text)
{
  const Case cs = parse_case(cs_text);
  const WeylElement w = sp4_weyl_group().parse(w_text);
  const auto &reps = case_coset_reps(cs);
  if(std::find(reps.begin(), reps.end(), w) == reps.end())
    throw std::invalid_argument(w_text + " is not a coset representative for " + to_string(cs));
  const Json j = normfactor_json(cs, sp4_weyl_group().canonical(w));
  if(o.json)
    o.write(dump(envelope("normfactor", j, true)));
  else
    o.write("r(Lambda_s," + j["w"].get<std::string>() + ")^-1 = " + j["factor"].get<std::string>() + "\n");
  return 0;
}

Scenario scenario_from_flags(const std::string &path, const std::string &cs, const std::string &chr,
                             const std::string &s0, const std::string &check)
{
  if(!path.empty())
    return load_scenario(path);
  if(cs.empty() || chr.empty() || s0.empty())
    throw std::invalid_argument("give --scenario, or all of --case, --char and --s0");
  std::ostringstream text;
  text << "case = " << cs << "\nchar = " << chr << "\ns0 = " << s0 << "\nchecks = " << check << "\n";
  return parse_scenario(text.str(), "<flags>");
}

int cmd_poles(const Output &o, const Scenario &sc, const RuleTable &rules)
{
  Json reports = Json::array();
  std::ostringstream os;
  bool pass = true;
  for(std::size_t i = 0; i < sc.s0.size(); ++i)
    {
      const ConstantTermReport rep = eisenstein_order(sc.cs, sc.profile, sc.s0[i], rules);
      Json rj = to_json(rep);
      os << to_string(sc.cs) << " chi=" << to_string(sc.profile.global_char) << " s0=" << to_string(sc.s0[i])
         << ": pole " << to_string(rep.pole) << (rep.vanishing ? ", constant term vanishes" : "") << "\n";
      for(const auto &t : rep.terms)
        os << "  " << t.w.name() << ": " << to_string(t.expr) << "  order " << to_string(t.term_order)
           << "  weight " << t.weight << "\n";
      for(const auto &im : rep.image)
        os << "  image[" << im.place << "] = " << im.label << " (" << im.structure << ")\n";
      if(!sc.expect_pole.empty())
        {
          const int want = sc.expect_pole.size() == 1 ? sc.expect_pole[0] : sc.expect_pole[i];
          const bool ok = rep.pole.value && rep.pole.exact && *rep.pole.value == want;
          rj["expect_pole"] = want;
          rj["expect_pole_pass"] = ok;
          os << "  expected pole " << want << ": " << (ok ? "PASS" : "FAIL") << "\n";
          pass = pass && ok;
        }
      if(!sc.expect_vanishing.empty())
        {
          const bool want = sc.expect_vanishing.size() == 1 ? sc.expect_vanishing[0] : sc.expect_vanishing[i];
          const bool ok = rep.vanishing == want;
          rj["expect_vanishing"] = want;
          rj["expect_vanishing_pass"] = ok;
          os << "  expected vanishing " << (want ? "yes" : "no") << ": " << (ok ? "PASS" : "FAIL") << "\n";
          pass = pass && ok;
        }
      reports.push_back(rj);
    }
  Json payload{{"scenario", sc.name}, {"reports", reports}};
  o.write(o.json ? dump(envelope("poles", payload, pass)) : os.str());
  return pass ? 0 : 1;
}

int cmd_verify(const Output &o, const std::vector<std::string> &ids, const RuleTable &rules)
{
  std::vector<TheoremId> which;
  for(const auto &id : ids)
    {
      if(id == "all")
        which.insert(which.end(), {TheoremId::HPlus, TheoremId::HMinus, TheoremId::SPlus, TheoremId::SMinus});
      else
        which.push_back(parse_theorem_id(id));
    }
  Json theorems = Json::array();
  std::ostringstream os;
  bool pass = true;
  for(TheoremId id : which)
    {
      const auto rows = verify_theorem(id, rules);
      const bool ok = all_pass(rows);
      pass = pass && ok;
      Json rj = Json::array();
      int failed = 0;
      for(const auto &r : rows)
        {
          rj.push_back(to_json(r));
          if(!r.pass)
            {
              ++failed;
              os << "FAIL " << to_string(id) << r.clause << "  " << r.description << "\n"
                 << "     expected " << r.expected << "\n     computed " << r.computed << "\n";
              if(!r.note.empty())
                os << "     note: " << r.note << "\n";
            }
        }
      os << to_string(id) << ": " << rows.size() - failed << "/" << rows.size() << " rows pass\n";
      theorems.push_back(Json{{"theorem", to_string(id)}, {"pass", ok}, {"rows", rj}});
    }
  o.write(o.json ? dump(envelope("verify", Json{{"theorems", theorems}}, pass)) : os.str());
  return pass ? 0 : 1;
}

int cmd_numcheck(const Output &o, const Scenario &sc)
{
  const auto rows = run_numcheck(sc);
  bool pass = !rows.empty();
  Json rj = Json::array();
  std::ostringstream os;
  for(const auto &r : rows)
    {
      pass = pass && r.pass;
      rj.push_back(to_json(r));
      os << (r.pass ? "PASS " : "FAIL ") << r.label << ": expected " << r.expected << ", computed " << r.computed
         << "\n";
    }
  Json payload{{"scenario", sc.name}, {"modulus", sc.effective_modulus()}, {"checks", rj}};
  o.write(o.json ? dump(envelope("numcheck", payload, pass)) : os.str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Poles and images of degenerate Eisenstein series on Sp(4)"};
  app.require_subcommand(1);
  Output out;
  std::string rules_path;
  app.add_flag("--json", out.json, "Machine-readable output");
  app.add_option("--out,-o", out.path, "Write output to a file");
  app.add_option("--rules", rules_path, "Local rule table (default: built in)");

  auto *weyl = app.add_subcommand("weyl", "Coset representatives, lengths, negative sets");

  std::string cs, w;
  auto *nf = app.add_subcommand("normfactor", "Inverse normalizing factor r(Lambda_s,w)^-1");
  nf->add_option("--case", cs, "heisenberg | siegel")->required();
  nf->add_option("--w", w, "Coset representative, e.g. sc2s or c1")->required();

  std::string scenario, chr, s0;
  auto *poles = app.add_subcommand("poles", "Constant-term report for a scenario");
  poles->add_option("--scenario", scenario, "Scenario file");
  poles->add_option("--case", cs, "heisenberg | siegel");
  poles->add_option("--char", chr, "trivial | quadratic | other");
  poles->add_option("--s0", s0, "Comma-separated rational points");

  std::vector<std::string> theorems;
  auto *verify = app.add_subcommand("verify", "Clause tables for H+, H-, S+, S- (or all)");
  verify->add_option("theorem", theorems, "H+ H- S+ S- all")->required();

  auto *num = app.add_subcommand("numcheck", "Numeric oracle for a scenario");
  num->add_option("--scenario", scenario, "Scenario file");
  num->add_option("--case", cs, "heisenberg | siegel");
  num->add_option("--char", chr, "trivial | quadratic | other");
  num->add_option("--s0", s0, "Comma-separated rational points");

  for(auto *sub : {weyl, nf, poles, verify, num})
    {
      sub->add_flag("--json", out.json, "Machine-readable output");
      sub->add_option("--out,-o", out.path, "Write output to a file");
      sub->add_option("--rules", rules_path, "Local rule table (default: built in)");
    }

  try
    {
      app.parse(argc, argv);
    }
  catch(const CLI::ParseError &e)
    {
      return app.exit(e) == 0 ? 0 : 2;
    }
  try
    {
      if(*weyl)
        return cmd_weyl(out);
      if(*nf)
        return cmd_normfactor(out, cs, w);
      if(*poles)
        return cmd_poles(out, scenario_from_flags(scenario, cs, chr, s0, "poles"), load_rules(rules_path));
      if(*verify)
        return cmd_verify(out, theorems, load_rules(rules_path));
      if(*num)
        return cmd_numcheck(out, scenario_from_flags(scenario, cs, chr, s0, "numcheck"));
    }
  catch(const std::exception &e)
    {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  return 2;
}
