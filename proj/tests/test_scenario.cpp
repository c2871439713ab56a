#include <doctest.h>

#include <filesystem>

#include "sp4eis/scenario.hpp"

using namespace sp4eis;

TEST_CASE("minimal scenario")
{
  const Scenario sc = parse_scenario("case = siegel\nchar = trivial\ns0 = 1/2, -3/2\n");
  CHECK(sc.cs == Case::Siegel);
  CHECK(sc.s0 == std::vector<Rational>{Rational(1, 2), Rational(-3, 2)});
  CHECK(sc.checks == std::vector<std::string>{"poles"});
  REQUIRE(sc.profile.places.size() == 1);
  CHECK(sc.profile.places[0].kind == PlaceKind::Arch);
  CHECK(sc.effective_modulus() == 1);
}

TEST_CASE("place sections")
{
  const Scenario sc = parse_scenario("case = H  # comment\n"
                                     "char = quadratic\n"
                                     "modulus = 4\n"
                                     "s0 = 0\n"
                                     "[place inf]\nkind = arch\nchar = sgn\nchoice = L(nu^1;T2)\n"
                                     "[place p3]\nchar = quadratic\nchoice = L(nu^1;T2)\n"
                                     "[place p5]\nchar = quadratic\n");
  REQUIRE(sc.profile.places.size() == 3);
  CHECK(sc.profile.places[0].local_char == CharClass::Sgn);
  CHECK(sc.profile.places[1].choice.text == "L(nu^1;T2)");
  CHECK(sc.profile.places[2].choice.is_spherical());
  CHECK(sc.profile.finite_count() == 2);
  CHECK(sc.table().modulus == 4);
}

TEST_CASE("errors carry a location")
{
  auto msg = [](const std::string &text) {
    try
      {
        parse_scenario(text, "x.scn");
      }
    catch(const ScenarioError &e)
      {
        return std::string(e.what());
      }
    return std::string("no error");
  };
  CHECK(msg("case = siegel\ncase = siegel\nchar = 1\ns0 = 0\n").find("x.scn:2") == 0);
  CHECK(msg("case = siegel\nchar = 1\ns0 = 1/0\n").find("x.scn:3") == 0);
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0\nbogus = 1\n").find("x.scn:4") == 0);
  CHECK(msg("case = siegel\nchar = 1\n").find("missing 's0'") != std::string::npos);
  CHECK(msg("char = 1\ns0 = 0\n").find("missing 'case'") != std::string::npos);
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0\n[plce p]\n") != "no error");
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0\nchecks = poles, guess\n") != "no error");
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0, 1\nexpect.pole = 1, 2, 3\n") != "no error");
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0\n[place p]\nchar = sgn\n") != "no error");
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0\nmodulus = 7\n") != "no error");
  CHECK(msg("case = siegel\nchar = 1\ns0 = 0\nexpect.vanishing = maybe\n") != "no error");
  CHECK_THROWS_AS(load_scenario("/nonexistent.scn"), ScenarioError);
}

TEST_CASE("fixtures parse and their expectations hold")
{
  namespace fs = std::filesystem;
  int n = 0;
  for(const auto &entry : fs::directory_iterator(fs::path(SP4EIS_SOURCE_DIR) / "scenarios"))
    {
      if(entry.path().extension() != ".scn")
        continue;
      ++n;
      INFO(entry.path().string());
      const Scenario sc = load_scenario(entry.path().string());
      for(std::size_t i = 0; i < sc.s0.size(); ++i)
        {
          const auto rep = eisenstein_order(sc.cs, sc.profile, sc.s0[i]);
          if(!sc.expect_pole.empty())
            CHECK(rep.pole.value == (sc.expect_pole.size() == 1 ? sc.expect_pole[0] : sc.expect_pole[i]));
          if(!sc.expect_vanishing.empty())
            CHECK(rep.vanishing
                  == (sc.expect_vanishing.size() == 1 ? sc.expect_vanishing[0] : sc.expect_vanishing[i]));
        }
    }
  CHECK(n >= 6);
}

TEST_CASE("numcheck rows")
{
  const Scenario tr = parse_scenario("case = heisenberg\nchar = trivial\ns0 = 0, 1, 2\nchecks = numcheck\n");
  const auto rows = run_numcheck(tr);
  CHECK(rows.size() >= 12);
  for(const auto &r : rows)
    {
      INFO(r.label, ": ", r.computed);
      CHECK(r.pass);
    }
  const Scenario q = parse_scenario("case = siegel\nchar = quadratic\ns0 = 1/2\n");
  bool saw_eps = false;
  for(const auto &r : run_numcheck(q))
    {
      CHECK(r.pass);
      saw_eps = saw_eps || r.label.find("eps(0,chi) eps(1,chi)") != std::string::npos;
    }
  CHECK(saw_eps);
}

TEST_CASE("order agreement grid")
{
  std::vector<Rational> pts;
  for(int k = -6; k <= 6; ++k)
    pts.push_back(Rational(k, 2));
  const auto rows = order_agreement_grid(CharClass::Trivial, DirichletTable::trivial(), pts);
  CHECK(rows.size() >= 30);
  for(const auto &r : rows)
    {
      INFO(r.label, ": ", r.computed);
      CHECK(r.pass);
    }
}
