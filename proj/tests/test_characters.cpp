#include <doctest.h>

#include "sp4eis/characters.hpp"
#include "sp4eis/local_ops.hpp"

using namespace sp4eis;

TEST_CASE("character classes")
{
  CHECK(parse_char_class("1") == CharClass::Trivial);
  CHECK(parse_char_class("quadratic") == CharClass::QuadraticNontrivial);
  CHECK_THROWS(parse_char_class("cubic"));
  CHECK(reduce_power(CharClass::Trivial, 3) == 0);
  CHECK(reduce_power(CharClass::QuadraticNontrivial, -3) == 1);
  CHECK(reduce_power(CharClass::Other, -2) == -2);
  CHECK(is_trivial_power(CharClass::QuadraticNontrivial, 2));
  CHECK(!is_trivial_power(CharClass::Other, 2));
}

TEST_CASE("affine forms render")
{
  CHECK(to_string(AffineForm(1, -1)) == "s-1");
  CHECK(to_string(AffineForm(2, 0)) == "2s");
  CHECK(to_string(AffineForm(1, Rational(1, 2))) == "s+1/2");
  CHECK(to_string(AffineForm(-1, 0)) == "-s");
  CHECK(to_string(AffineForm(0, 0)) == "0");
  CHECK(AffineForm(2, 1).at(Rational(1, 2)) == 2);
}

TEST_CASE("lambda and coroots")
{
  const TorusCharacter h = heisenberg_lambda(), sg = siegel_lambda();
  REQUIRE(h.rank() == 2);
  CHECK(h.coords[0].power == 1);
  CHECK(h.coords[0].exponent == AffineForm(1, 0));
  CHECK(h.coords[1].power == 0);
  CHECK(h.coords[1].exponent == AffineForm(0, -1));
  CHECK(sg.coords[0].exponent == AffineForm(1, Rational(-1, 2)));
  CHECK(sg.coords[1].exponent == AffineForm(1, Rational(1, 2)));

  // Lambda o (e1+e2)^vee for Heisenberg: chi nu^(s-1)
  const auto c = compose_coroot(h, RootVector({Rational(1), Rational(1)}));
  CHECK(c.power == 1);
  CHECK(c.exponent == AffineForm(1, -1));
  // Siegel, (2e1)^vee = e1: chi nu^(s-1/2)
  const auto d = compose_coroot(sg, RootVector({Rational(1), Rational(0)}));
  CHECK(d.exponent == AffineForm(1, Rational(-1, 2)));
}

TEST_CASE("weyl action on characters")
{
  const WeylGroup &g = sp4_weyl_group();
  const TorusCharacter h = heisenberg_lambda();
  const TorusCharacter t = weyl_act(g.parse("s"), h);
  CHECK(t.coords[1].exponent == AffineForm(1, 0));
  CHECK(t.coords[0].exponent == AffineForm(0, -1));
  const TorusCharacter u = weyl_act(g.parse("c2s"), h);
  CHECK(u.coords[1].power == -1);
  CHECK(u.coords[1].exponent == AffineForm(-1, 0));
  // at s=0 with chi=1, s and c2s share a target
  CHECK(equal_at(t, u, 0, CharClass::Trivial));
  CHECK(!equal_at(t, u, 1, CharClass::Trivial));
  CHECK(!equal_at(t, u, 0, CharClass::Other));
}
