#include <doctest.h>

#include "sp4eis/local_ops.hpp"
#include "sp4eis/normfactor.hpp"

using namespace sp4eis;

namespace {

const Rational half(1, 2);

LExpression L(Rational a, Rational b, int k) { return LExpression::L(AffineForm(a, b), k); }
LExpression E(Rational a, Rational b, int k) { return LExpression::eps(AffineForm(a, b), k); }

LExpression factor(Case cs, const std::string &w)
{
  const WeylGroup &g = sp4_weyl_group();
  return inverse_norm_factor(g, case_lambda(cs), g.parse(w));
}

}  // namespace

TEST_CASE("Heisenberg factors match the reference formulas")
{
  // L(s-1,chi) / (L(s+2,chi) eps(s+2,chi) eps(s,chi) eps(s+1,chi))
  const LExpression c1 = L(1, -1, 1) * (L(1, 2, 1) * E(1, 2, 1) * E(1, 0, 1) * E(1, 1, 1)).inverse();
  // L(s+1,chi) / (L(s+2,chi) eps(s+2,chi))
  const LExpression s = L(1, 1, 1) * (L(1, 2, 1) * E(1, 2, 1)).inverse();
  // L(s,chi) / (L(s+2,chi) eps(s+1,chi) eps(s+2,chi))
  const LExpression sc1 = L(1, 0, 1) * (L(1, 2, 1) * E(1, 1, 1) * E(1, 2, 1)).inverse();

  CHECK(canonicalize(factor(Case::Heisenberg, "c1")) == c1);
  CHECK(canonicalize(factor(Case::Heisenberg, "s")) == s);
  CHECK(canonicalize(factor(Case::Heisenberg, "sc1")) == sc1);
  CHECK(factor(Case::Heisenberg, "id").is_one());
}

TEST_CASE("Siegel factors match the reference formulas")
{
  const LExpression c2 = L(1, half, 1) * (L(1, 3 * half, 1) * E(1, 3 * half, 1)).inverse();
  const LExpression sc2 = L(1, half, 1) * L(2, 0, 2)
                          * (L(1, 3 * half, 1) * E(1, 3 * half, 1) * L(2, 1, 2) * E(2, 1, 2)).inverse();
  const LExpression c2sc2 = L(2, 0, 2) * L(1, -half, 1)
                            * (L(1, 3 * half, 1) * L(2, 1, 2) * E(1, 3 * half, 1) * E(1, half, 1) * E(2, 1, 2))
                                  .inverse();
  CHECK(canonicalize(factor(Case::Siegel, "c2")) == c2);
  CHECK(canonicalize(factor(Case::Siegel, "sc2")) == sc2);
  CHECK(canonicalize(factor(Case::Siegel, "c2sc2")) == c2sc2);
}

TEST_CASE("rendering and parsing")
{
  const std::string text = "L(s-1,chi) / (L(s+2,chi)*eps(s,chi)*eps(s+1,chi)*eps(s+2,chi))";
  CHECK(to_string(factor(Case::Heisenberg, "c1")) == text);
  CHECK(parse_lexpression(text) == factor(Case::Heisenberg, "c1"));
  for(Case cs : {Case::Heisenberg, Case::Siegel})
    for(const auto &w : case_coset_reps(cs))
      {
        const LExpression e = factor(cs, w.name());
        CHECK(parse_lexpression(to_string(e)) == e);
      }
  CHECK(to_string(LExpression(1)) == "1");
  CHECK(to_string(L(1, 0, 1).pow(2)) == "L(s,chi)^2");
  CHECK(to_string(L(2, 1, 2)) == "L(2s+1,chi^2)");
  CHECK_THROWS(parse_lexpression("L(s,chi"));
  CHECK_THROWS(parse_lexpression("M(s,chi)"));
}

TEST_CASE("algebra")
{
  const LExpression a = L(1, 0, 1), b = E(1, 1, 1);
  CHECK((a * a.inverse()).is_one());
  CHECK((a * b).symbol_count() == 2);
  CHECK((a * b).pow(-1) == (a * b).inverse());
  CHECK((a.pow(3) * a.pow(-3)).is_one());
}

TEST_CASE("canonicalize by class")
{
  // trivial: chi^2 -> 1 and eps factors disappear
  const LExpression e = canonicalize(factor(Case::Siegel, "sc2"), CharClass::Trivial);
  CHECK(to_string(e) == "L(s+1/2,1)*L(2s,1) / (L(s+3/2,1)*L(2s+1,1))");
  const LExpression q = canonicalize(factor(Case::Siegel, "sc2"), CharClass::QuadraticNontrivial);
  CHECK(to_string(q) == "L(2s,1)*L(s+1/2,chi) / (L(2s+1,1)*L(s+3/2,chi)*eps(s+3/2,chi))");
  CHECK(canonicalize(canonicalize(q, CharClass::QuadraticNontrivial), CharClass::QuadraticNontrivial) == q);
}

TEST_CASE("normalizing pairs")
{
  const WeylGroup &g = sp4_weyl_group();
  const auto pairs = normalizing_pairs(g, case_lambda(Case::Heisenberg), g.parse("c1"));
  CHECK(pairs.size() == 3);
  const auto p2 = normalizing_pairs(g, case_lambda(Case::Siegel), g.parse("sc2"));
  REQUIRE(p2.size() == 2);
  bool has_2s = false;
  for(const auto &p : p2)
    has_2s = has_2s || (p.power == 2 && p.exponent == AffineForm(2, 0));
  CHECK(has_2s);
}

TEST_CASE("functional equation gives eps(s)eps(s+1)=1 at s=0")
{
  // r(c1)^-1 after the functional equation: the limit at 0 is 1/(eps(0)eps(1)).
  const LExpression c1 = factor(Case::Heisenberg, "c1");
  const LExpression fe = apply_functional_equation(c1);
  CHECK(apply_functional_equation(fe) == fe);
  // L(-s,chi) L(1-s,chi) = eps(s+1,chi^-1) eps(s,chi^-1) L(s+1,chi^-1) L(s,chi^-1)
  const LExpression lhs = L(-1, 0, 1) * L(-1, 1, 1);  // L(-s) L(1-s)
  const LExpression rhs = L(1, 1, -1) * L(1, 0, -1);  // L(1+s,chi^-1) L(s,chi^-1)
  const LExpression ratio = apply_functional_equation(lhs * rhs.inverse());
  CHECK(ratio == E(1, 1, -1) * E(1, 0, -1));
  const LExpression q = apply_functional_equation(lhs * rhs.inverse(), CharClass::QuadraticNontrivial);
  CHECK(q == E(1, 1, 1) * E(1, 0, 1));
}
