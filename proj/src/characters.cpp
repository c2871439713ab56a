#include "sp4eis/characters.hpp"

#include <sstream>
#include <stdexcept>

namespace sp4eis {

std::string to_string(CharClass c)
{
  switch(c)
    {
    case CharClass::Trivial: return "trivial";
    case CharClass::QuadraticNontrivial: return "quadratic";
    case CharClass::Other: return "other";
    case CharClass::Sgn: return "sgn";
    }
  return "?";
}

CharClass parse_char_class(const std::string &text)
{
  if(text == "trivial" || text == "1")
    return CharClass::Trivial;
  if(text == "quadratic")
    return CharClass::QuadraticNontrivial;
  if(text == "other")
    return CharClass::Other;
  if(text == "sgn")
    return CharClass::Sgn;
  throw std::invalid_argument("unknown character class '" + text + "'");
}

int reduce_power(CharClass c, int power)
{
  switch(c)
    {
    case CharClass::Trivial: return 0;
    case CharClass::QuadraticNontrivial:
    case CharClass::Sgn: return ((power % 2) + 2) % 2;
    case CharClass::Other: return power;
    }
  return power;
}

bool is_trivial_power(CharClass c, int power) { return reduce_power(c, power) == 0; }

std::string to_string(const AffineForm &f)
{
  std::ostringstream os;
  if(f.a != 0)
    {
      if(f.a == -1)
        os << "-";
      else if(f.a != 1)
        os << to_string(f.a);
      os << "s";
      if(f.b > 0)
        os << "+" << to_string(f.b);
      else if(f.b < 0)
        os << to_string(f.b);
      return os.str();
    }
  return to_string(f.b);
}

std::string to_string(const TorusCharacter &t)
{
  std::ostringstream os;
  for(int i = 0; i < t.rank(); ++i)
    {
      if(i)
        os << " (x) ";
      const auto &c = t.coords[i];
      if(c.power == 1)
        os << "chi ";
      else if(c.power != 0)
        os << "chi^" << c.power << " ";
      os << "nu^(" << to_string(c.exponent) << ")";
    }
  return os.str();
}

TorusCharacter heisenberg_lambda()
{
  return TorusCharacter{{{1, AffineForm(1, 0)}, {0, AffineForm(0, -1)}}};
}

TorusCharacter siegel_lambda()
{
  return TorusCharacter{{{1, AffineForm(1, Rational(-1, 2))},
                         {1, AffineForm(1, Rational(1, 2))}}};
}

ComposedCharacter compose_coroot(const TorusCharacter &lambda, const RootVector &coroot)
{
  if(coroot.rank() != lambda.rank())
    throw std::invalid_argument("rank mismatch in compose_coroot");
  ComposedCharacter out;
  for(int i = 0; i < lambda.rank(); ++i)
    {
      const Rational &c = coroot.coords[i];
      if(!is_integer(c))
        throw std::invalid_argument("coroot must be integral");
      const auto ci = static_cast<int>(c.numerator());
      out.power += ci * lambda.coords[i].power;
      out.exponent = out.exponent + lambda.coords[i].exponent * c;
    }
  return out;
}

TorusCharacter weyl_act(const WeylElement &w, const TorusCharacter &lambda)
{
  if(w.rank() != lambda.rank())
    throw std::invalid_argument("rank mismatch in weyl_act");
  TorusCharacter out{std::vector<CharCoordinate>(lambda.rank())};
  for(int i = 0; i < lambda.rank(); ++i)
    {
      const auto &c = lambda.coords[i];
      const int sign = w.signs()[i];
      out.coords[w.perm()[i]] = {sign * c.power, c.exponent * Rational(sign)};
    }
  return out;
}

bool equal_at(const TorusCharacter &x, const TorusCharacter &y, const Rational &s0,
              CharClass cls)
{
  if(x.rank() != y.rank())
    return false;
  for(int i = 0; i < x.rank(); ++i)
    {
      if(x.coords[i].exponent.at(s0) != y.coords[i].exponent.at(s0))
        return false;
      if(reduce_power(cls, x.coords[i].power) != reduce_power(cls, y.coords[i].power))
        return false;
    }
  return true;
}

}  // namespace sp4eis
