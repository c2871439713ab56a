#include "sp4eis/normfactor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sp4eis {

bool LSymbol::operator<(const LSymbol &o) const
{
  if(kind != o.kind)
    return kind < o.kind;
  if(power != o.power)
    return power < o.power;
  return arg < o.arg;
}

std::string character_name(int power)
{
  if(power == 0)
    return "1";
  if(power == 1)
    return "chi";
  return "chi^" + std::to_string(power);
}

std::string to_string(const LSymbol &sym)
{
  return std::string(sym.kind == SymbolKind::L ? "L(" : "eps(") + to_string(sym.arg) + ","
         + character_name(sym.power) + ")";
}

LExpression LExpression::symbol(const LSymbol &sym, int exponent)
{
  LExpression e;
  e.multiply_symbol(sym, exponent);
  return e;
}

void LExpression::multiply_symbol(const LSymbol &sym, int exponent)
{
  if(exponent == 0)
    return;
  auto [it, inserted] = factors_.try_emplace(sym, 0);
  it->second += exponent;
  if(it->second == 0)
    factors_.erase(it);
}

int LExpression::symbol_count() const
{
  int n = 0;
  for(const auto &[sym, k] : factors_)
    n += k < 0 ? -k : k;
  return n;
}

LExpression LExpression::operator*(const LExpression &o) const
{
  LExpression r = *this;
  r.scalar_ *= o.scalar_;
  for(const auto &[sym, k] : o.factors_)
    r.multiply_symbol(sym, k);
  return r;
}

LExpression LExpression::inverse() const
{
  if(scalar_ == 0)
    throw std::domain_error("inverse of zero expression");
  LExpression r(Rational(1) / scalar_);
  for(const auto &[sym, k] : factors_)
    r.multiply_symbol(sym, -k);
  return r;
}

LExpression LExpression::pow(int n) const
{
  if(n < 0)
    return inverse().pow(-n);
  LExpression r;
  for(int i = 0; i < n; ++i)
    r = r * *this;
  return r;
}

std::string to_string(const LExpression &e)
{
  std::vector<std::string> num, den;
  for(const auto &[sym, k] : e.factors())
    {
      const int m = k < 0 ? -k : k;
      std::string item = to_string(sym);
      if(m != 1)
        item += "^" + std::to_string(m);
      (k > 0 ? num : den).push_back(item);
    }
  auto join = [](const std::vector<std::string> &items) {
    std::string out;
    for(std::size_t i = 0; i < items.size(); ++i)
      out += (i ? "*" : "") + items[i];
    return out;
  };
  std::string out;
  if(e.scalar() != 1)
    out = to_string(e.scalar()) + (num.empty() ? "" : "*");
  if(num.empty() && e.scalar() == 1)
    out = "1";
  out += join(num);
  if(!den.empty())
    out += den.size() == 1 ? " / " + den.front() : " / (" + join(den) + ")";
  return out;
}

// ------------------------------------------------------------------- parsing

namespace {

class ExpressionParser
{
public:
  explicit ExpressionParser(std::string text)
  {
    for(char c : text)
      if(!std::isspace(static_cast<unsigned char>(c)))
        text_.push_back(c);
  }

  LExpression parse()
  {
    LExpression e = product();
    if(accept('/'))
      {
        LExpression den;
        if(accept('('))
          {
            den = product();
            expect(')');
          }
        else
          den = factor_or_scalar();
        e = e * den.inverse();
      }
    if(pos_ != text_.size())
      fail("trailing input");
    return e;
  }

private:
  LExpression product()
  {
    LExpression e = factor_or_scalar();
    while(accept('*'))
      e = e * factor_or_scalar();
    return e;
  }

  LExpression factor_or_scalar()
  {
    if(starts_with("L("))
      return symbol(SymbolKind::L, 2);
    if(starts_with("eps("))
      return symbol(SymbolKind::Epsilon, 4);
    return LExpression(rational());
  }

  LExpression symbol(SymbolKind kind, std::size_t skip)
  {
    pos_ += skip;
    const auto comma = text_.find(',', pos_);
    if(comma == std::string::npos)
      fail("missing ','");
    const AffineForm arg = affine(text_.substr(pos_, comma - pos_));
    pos_ = comma + 1;
    int power = 0;
    if(starts_with("chi^"))
      {
        pos_ += 4;
        power = integer();
      }
    else if(starts_with("chi"))
      {
        pos_ += 3;
        power = 1;
      }
    else if(accept('1'))
      power = 0;
    else
      fail("bad character");
    expect(')');
    int exponent = 1;
    if(accept('^'))
      exponent = integer();
    return LExpression::symbol({kind, arg, power}, exponent);
  }

  static AffineForm affine(const std::string &t)
  {
    const auto spos = t.find('s');
    if(spos == std::string::npos)
      return AffineForm::constant(parse_rational(t));
    const std::string coeff = t.substr(0, spos);
    Rational a = coeff.empty() || coeff == "+" ? Rational(1)
                 : coeff == "-"                ? Rational(-1)
                                               : parse_rational(coeff);
    const std::string rest = t.substr(spos + 1);
    return {a, rest.empty() ? Rational(0) : parse_rational(rest)};
  }

  Rational rational()
  {
    const auto start = pos_;
    if(pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    while(pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      {
        // A '/' followed by '(' or a symbol starts the denominator, not a fraction.
        if(text_[pos_] == '/' && (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
          break;
        ++pos_;
      }
    if(start == pos_)
      fail("expected factor");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int integer()
  {
    const auto start = pos_;
    if(pos_ < text_.size() && text_[pos_] == '-')
      ++pos_;
    while(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if(start == pos_)
      fail("expected integer");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  bool starts_with(const char *s) const { return text_.compare(pos_, std::char_traits<char>::length(s), s) == 0; }
  bool accept(char c)
  {
    if(pos_ < text_.size() && text_[pos_] == c)
      {
        ++pos_;
        return true;
      }
    return false;
  }
  void expect(char c)
  {
    if(!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string &why) const
  {
    throw std::invalid_argument("cannot parse expression '" + text_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

LExpression parse_lexpression(const std::string &text) { return ExpressionParser(text).parse(); }

// ---------------------------------------------------------------- operations

LExpression canonicalize(const LExpression &e, std::optional<CharClass> cls)
{
  LExpression out(e.scalar());
  for(const auto &[sym, k] : e.factors())
    {
      LSymbol reduced = sym;
      if(cls)
        reduced.power = reduce_power(*cls, sym.power);
      if(reduced.kind == SymbolKind::Epsilon && reduced.power == 0)
        continue;
      out = out * LExpression::symbol(reduced, k);
    }
  return out;
}

std::vector<ComposedCharacter> normalizing_pairs(const WeylGroup &group,
                                                 const TorusCharacter &lambda,
                                                 const WeylElement &w)
{
  std::vector<ComposedCharacter> out;
  for(const auto &alpha : group.negative_set(w))
    out.push_back(compose_coroot(lambda, group.roots().coroot(alpha)));
  return out;
}

LExpression inverse_norm_factor(const WeylGroup &group, const TorusCharacter &lambda,
                                const WeylElement &w)
{
  LExpression out;
  for(const auto &[k, e] : normalizing_pairs(group, lambda, w))
    {
      out = out * LExpression::L(e, k);
      out = out * LExpression::L(e + Rational(1), k, -1);
      out = out * LExpression::eps(e + Rational(1), k, -1);
    }
  return canonicalize(out);
}

namespace {

bool needs_reflection(const AffineForm &x)
{
  return x.a < 0 || (x.a == 0 && x.b < Rational(1, 2));
}

}  // namespace

LExpression apply_functional_equation(const LExpression &e, std::optional<CharClass> cls)
{
  LExpression out(e.scalar());
  for(const auto &[sym, k] : e.factors())
    {
      if(!needs_reflection(sym.arg))
        {
          out = out * LExpression::symbol(sym, k);
          continue;
        }
      const AffineForm reflected = -sym.arg + Rational(1);
      if(sym.kind == SymbolKind::L)
        {
          // L(x, chi^k) = eps(1-x, chi^-k) L(1-x, chi^-k)
          out = out * LExpression::eps(reflected, -sym.power, k);
          out = out * LExpression::L(reflected, -sym.power, k);
        }
      else
        {
          // eps(x, chi^k) eps(1-x, chi^-k) = 1
          out = out * LExpression::eps(reflected, -sym.power, -k);
        }
    }
  return canonicalize(out, cls);
}

}  // namespace sp4eis
