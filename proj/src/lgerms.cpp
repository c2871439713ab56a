#include "sp4eis/lgerms.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace sp4eis {

// ---------------------------------------------------------------- OrderValue

std::optional<int> OrderValue::lower_bound() const
{
  if(unknown_poles)
    return std::nullopt;
  return base;
}

std::optional<int> OrderValue::upper_bound() const
{
  if(unknown_zeros)
    return std::nullopt;
  return base;
}

OrderValue OrderValue::operator+(const OrderValue &o) const
{
  OrderValue r{base + o.base, unknown_zeros + o.unknown_zeros, unknown_poles + o.unknown_poles,
               strip_values};
  r.strip_values.insert(r.strip_values.end(), o.strip_values.begin(), o.strip_values.end());
  return r;
}

OrderValue OrderValue::operator-() const
{
  return OrderValue{-base, unknown_poles, unknown_zeros, strip_values};
}

std::string to_string(const OrderValue &v)
{
  if(v.is_known())
    return std::to_string(v.base);
  if(auto lo = v.lower_bound())
    return ">=" + std::to_string(*lo);
  if(auto hi = v.upper_bound())
    return "<=" + std::to_string(*hi);
  return "unknown";
}

OrderValue min_order(const std::vector<OrderValue> &orders)
{
  if(orders.empty())
    throw std::invalid_argument("min_order of nothing");
  std::optional<int> lo = std::numeric_limits<int>::max();
  std::optional<int> hi;
  std::vector<std::string> strip;
  for(const auto &o : orders)
    {
      auto l = o.lower_bound();
      if(!l)
        lo.reset();
      else if(lo)
        lo = std::min(*lo, *l);
      if(auto u = o.upper_bound())
        hi = hi ? std::min(*hi, *u) : *u;
      for(const auto &s : o.strip_values)
        if(std::find(strip.begin(), strip.end(), s) == strip.end())
          strip.push_back(s);
    }
  if(lo && hi && *lo == *hi)
    return OrderValue::known(*lo);
  if(lo)
    return OrderValue{*lo, 1, 0, strip};
  if(hi)
    return OrderValue{*hi, 0, 1, strip};
  return OrderValue{0, 1, 1, strip};
}

// ---------------------------------------------------------------------- Poly

namespace {

void poly_add_term(Poly &p, const Monomial &m, const Rational &c)
{
  if(c == 0)
    return;
  auto [it, inserted] = p.try_emplace(m, 0);
  it->second += c;
  if(it->second == 0)
    p.erase(it);
}

Poly poly_add(const Poly &a, const Poly &b, const Rational &wb = Rational(1))
{
  Poly r = a;
  for(const auto &[m, c] : b)
    poly_add_term(r, m, c * wb);
  return r;
}

Monomial mono_mul(const Monomial &a, const Monomial &b)
{
  Monomial r = a;
  for(const auto &[atom, k] : b)
    {
      r[atom] += k;
      if(r[atom] == 0)
        r.erase(atom);
    }
  return r;
}

Poly poly_mul(const Poly &a, const Poly &b)
{
  Poly r;
  for(const auto &[ma, ca] : a)
    for(const auto &[mb, cb] : b)
      poly_add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

Rational rpow(Rational x, int n)
{
  Rational r(1);
  for(int i = 0; i < n; ++i)
    r *= x;
  return r;
}

Rational factorial(int n)
{
  Rational r(1);
  for(int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

/// Single nonzero monomial with no opaque atoms.
std::optional<AtomStatus> monomial_status(const Poly &p, const KnowledgeBase &kb)
{
  if(p.size() != 1)
    return std::nullopt;
  AtomStatus st = AtomStatus::ProvenNonzero;
  for(const auto &[atom, k] : p.begin()->first)
    {
      const auto a = kb.status(atom);
      if(a == AtomStatus::Opaque)
        return std::nullopt;
      if(a == AtomStatus::AssertedNonzero)
        st = AtomStatus::AssertedNonzero;
    }
  return st;
}

}  // namespace

std::string to_string(const Poly &p)
{
  if(p.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for(const auto &[m, c] : p)
    {
      if(!first)
        os << " + ";
      first = false;
      const bool unit = c == 1 && !m.empty();
      if(!unit)
        os << to_string(c);
      bool sep = !unit;
      for(const auto &[atom, k] : m)
        {
          os << (sep ? "*" : "") << atom;
          if(k != 1)
            os << "^" << k;
          sep = true;
        }
    }
  return os.str();
}

Poly poly_constant(const Rational &c)
{
  Poly p;
  poly_add_term(p, {}, c);
  return p;
}

Poly poly_atom(const std::string &atom, const Rational &c)
{
  Poly p;
  poly_add_term(p, {{atom, 1}}, c);
  return p;
}

// ------------------------------------------------------------- KnowledgeBase

const KnowledgeBase &KnowledgeBase::standard()
{
  static const KnowledgeBase kb = [] {
    KnowledgeBase k;
    k.trivial_poles = {{Rational(0), Rational(-1)}, {Rational(1), Rational(1)}};
    k.asserted_nonzero[laurent_atom(0)] =
      "constant term of the Laurent expansion of the completed zeta function at 0 is nonzero";
    k.asserted_nonzero[derivative_atom(SymbolKind::L, Rational(0), 1, 1, CharClass::QuadraticNontrivial)] =
      "derivative at 0 of the completed L-function of a nontrivial quadratic character is nonzero";
    return k;
  }();
  return kb;
}

AtomStatus KnowledgeBase::status(const std::string &atom) const
{
  if(atom.rfind("L(", 0) == 0 || atom.rfind("eps(", 0) == 0)
    return AtomStatus::ProvenNonzero;
  if(atom.rfind("Res[", 0) == 0 || asserted_nonzero.count(atom))
    return AtomStatus::AssertedNonzero;
  return AtomStatus::Opaque;
}

std::string value_atom(SymbolKind kind, const Rational &x, int power)
{
  return to_string(LSymbol{kind, AffineForm::constant(x), power});
}

std::string derivative_atom(SymbolKind kind, const Rational &x, int power, int order,
                            CharClass cls)
{
  if(order == 0)
    return value_atom(kind, x, power);
  std::string head = kind == SymbolKind::L ? "L" : "eps";
  if(order <= 2)
    head += std::string(static_cast<std::size_t>(order), '\'');
  else
    head += "^(" + std::to_string(order) + ")";
  return head + "(" + to_string(x) + "," + character_name(power) + ")@" + to_string(cls);
}

std::string laurent_atom(int index) { return "LC" + std::to_string(index) + "[L(0,1)]"; }

// -------------------------------------------------------------------- Series

Series Series::constant(const Poly &c, int depth)
{
  Series s;
  s.coeffs.assign(static_cast<std::size_t>(depth), Poly{});
  if(depth > 0)
    s.coeffs[0] = c;
  return s;
}

Series Series::operator*(const Series &o) const
{
  Series r;
  r.order = order + o.order;
  const std::size_t n = std::min(coeffs.size(), o.coeffs.size());
  r.coeffs.assign(n, Poly{});
  for(std::size_t k = 0; k < n; ++k)
    for(std::size_t i = 0; i <= k; ++i)
      r.coeffs[k] = poly_add(r.coeffs[k], poly_mul(coeffs[i], o.coeffs[k - i]));
  return r;
}

Series Series::inverse(const KnowledgeBase &kb) const
{
  if(coeffs.empty() || !monomial_status(coeffs[0], kb))
    throw IndeterminateError("cannot invert a series whose leading coefficient may vanish: "
                             + (coeffs.empty() ? std::string("0") : to_string(coeffs[0])));
  const auto &[m0, c0] = *coeffs[0].begin();
  Monomial inv_m;
  for(const auto &[atom, k] : m0)
    inv_m[atom] = -k;
  const Poly inv0{{inv_m, Rational(1) / c0}};
  Series r;
  r.order = -order;
  r.coeffs.assign(coeffs.size(), Poly{});
  r.coeffs[0] = inv0;
  for(std::size_t n = 1; n < coeffs.size(); ++n)
    {
      Poly acc;
      for(std::size_t i = 1; i <= n; ++i)
        acc = poly_add(acc, poly_mul(coeffs[i], r.coeffs[n - i]));
      r.coeffs[n] = poly_mul(inv0, acc);
      for(auto &[m, c] : r.coeffs[n])
        c = -c;
    }
  return r;
}

Series Series::pow(int n, const KnowledgeBase &kb) const
{
  if(n < 0)
    return inverse(kb).pow(-n, kb);
  Series r = constant(poly_constant(Rational(1)), static_cast<int>(coeffs.size()));
  for(int i = 0; i < n; ++i)
    r = r * *this;
  return r;
}

Series Series::scaled(const Poly &c) const
{
  Series r = *this;
  for(auto &p : r.coeffs)
    p = poly_mul(p, c);
  return r;
}

void Series::normalize()
{
  while(!coeffs.empty() && coeffs.front().empty())
    {
      coeffs.erase(coeffs.begin());
      ++order;
    }
}

// ---------------------------------------------------------------------- Germ

const Poly &Germ::leading() const
{
  if(!series || series->exhausted())
    throw IndeterminateError("germ has no leading coefficient");
  return series->coeffs.front();
}

AtomStatus Germ::leading_status(const KnowledgeBase &kb) const
{
  if(!series || series->exhausted())
    return AtomStatus::Opaque;
  return monomial_status(leading(), kb).value_or(AtomStatus::Opaque);
}

Germ Germ::from_series(Series s, const KnowledgeBase &kb)
{
  s.normalize();
  Germ g;
  g.series = s;
  if(s.exhausted() || !monomial_status(s.coeffs.front(), kb))
    g.order = OrderValue{s.order, 1, 0, {}};
  else
    g.order = OrderValue::known(s.order);
  return g;
}

Germ Germ::operator*(const Germ &o) const
{
  Germ r;
  r.order = order + o.order;
  if(series && o.series)
    {
      r.series = *series * *o.series;
      r.series->normalize();
    }
  return r;
}

// ----------------------------------------------------------------- expansion

namespace {

void require_global(CharClass cls)
{
  if(cls == CharClass::Sgn)
    throw std::invalid_argument("sgn is not a global character class");
}

bool is_trivial_pole(const KnowledgeBase &kb, int power, const Rational &x)
{
  return power == 0 && kb.trivial_poles.count(x);
}

Series expand_eps(const Rational &y0, const Rational &c, int power, CharClass cls,
                  const KnowledgeBase &kb)
{
  const int p = reduce_power(cls, power);
  if(p == 0)
    return Series::constant(poly_constant(Rational(1)), kb.depth);
  if(c == 0)
    return Series::constant(poly_atom(value_atom(SymbolKind::Epsilon, y0, p)), kb.depth);
  if(y0 < Rational(1, 2))
    return expand_eps(Rational(1) - y0, -c, -p, cls, kb).inverse(kb);
  Series s;
  for(int j = 0; j < kb.depth; ++j)
    s.coeffs.push_back(poly_atom(derivative_atom(SymbolKind::Epsilon, y0, p, j, cls),
                                 rpow(c, j) / factorial(j)));
  return s;
}

/// Requires x0 outside the strip.
Series expand_L(const Rational &x0, const Rational &c, int power, CharClass cls,
                const KnowledgeBase &kb)
{
  const int p = reduce_power(cls, power);
  if(c == 0)
    {
      if(is_trivial_pole(kb, p, x0))
        throw std::invalid_argument("constant symbol " + value_atom(SymbolKind::L, x0, p)
                                    + " sits at a pole");
      return Series::constant(poly_atom(value_atom(SymbolKind::L, x0, p)), kb.depth);
    }
  if(x0 >= 1)
    {
      // L(x, chi^p) = L(1-x, chi^-p) / eps(x, chi^p)
      return expand_L(Rational(1) - x0, -c, -p, cls, kb)
             * expand_eps(x0, c, p, cls, kb).inverse(kb);
    }
  Series s;
  if(is_trivial_pole(kb, p, x0))
    {
      s.order = -1;
      s.coeffs.push_back(poly_constant(kb.trivial_poles.at(x0) / c));
      for(int j = 0; j + 1 < kb.depth; ++j)
        s.coeffs.push_back(poly_atom(laurent_atom(j), rpow(c, j)));
      return s;
    }
  for(int j = 0; j < kb.depth; ++j)
    s.coeffs.push_back(poly_atom(derivative_atom(SymbolKind::L, x0, p, j, cls),
                                 rpow(c, j) / factorial(j)));
  return s;
}

}  // namespace

OrderValue order_at(const LExpression &e, CharClass cls, const Rational &s0,
                    const KnowledgeBase &kb)
{
  require_global(cls);
  OrderValue ov;
  for(const auto &[sym, k] : e.factors())
    {
      if(sym.kind == SymbolKind::Epsilon)
        continue;
      const Rational x0 = sym.arg.at(s0);
      const int p = reduce_power(cls, sym.power);
      if(sym.arg.a == 0 && is_trivial_pole(kb, p, x0))
        throw std::invalid_argument("constant symbol " + to_string(sym) + " sits at a pole");
      if(kb.in_strip(x0))
        {
          (k > 0 ? ov.unknown_zeros : ov.unknown_poles) += k > 0 ? k : -k;
          ov.strip_values.push_back(value_atom(SymbolKind::L, x0, p));
        }
      else if(is_trivial_pole(kb, p, x0))
        ov.base -= k;
    }
  return ov;
}

Germ expand(const LExpression &e, CharClass cls, const Rational &s0, const KnowledgeBase &kb)
{
  require_global(cls);
  Series acc = Series::constant(poly_constant(e.scalar()), kb.depth);
  OrderValue strip;
  bool has_series = true;
  for(const auto &[sym, k] : e.factors())
    {
      const Rational x0 = sym.arg.at(s0);
      const Rational c = sym.arg.a;
      if(sym.kind == SymbolKind::L && kb.in_strip(x0))
        {
          (k > 0 ? strip.unknown_zeros : strip.unknown_poles) += k > 0 ? k : -k;
          strip.strip_values.push_back(value_atom(SymbolKind::L, x0, reduce_power(cls, sym.power)));
          has_series = false;
          continue;
        }
      const Series s = sym.kind == SymbolKind::L ? expand_L(x0, c, sym.power, cls, kb)
                                                 : expand_eps(x0, c, sym.power, cls, kb);
      acc = acc * s.pow(k, kb);
    }
  acc.normalize();
  if(has_series)
    return Germ::from_series(acc, kb);
  Germ g;
  g.order = OrderValue::known(acc.order) + strip;
  return g;
}

Germ germ_at(const LExpression &e, CharClass cls, const Rational &s0, const KnowledgeBase &kb)
{
  Germ g = expand(e, cls, s0, kb);
  if(!g.series)
    throw StripUnknownError("order of " + to_string(e) + " at s=" + to_string(s0)
                            + " depends on zeros in the critical strip");
  return g;
}

Germ sum_germs(const std::vector<std::pair<Germ, Rational>> &terms, const KnowledgeBase &kb)
{
  if(terms.empty())
    throw std::invalid_argument("sum of no germs");
  const bool all_series = std::all_of(terms.begin(), terms.end(),
                                      [](const auto &t) { return t.first.series.has_value(); });
  if(!all_series)
    {
      std::vector<OrderValue> orders;
      for(const auto &[g, w] : terms)
        orders.push_back(g.order);
      OrderValue m = min_order(orders);
      // Cancellation can only raise the order.
      if(m.unknown_zeros == 0)
        m.unknown_zeros = 1;
      return Germ{m, std::nullopt};
    }
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::max();
  for(const auto &[g, w] : terms)
    {
      lo = std::min(lo, g.series->order);
      hi = std::min(hi, g.series->order + static_cast<int>(g.series->coeffs.size()));
    }
  Series sum;
  sum.order = lo;
  sum.coeffs.assign(static_cast<std::size_t>(std::max(0, hi - lo)), Poly{});
  for(const auto &[g, w] : terms)
    for(std::size_t j = 0; j < sum.coeffs.size(); ++j)
      {
        const int idx = lo + static_cast<int>(j) - g.series->order;
        if(idx >= 0 && idx < static_cast<int>(g.series->coeffs.size()))
          sum.coeffs[j] = poly_add(sum.coeffs[j], g.series->coeffs[static_cast<std::size_t>(idx)], w);
      }
  return Germ::from_series(sum, kb);
}

void require_exact(const Germ &g, const KnowledgeBase &kb)
{
  if(!g.order.is_known() || g.leading_status(kb) == AtomStatus::Opaque)
    throw IndeterminateError("order is only bounded: " + to_string(g.order));
}

}  // namespace sp4eis
