#include "sp4eis/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

namespace sp4eis {

namespace {

const double kPi = boost::math::constants::pi<double>();

void check_domain(Complex s)
{
  if(std::abs(s.imag()) > kMaxImag)
    throw std::domain_error("|Im s| exceeds " + std::to_string(kMaxImag));
}

}  // namespace

Complex gamma(Complex z)
{
  static const double g = 7;
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if(z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  z -= 1.0;
  Complex x = c[0];
  for(int i = 1; i < 9; ++i)
    x += c[i] / (z + double(i));
  const Complex t = z + g + 0.5;
  return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

namespace {

/// Euler-Maclaurin for sum_a w_a zeta(s, a), with sum w_a = 0 allowed at s = 1.
Complex hurwitz_combination(Complex s, const std::vector<std::pair<double, Complex>> &terms)
{
  Complex weight_sum = 0;
  for(const auto &t : terms)
    weight_sum += t.second;
  const bool near_one = std::abs(s - 1.0) < 1e-8;
  if(near_one && std::abs(weight_sum) > 1e-12)
    throw PoleProximityError("hurwitz_zeta: s = 1");
  Complex total = 0;
  for(const auto &[a, w] : terms)
    total += w * hurwitz_zeta_regular(s, a, !near_one);
  if(near_one)
    {
      const int N = 30 + static_cast<int>(std::abs(s));
      for(const auto &[a, w] : terms)
        total -= w * std::log(N + a);
    }
  return total;
}

}  // namespace

Complex hurwitz_zeta(Complex s, double a)
{
  if(std::abs(s - 1.0) < 1e-14)
    throw PoleProximityError("hurwitz_zeta: s = 1");
  return hurwitz_zeta_regular(s, a, true);
}

Complex hurwitz_zeta_regular(Complex s, double a, bool with_pole_term)
{
  const int N = 30 + static_cast<int>(std::abs(s));
  const int M = 15;
  Complex sum = 0;
  for(int n = 0; n < N; ++n)
    sum += std::pow(Complex(n + a), -s);
  const Complex x = N + a;
  if(with_pole_term)
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  // Bernoulli tail: B_2k/(2k)! * s(s+1)...(s+2k-2) x^(-s-2k+1)
  Complex rising = s;
  for(int k = 1; k <= M; ++k)
    {
      const double b = boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k);
      sum += b * rising * std::pow(x, -s - double(2 * k - 1));
      rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
    }
  return sum;
}

Complex riemann_zeta(Complex s)
{
  // the direct sum loses digits to cancellation for Re s < 0
  if(s.real() < 0)
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * gamma(1.0 - s)
           * hurwitz_zeta(1.0 - s, 1.0);
  return hurwitz_zeta(s, 1.0);
}

Complex zeta_direct_series(Complex s, int terms)
{
  Complex sum = 0;
  for(int n = terms; n >= 1; --n)
    sum += std::pow(Complex(n), -s);
  return sum;
}

Complex completed_zeta_direct(Complex s)
{
  check_domain(s);
  if(std::abs(s) < 1e-8 || std::abs(s - 1.0) < 1e-8)
    throw PoleProximityError("completed_zeta: too close to a pole (s = 0 or 1)");
  return std::pow(kPi, -s / 2.0) * gamma(s / 2.0) * riemann_zeta(s);
}

Complex completed_zeta(Complex s)
{
  if(s.real() < 0.5)
    return completed_zeta_direct(1.0 - s);
  return completed_zeta_direct(s);
}

// ---------------------------------------------------------------- characters

DirichletTable DirichletTable::trivial() { return {1, {Complex(1)}, 0}; }

DirichletTable DirichletTable::quadratic_mod4() { return {4, {0, 1, 0, -1}, 1}; }

DirichletTable DirichletTable::quartic_mod5()
{
  const Complex i(0, 1);
  // 2 generates (Z/5)^x: 2 -> i, 4 -> -1, 3 -> -i, 1 -> 1.
  return {5, {0, 1, i, -i, -1}, 1};
}

Complex DirichletTable::operator()(long n) const
{
  const long r = ((n % modulus) + modulus) % modulus;
  return values[static_cast<std::size_t>(r)];
}

DirichletTable DirichletTable::power(int k) const
{
  DirichletTable out = *this;
  for(auto &v : out.values)
    v = (v == Complex(0)) ? Complex(0) : std::pow(v, k);
  for(auto &v : out.values)
    {
      if(std::abs(v.real()) < 1e-15)
        v.real(0);
      if(std::abs(v.imag()) < 1e-15)
        v.imag(0);
    }
  out.parity = std::abs(out(-1) - Complex(1)) < 1e-12 ? 0 : 1;
  if(out.is_principal())
    return trivial();
  return out;
}

bool DirichletTable::is_principal() const
{
  for(int a = 1; a < modulus; ++a)
    if(std::gcd(a, modulus) == 1 && std::abs(values[a] - Complex(1)) > 1e-12)
      return false;
  return true;
}

void DirichletTable::validate() const
{
  if(modulus < 1 || static_cast<int>(values.size()) != modulus)
    throw std::invalid_argument("Dirichlet table: need exactly q values");
  for(int a = 0; a < modulus; ++a)
    {
      const bool unit = std::gcd(a, modulus) == 1;
      if(unit != (std::abs(values[a]) > 1e-12))
        throw std::invalid_argument("Dirichlet table: chi(a) must vanish exactly off the units");
      for(int b = 0; b < modulus; ++b)
        if(std::abs((*this)(long(a) * b) - values[a] * values[b]) > 1e-12)
          throw std::invalid_argument("Dirichlet table: not multiplicative");
    }
  const Complex m = (*this)(-1);
  if(std::abs(m - Complex(parity == 0 ? 1 : -1)) > 1e-12)
    throw std::invalid_argument("Dirichlet table: parity bit disagrees with chi(-1)");
}

bool DirichletTable::is_primitive() const
{
  if(modulus == 1)
    return true;
  for(int d = 1; d < modulus; ++d)
    {
      if(modulus % d)
        continue;
      bool induced = true;
      for(int a = 1; a < modulus && induced; ++a)
        if(std::gcd(a, modulus) == 1 && a % d == 1 % d && std::abs(values[a] - Complex(1)) > 1e-12)
          induced = false;
      if(induced)
        return false;
    }
  return true;
}

Complex completed_dirichlet_direct(const DirichletTable &tbl, Complex s)
{
  if(tbl.modulus == 1)
    return completed_zeta_direct(s);
  check_domain(s);
  tbl.validate();
  if(!tbl.is_primitive())
    throw std::invalid_argument("completed_dirichlet: table is not primitive");
  const double q = tbl.modulus;
  const Complex h = (s + double(tbl.parity)) / 2.0;
  if(h.real() <= 0 && std::abs(h - std::round(h.real())) < 1e-10)
    throw PoleProximityError("completed_dirichlet: at a pole of the gamma factor");
  std::vector<std::pair<double, Complex>> terms;
  for(int a = 1; a < tbl.modulus; ++a)
    if(std::abs(tbl.values[a]) > 0)
      terms.push_back({a / q, tbl.values[a]});
  const Complex l = std::pow(q, -s) * hurwitz_combination(s, terms);
  return std::pow(q / kPi, h) * gamma(h) * l;
}

Complex gauss_sum(const DirichletTable &tbl)
{
  Complex tau = 0;
  for(int a = 1; a < tbl.modulus; ++a)
    tau += tbl.values[a] * std::polar(1.0, 2 * kPi * a / tbl.modulus);
  return tau;
}

Complex root_number(const DirichletTable &tbl)
{
  if(tbl.modulus == 1)
    return 1;
  const Complex i_a = tbl.parity ? Complex(0, 1) : Complex(1, 0);
  return gauss_sum(tbl) / (i_a * std::sqrt(double(tbl.modulus)));
}

Complex completed_dirichlet(const DirichletTable &tbl, Complex s)
{
  if(tbl.modulus == 1)
    return completed_zeta(s);
  if(s.real() < 0.5)
    return root_number(tbl) * completed_dirichlet_direct(tbl.power(-1), 1.0 - s);
  return completed_dirichlet_direct(tbl, s);
}

Complex epsilon_ratio(const DirichletTable &tbl, Complex x)
{
  DirichletTable inv = tbl.power(-1);
  return completed_dirichlet(inv, 1.0 - x) / completed_dirichlet(tbl, x);
}

Complex epsilon_ratio_direct(const DirichletTable &tbl, Complex x)
{
  DirichletTable inv = tbl.power(-1);
  return completed_dirichlet_direct(inv, 1.0 - x) / completed_dirichlet_direct(tbl, x);
}

Complex evaluate(const LExpression &e, const DirichletTable &chi, Complex s)
{
  Complex v = boost::rational_cast<double>(e.scalar());
  for(const auto &[sym, exp] : e.factors())
    {
      const DirichletTable t = chi.power(sym.power);
      const Complex x = boost::rational_cast<double>(sym.arg.a) * s + boost::rational_cast<double>(sym.arg.b);
      const Complex f = sym.kind == SymbolKind::L ? completed_dirichlet(t, x) : epsilon_ratio(t, x);
      v *= std::pow(f, exp);
    }
  return v;
}

// ------------------------------------------------------------------ orders

std::vector<double> delta_ladder()
{
  if(const char *env = std::getenv("SP4EIS_DELTA_LADDER"))
    {
      std::vector<std::string> parts;
      boost::algorithm::split(parts, std::string(env), boost::algorithm::is_any_of(","));
      std::vector<double> out;
      for(const auto &p : parts)
        {
          const std::string t = boost::algorithm::trim_copy(p);
          std::size_t used = 0;
          const double d = std::stod(t, &used);
          if(used != t.size() || !(d > 0))
            throw std::invalid_argument("SP4EIS_DELTA_LADDER: bad entry '" + t + "'");
          out.push_back(d);
        }
      if(out.size() < 2)
        throw std::invalid_argument("SP4EIS_DELTA_LADDER: need at least two deltas");
      return out;
    }
  return {1e-2, 1e-3, 1e-4, 1e-5};
}

OrderEstimate fit_order(const std::vector<double> &deltas, const std::vector<double> &abs_values)
{
  const std::size_t n = deltas.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for(std::size_t i = 0; i < n; ++i)
    {
      if(!std::isfinite(abs_values[i]) || abs_values[i] == 0)
        throw std::overflow_error("estimate_order: value overflowed or vanished; widen the delta ladder");
      const double x = std::log(deltas[i]), y = std::log(abs_values[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
  OrderEstimate est;
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  est.fitted = static_cast<int>(std::lround(est.slope));
  est.residual = std::abs(est.slope - est.fitted);
  return est;
}

OrderEstimate estimate_order(const LExpression &e, const DirichletTable &chi, const Rational &s0)
{
  const double x0 = boost::rational_cast<double>(s0);
  return estimate_order_fn([&](Complex s) { return evaluate(e, chi, s); }, x0);
}

}  // namespace sp4eis
