#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4eis/normfactor.hpp"

namespace sp4eis {

using Complex = std::complex<double>;

struct PoleProximityError : std::domain_error
{
  using std::domain_error::domain_error;
};

/// Lanczos approximation, reflected for Re z < 1/2.
Complex gamma(Complex z);
/// Hurwitz zeta by Euler-Maclaurin; s != 1, 0 < a <= 1.
Complex hurwitz_zeta(Complex s, double a);
/// The same sum with the x^(1-s)/(s-1) tail term optionally left out.
Complex hurwitz_zeta_regular(Complex s, double a, bool with_pole_term);
/// Uses the functional equation for Re s < 0.
Complex riemann_zeta(Complex s);
/// Partial sums of sum n^-s, for Re s > 1.
Complex zeta_direct_series(Complex s, int terms);

/// Largest |Im s| accepted by the evaluators below.
inline constexpr double kMaxImag = 40.0;

/// pi^(-s/2) Gamma(s/2) zeta(s) evaluated as written (no reflection).
Complex completed_zeta_direct(Complex s);
/// Same, using s <-> 1-s for Re s < 1/2.
Complex completed_zeta(Complex s);

/// A Dirichlet character given by its values on Z/q.
struct DirichletTable
{
  int modulus = 1;
  std::vector<Complex> values;  ///< values[a], a = 0..q-1
  int parity = 0;               ///< 0 even, 1 odd

  static DirichletTable trivial();
  /// The nontrivial character mod 4.
  static DirichletTable quadratic_mod4();
  /// chi(2) = i mod 5.
  static DirichletTable quartic_mod5();

  Complex operator()(long n) const;
  DirichletTable power(int k) const;
  bool is_principal() const;
  /// Throws std::invalid_argument on a non-multiplicative or malformed table.
  void validate() const;
  bool is_primitive() const;
};

/// (q/pi)^((s+a)/2) Gamma((s+a)/2) L(s,chi) for a primitive table, summed
/// directly; the trivial table gives completed_zeta_direct.
Complex completed_dirichlet_direct(const DirichletTable &tbl, Complex s);
/// Same, using Lambda(s,chi) = W(chi) Lambda(1-s,chi^-1) for Re s < 1/2.
Complex completed_dirichlet(const DirichletTable &tbl, Complex s);

/// sum_a chi(a) e^(2 pi i a/q).
Complex gauss_sum(const DirichletTable &tbl);
/// W(chi) = tau(chi) / (i^a sqrt q).
Complex root_number(const DirichletTable &tbl);

/// eps(x, chi) = completed L(1-x, chi^-1) / completed L(x, chi).
Complex epsilon_ratio(const DirichletTable &tbl, Complex x);
/// The same ratio from direct sums on both sides.
Complex epsilon_ratio_direct(const DirichletTable &tbl, Complex x);

/// Value of an L-expression with chi bound to a table; eps symbols are replaced
/// by the ratio above.
Complex evaluate(const LExpression &e, const DirichletTable &chi, Complex s);

struct OrderEstimate
{
  double slope = 0;
  int fitted = 0;
  double residual = 0;  ///< |slope - fitted|
};

/// Default 1e-2, 1e-3, 1e-4, 1e-5; SP4EIS_DELTA_LADDER="a,b,c" overrides.
std::vector<double> delta_ladder();

/// Least-squares slope of log|f(s0+delta)| against log(delta).
OrderEstimate estimate_order(const LExpression &e, const DirichletTable &chi, const Rational &s0);

/// f evaluated at s0 + delta for each delta of the ladder, for ad hoc functions.
template <class F>
OrderEstimate estimate_order_fn(F &&f, double s0);

OrderEstimate fit_order(const std::vector<double> &deltas, const std::vector<double> &abs_values);

template <class F>
OrderEstimate estimate_order_fn(F &&f, double s0)
{
  std::vector<double> ds = delta_ladder(), vs;
  for(double d : ds)
    vs.push_back(std::abs(f(Complex(s0 + d, 0))));
  return fit_order(ds, vs);
}

}  // namespace sp4eis
