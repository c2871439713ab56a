#pragma once

#include <string>
#include <vector>

#include "sp4eis/rational.hpp"
#include "sp4eis/root_system.hpp"

namespace sp4eis {

/// Class of a (global or local) unitary character. Sgn only occurs at the
/// archimedean place.
enum class CharClass
{
  Trivial,
  QuadraticNontrivial,
  Other,
  Sgn,
};

std::string to_string(CharClass c);
/// Accepts trivial|1, quadratic, other, sgn.
CharClass parse_char_class(const std::string &text);

/// Reduces the exponent k of chi^k according to the class of chi:
/// 0 for Trivial, k mod 2 for quadratic classes, k otherwise.
int reduce_power(CharClass c, int power);
/// Whether chi^k is the trivial character.
bool is_trivial_power(CharClass c, int power);

/// a*s + b.
struct AffineForm
{
  Rational a{0};
  Rational b{0};

  AffineForm() = default;
  AffineForm(Rational a_, Rational b_) : a(a_), b(b_) {}
  static AffineForm constant(Rational b) { return {Rational(0), b}; }

  Rational at(const Rational &s) const { return a * s + b; }

  AffineForm operator+(const AffineForm &o) const { return {a + o.a, b + o.b}; }
  AffineForm operator-(const AffineForm &o) const { return {a - o.a, b - o.b}; }
  AffineForm operator-() const { return {-a, -b}; }
  AffineForm operator*(const Rational &c) const { return {a * c, b * c}; }
  AffineForm operator+(const Rational &c) const { return {a, b + c}; }

  bool operator==(const AffineForm &) const = default;
  bool operator<(const AffineForm &o) const
  {
    return a != o.a ? a < o.a : b < o.b;
  }
};

/// "s-1", "2s", "s+1/2", "-s", "0".
std::string to_string(const AffineForm &f);

/// One coordinate of a torus character: chi^power * nu^exponent.
struct CharCoordinate
{
  int power = 0;
  AffineForm exponent;

  bool operator==(const CharCoordinate &) const = default;
};

/// chi^{k_1} nu^{f_1(s)} (x) ... (x) chi^{k_n} nu^{f_n(s)}.
struct TorusCharacter
{
  std::vector<CharCoordinate> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  /// Exact symbolic equality (unreduced powers, identical affine forms).
  bool operator==(const TorusCharacter &) const = default;
};

std::string to_string(const TorusCharacter &t);

/// chi nu^s (x) nu^{-1}.
TorusCharacter heisenberg_lambda();
/// chi nu^{s-1/2} (x) chi nu^{s+1/2}.
TorusCharacter siegel_lambda();

struct ComposedCharacter
{
  int power = 0;
  AffineForm exponent;
  bool operator==(const ComposedCharacter &) const = default;
};

/// Lambda o alpha^vee for an integral coroot alpha^vee = sum c_i e_i.
ComposedCharacter compose_coroot(const TorusCharacter &lambda, const RootVector &coroot);

/// Transports Lambda along w, treating it as the vector sum_i Lambda_i e_i:
/// a sign flip inverts the character power and negates the exponent.
TorusCharacter weyl_act(const WeylElement &w, const TorusCharacter &lambda);

/// Equality after evaluating at s = s0 and reducing powers by the class of chi.
bool equal_at(const TorusCharacter &x, const TorusCharacter &y, const Rational &s0,
              CharClass cls);

}  // namespace sp4eis
