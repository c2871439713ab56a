#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sp4eis/rational.hpp"

namespace sp4eis {

/// A vector in the weight lattice, expressed in the orthonormal basis e_1..e_n.
struct RootVector
{
  std::vector<Rational> coords;

  RootVector() = default;
  explicit RootVector(std::vector<Rational> c) : coords(std::move(c)) {}

  static RootVector basis(int rank, int index);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  /// First nonzero coordinate is positive (the ordering e_1 > e_2 > ... > 0).
  bool is_positive() const;
  bool is_negative() const { return !is_zero() && !is_positive(); }

  RootVector operator-() const;
  RootVector operator+(const RootVector &o) const;
  RootVector operator-(const RootVector &o) const;
  RootVector operator*(const Rational &c) const;
  Rational dot(const RootVector &o) const;

  bool operator==(const RootVector &) const = default;
  /// Lexicographic on coordinates.
  std::strong_ordering operator<=>(const RootVector &o) const;
};

/// "e1-e2", "2e2", "-e1-e2", "0".
std::string to_string(const RootVector &v);

/// Type C_n root system: roots +-e_i+-e_j (short) and +-2e_i (long).
class RootSystem
{
public:
  explicit RootSystem(int rank);

  int rank() const { return rank_; }

  /// Sorted by height, ties broken by descending coordinates. Rank 2 gives
  /// e1-e2, 2e2, e1+e2, 2e1.
  const std::vector<RootVector> &positive_roots() const { return positive_; }
  /// e_i - e_{i+1} for i < n, then 2e_n.
  const std::vector<RootVector> &simple_roots() const { return simple_; }

  bool is_root(const RootVector &v) const;
  /// Height in the basis of simple roots; requires a root.
  Rational height(const RootVector &alpha) const;

  /// 2 alpha / <alpha, alpha>. Throws std::invalid_argument for non-roots.
  RootVector coroot(const RootVector &alpha) const;

private:
  int rank_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> simple_;
};

/// Signed permutation acting by w(e_i) = signs[i] * e_{perm[i]} (0-based).
///
/// Generators are numbered 0..n-1: generator i < n-1 swaps e_{i+1} and e_{i+2},
/// generator n-1 negates e_n. In rank 2 these are s and c2. The stored word is
/// a reduced expression read as a product, so act(g1 g2, v) = g1(g2(v)).
/// Equality compares only the normal form (perm, signs).
class WeylElement
{
public:
  static WeylElement identity(int rank);
  static WeylElement generator(int rank, int index);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int> &perm() const { return perm_; }
  const std::vector<int> &signs() const { return signs_; }
  const std::vector<int> &word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  RootVector act(const RootVector &v) const;

  /// Normal-form product; the word is the concatenation, which need not be
  /// reduced. WeylGroup::canonical() restores a reduced word.
  WeylElement operator*(const WeylElement &o) const;
  /// Normal form of the inverse; word reversed.
  WeylElement inverse() const;

  /// Word over generator names, e.g. "sc2s"; "id" for the identity.
  std::string name() const;
  /// Conventional rank-2 aliases: c1 = sc2s, sc1 = c2s; otherwise name().
  std::string alias() const;

  bool operator==(const WeylElement &o) const
  {
    return perm_ == o.perm_ && signs_ == o.signs_;
  }
  /// Order by (length, word, normal form).
  bool operator<(const WeylElement &o) const;

private:
  friend class WeylGroup;
  std::vector<int> perm_;
  std::vector<int> signs_;
  std::vector<int> word_;
};

std::string generator_name(int rank, int index);

/// The Weyl group W(C_n) enumerated with shortest words.
class WeylGroup
{
public:
  explicit WeylGroup(int rank);

  int rank() const { return roots_.rank(); }
  const RootSystem &roots() const { return roots_; }
  /// All 2^n n! elements, ordered by length then word.
  const std::vector<WeylElement> &elements() const { return elements_; }

  /// The group element with the same normal form, carrying its reduced word.
  const WeylElement &canonical(const WeylElement &w) const;

  /// Parses "id", "1", "s", "c2", "c1", "sc1", "c2sc2", "s1s2c3" ...
  /// Throws std::invalid_argument on unknown tokens.
  WeylElement parse(const std::string &text) const;

  /// Positive roots sent to negative roots by w.
  std::vector<RootVector> negative_set(const WeylElement &w) const;

  /// { w : w(alpha) > 0 for every alpha in keep }, found by extending words
  /// only through elements that satisfy the condition. Ordered by length.
  std::vector<WeylElement> coset_reps(const std::vector<RootVector> &keep) const;
  /// Same set by filtering every group element.
  std::vector<WeylElement> coset_reps_brute_force(const std::vector<RootVector> &keep) const;

private:
  RootSystem roots_;
  std::vector<WeylElement> elements_;
};

}  // namespace sp4eis
