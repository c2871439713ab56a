#include "sp4eis/root_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace sp4eis {

std::string to_string(const Rational &q)
{
  if(q.denominator() == 1)
    return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string &text)
{
  std::string t;
  for(char c : text)
    if(!std::isspace(static_cast<unsigned char>(c)))
      t.push_back(c);
  if(t.empty())
    throw std::invalid_argument("empty rational");
  auto parse_int = [&](const std::string &part) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try
      {
        v = std::stoll(part, &used);
      }
    catch(const std::exception &)
      {
        throw std::invalid_argument("malformed rational '" + text + "'");
      }
    if(used != part.size())
      throw std::invalid_argument("malformed rational '" + text + "'");
    return v;
  };
  const auto slash = t.find('/');
  if(slash == std::string::npos)
    return Rational(parse_int(t));
  const auto den = parse_int(t.substr(slash + 1));
  if(den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(t.substr(0, slash)), den);
}

// ---------------------------------------------------------------- RootVector

RootVector RootVector::basis(int rank, int index)
{
  RootVector v(std::vector<Rational>(rank, Rational(0)));
  v.coords.at(index) = 1;
  return v;
}

bool RootVector::is_zero() const
{
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational &c) { return c == 0; });
}

bool RootVector::is_positive() const
{
  for(const auto &c : coords)
    if(c != 0)
      return c > 0;
  return false;
}

RootVector RootVector::operator-() const { return *this * Rational(-1); }

RootVector RootVector::operator+(const RootVector &o) const
{
  RootVector r = *this;
  for(std::size_t i = 0; i < coords.size(); ++i)
    r.coords[i] += o.coords.at(i);
  return r;
}

RootVector RootVector::operator-(const RootVector &o) const { return *this + (-o); }

RootVector RootVector::operator*(const Rational &c) const
{
  RootVector r = *this;
  for(auto &x : r.coords)
    x *= c;
  return r;
}

Rational RootVector::dot(const RootVector &o) const
{
  Rational sum(0);
  for(std::size_t i = 0; i < coords.size(); ++i)
    sum += coords[i] * o.coords.at(i);
  return sum;
}

std::strong_ordering RootVector::operator<=>(const RootVector &o) const
{
  for(std::size_t i = 0; i < std::min(coords.size(), o.coords.size()); ++i)
    {
      if(coords[i] < o.coords[i])
        return std::strong_ordering::less;
      if(o.coords[i] < coords[i])
        return std::strong_ordering::greater;
    }
  return coords.size() <=> o.coords.size();
}

std::string to_string(const RootVector &v)
{
  std::ostringstream os;
  bool first = true;
  for(int i = 0; i < v.rank(); ++i)
    {
      const Rational &c = v.coords[i];
      if(c == 0)
        continue;
      if(c < 0)
        os << "-";
      else if(!first)
        os << "+";
      const Rational a = c < 0 ? -c : c;
      if(a != 1)
        os << to_string(a);
      os << "e" << (i + 1);
      first = false;
    }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(int rank) : rank_(rank)
{
  if(rank < 1)
    throw std::invalid_argument("rank must be positive");
  auto e = [&](int i) { return RootVector::basis(rank, i); };
  for(int i = 0; i < rank; ++i)
    for(int j = i + 1; j < rank; ++j)
      {
        positive_.push_back(e(i) - e(j));
        positive_.push_back(e(i) + e(j));
      }
  for(int i = 0; i < rank; ++i)
    positive_.push_back(e(i) * Rational(2));

  for(int i = 0; i + 1 < rank; ++i)
    simple_.push_back(e(i) - e(i + 1));
  simple_.push_back(e(rank - 1) * Rational(2));

  std::sort(positive_.begin(), positive_.end(),
            [this](const RootVector &a, const RootVector &b) {
              const auto ha = height(a), hb = height(b);
              if(ha != hb)
                return ha < hb;
              return b < a;
            });
}

bool RootSystem::is_root(const RootVector &v) const
{
  if(v.rank() != rank_)
    return false;
  int nonzero = 0;
  for(const auto &c : v.coords)
    if(c != 0)
      ++nonzero;
  if(nonzero == 1)
    {
      for(const auto &c : v.coords)
        if(c != 0)
          return c == 2 || c == -2;
    }
  if(nonzero == 2)
    {
      for(const auto &c : v.coords)
        if(c != 0 && c != 1 && c != -1)
          return false;
      return true;
    }
  return false;
}

Rational RootSystem::height(const RootVector &alpha) const
{
  // e_i = alpha_i + ... + alpha_{n-1} + alpha_n / 2, so ht(e_i) = n - i + 1/2
  // with 1-based i.
  Rational h(0);
  for(int i = 0; i < rank_; ++i)
    h += alpha.coords[i] * (Rational(rank_ - i) - Rational(1, 2));
  return h;
}

RootVector RootSystem::coroot(const RootVector &alpha) const
{
  if(!is_root(alpha))
    throw std::invalid_argument("coroot of non-root " + to_string(alpha));
  return alpha * (Rational(2) / alpha.dot(alpha));
}

// --------------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(int rank)
{
  WeylElement w;
  w.perm_.resize(rank);
  w.signs_.assign(rank, 1);
  for(int i = 0; i < rank; ++i)
    w.perm_[i] = i;
  return w;
}

WeylElement WeylElement::generator(int rank, int index)
{
  if(index < 0 || index >= rank)
    throw std::invalid_argument("generator index out of range");
  WeylElement w = identity(rank);
  if(index + 1 < rank)
    std::swap(w.perm_[index], w.perm_[index + 1]);
  else
    w.signs_[rank - 1] = -1;
  w.word_ = {index};
  return w;
}

RootVector WeylElement::act(const RootVector &v) const
{
  if(v.rank() != rank())
    throw std::invalid_argument("rank mismatch in Weyl action");
  RootVector r(std::vector<Rational>(rank(), Rational(0)));
  for(int i = 0; i < rank(); ++i)
    r.coords[perm_[i]] += Rational(signs_[i]) * v.coords[i];
  return r;
}

WeylElement WeylElement::operator*(const WeylElement &o) const
{
  WeylElement r = identity(rank());
  for(int i = 0; i < rank(); ++i)
    {
      r.perm_[i] = perm_[o.perm_[i]];
      r.signs_[i] = o.signs_[i] * signs_[o.perm_[i]];
    }
  r.word_ = word_;
  r.word_.insert(r.word_.end(), o.word_.begin(), o.word_.end());
  return r;
}

WeylElement WeylElement::inverse() const
{
  WeylElement r = identity(rank());
  for(int i = 0; i < rank(); ++i)
    {
      r.perm_[perm_[i]] = i;
      r.signs_[perm_[i]] = signs_[i];
    }
  r.word_.assign(word_.rbegin(), word_.rend());
  return r;
}

std::string generator_name(int rank, int index)
{
  if(index == rank - 1)
    return "c" + std::to_string(rank);
  if(rank == 2)
    return "s";
  return "s" + std::to_string(index + 1);
}

std::string WeylElement::name() const
{
  if(word_.empty())
    return "id";
  std::string out;
  for(int g : word_)
    out += generator_name(rank(), g);
  return out;
}

std::string WeylElement::alias() const
{
  const auto n = name();
  if(rank() == 2)
    {
      if(n == "sc2s")
        return "c1";
      if(n == "c2s")
        return "sc1";
    }
  return n;
}

bool WeylElement::operator<(const WeylElement &o) const
{
  if(length() != o.length())
    return length() < o.length();
  if(word_ != o.word_)
    return word_ < o.word_;
  if(perm_ != o.perm_)
    return perm_ < o.perm_;
  return signs_ < o.signs_;
}

// ----------------------------------------------------------------- WeylGroup

WeylGroup::WeylGroup(int rank) : roots_(rank)
{
  std::deque<WeylElement> queue{WeylElement::identity(rank)};
  elements_.push_back(queue.front());
  while(!queue.empty())
    {
      const WeylElement w = queue.front();
      queue.pop_front();
      for(int g = 0; g < rank; ++g)
        {
          WeylElement next = w * WeylElement::generator(rank, g);
          if(std::find(elements_.begin(), elements_.end(), next) != elements_.end())
            continue;
          elements_.push_back(next);
          queue.push_back(next);
        }
    }
  std::stable_sort(elements_.begin(), elements_.end());
}

const WeylElement &WeylGroup::canonical(const WeylElement &w) const
{
  auto it = std::find(elements_.begin(), elements_.end(), w);
  if(it == elements_.end())
    throw std::invalid_argument("element not in the Weyl group");
  return *it;
}

WeylElement WeylGroup::parse(const std::string &text) const
{
  const int n = rank();
  if(text == "id" || text == "1" || text == "e" || text.empty())
    return elements_.front();
  WeylElement w = WeylElement::identity(n);
  std::size_t pos = 0;
  while(pos < text.size())
    {
      bool matched = false;
      // Longest token first so that "s12" style names do not mis-split.
      for(std::size_t len = std::min<std::size_t>(4, text.size() - pos); len > 0 && !matched; --len)
        {
          const auto tok = text.substr(pos, len);
          for(int g = 0; g < n; ++g)
            if(tok == generator_name(n, g))
              {
                w = w * WeylElement::generator(n, g);
                matched = true;
                break;
              }
          if(!matched && n == 2 && tok == "c1")
            {
              w = w * parse("sc2s");
              matched = true;
            }
          if(matched)
            pos += len;
        }
      if(!matched)
        throw std::invalid_argument("unknown Weyl element '" + text + "'");
    }
  return canonical(w);
}

std::vector<RootVector> WeylGroup::negative_set(const WeylElement &w) const
{
  std::vector<RootVector> out;
  for(const auto &alpha : roots_.positive_roots())
    if(w.act(alpha).is_negative())
      out.push_back(alpha);
  return out;
}

namespace {

bool keeps_positive(const WeylElement &w, const std::vector<RootVector> &keep)
{
  return std::all_of(keep.begin(), keep.end(),
                     [&](const RootVector &a) { return w.act(a).is_positive(); });
}

}  // namespace

std::vector<WeylElement> WeylGroup::coset_reps(const std::vector<RootVector> &keep) const
{
  // Minimal coset representatives are closed under taking suffixes of reduced words,
  // so a breadth-first search that extends admissible elements on the left finds all.
  const int n = rank();
  std::vector<WeylElement> found{elements_.front()};
  std::deque<WeylElement> queue{elements_.front()};
  while(!queue.empty())
    {
      const WeylElement w = queue.front();
      queue.pop_front();
      for(int g = 0; g < n; ++g)
        {
          const WeylElement next = WeylElement::generator(n, g) * w;
          if(next.length() != static_cast<int>(negative_set(next).size()))
            continue;
          if(!keeps_positive(next, keep))
            continue;
          if(std::find(found.begin(), found.end(), next) != found.end())
            continue;
          found.push_back(canonical(next));
          queue.push_back(next);
        }
    }
  std::stable_sort(found.begin(), found.end());
  return found;
}

std::vector<WeylElement>
WeylGroup::coset_reps_brute_force(const std::vector<RootVector> &keep) const
{
  std::vector<WeylElement> out;
  for(const auto &w : elements_)
    if(keeps_positive(w, keep))
      out.push_back(w);
  return out;
}

}  // namespace sp4eis
