#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons the mixed templates in boost/rational.hpp
// recurse forever; these exact overloads take precedence.
inline bool operator==(const rational<std::int64_t> &a, int b)
{
  return a.numerator() == b && a.denominator() == 1;
}

}  // namespace boost

namespace sp4eis {

using Rational = boost::rational<std::int64_t>;

/// Renders "3", "-1/2".
std::string to_string(const Rational &q);

/// Parses "3", "-1/2", "+5/4". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string &text);

inline bool is_integer(const Rational &q) { return q.denominator() == 1; }

inline double to_double(const Rational &q)
{
  return boost::rational_cast<double>(q);
}

}  // namespace sp4eis
