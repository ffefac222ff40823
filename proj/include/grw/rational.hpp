#ifndef GRW_RATIONAL_HPP
#define GRW_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace grw {

/// Exact rational scalar used throughout the workbench.  All arithmetic is
/// exact; every comparison is decidable.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Builds p/q in lowest terms.  Routing construction through the division
/// operator guarantees canonical form (positive denominator, gcd 1).
inline Rational frac(long p, long q)
{
  if (q == 0)
    throw std::invalid_argument("frac: zero denominator");
  return Rational(p) / Rational(q);
}

/// Canonical serialization: always "p/q", including "3/1" and "0/1", so that
/// reports are unambiguous and byte-stable.
inline std::string format_rational(const Rational& r)
{
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".  Rejects empty strings, junk and
/// zero denominators.  The result is canonicalized by exact division.
inline Rational parse_rational(const std::string& s)
{
  const auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  };
  if (s.empty())
    throw bad();
  const auto slash = s.find('/');
  const std::string ps = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string qs = slash == std::string::npos ? "1" : s.substr(slash + 1);
  const auto is_int = [](const std::string& t) {
    if (t.empty())
      return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        return false;
    return true;
  };
  if (!is_int(ps) || !is_int(qs))
    throw bad();
  const Integer p(ps), q(qs);
  if (q == 0)
    throw bad();
  return Rational(p) / Rational(q);
}

} // namespace grw

#endif
