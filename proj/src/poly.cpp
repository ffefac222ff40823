#include "grw/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace grw {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
  normalize();
}

void Poly::normalize()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Poly Poly::constant(const Rational& c)
{
  Poly p;
  if (c != 0)
    p.c_ = {c};
  return p;
}

Poly Poly::var()
{
  return monomial(Rational(1), 1);
}

Poly Poly::monomial(const Rational& c, int exponent)
{
  if (exponent < 0)
    throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (c != 0) {
    p.c_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
    p.c_.back() = c;
  }
  return p;
}

Rational Poly::coeff(int exponent) const
{
  if (exponent < 0 || exponent >= static_cast<int>(c_.size()))
    return Rational(0);
  return c_[static_cast<std::size_t>(exponent)];
}

Rational Poly::leading() const
{
  if (c_.empty())
    throw std::logic_error("Poly::leading: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const
{
  Poly p = *this;
  for (auto& c : p.c_)
    c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o)
{
  if (c_.size() < o.c_.size())
    c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
  if (c_.size() < o.c_.size())
    c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
  if (a.is_zero() || b.is_zero())
    return Poly();
  Poly p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  p.normalize();
  return p;
}

Poly operator*(const Rational& s, Poly p)
{
  for (auto& c : p.c_)
    c *= s;
  p.normalize();
  return p;
}

Rational Poly::eval(const Rational& x) const
{
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * x + c_[i];
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& f, const Poly& g)
{
  if (g.is_zero())
    throw std::invalid_argument("Poly::divmod: division by zero polynomial");
  Poly q, r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int shift = r.degree() - g.degree();
    const Rational factor = r.leading() / g.leading();
    const Poly term = monomial(factor, shift);
    q += term;
    r -= term * g;
  }
  return {q, r};
}

bool Poly::divides(const Poly& f, const Poly& g)
{
  if (f.is_zero())
    return g.is_zero();
  return divmod(g, f).second.is_zero();
}

std::string Poly::to_string(const std::string& variable) const
{
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0)
      continue;
    if (!first)
      out << " + ";
    out << format_rational(c_[i]);
    if (i >= 1)
      out << "*" << variable;
    if (i >= 2)
      out << "^" << i;
    first = false;
  }
  return out.str();
}

Poly poly_shift(const Poly& f, const Rational& c)
{
  // Horner in the shifted variable: f(z+c) = sum a_k (z+c)^k, with the powers
  // built incrementally so each step multiplies out one binomial factor.
  Poly result;
  Poly power = Poly::one();
  const Poly zc = Poly({c, Rational(1)}); // z + c
  for (int k = 0; k <= f.degree(); ++k) {
    const Rational a = f.coeff(k);
    if (a != 0)
      result += a * power;
    power = power * zc;
  }
  return result;
}

// ---------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs)
    : low_(low), c_(std::move(coeffs))
{
  normalize();
}

void LaurentPoly::normalize()
{
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0)
    ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
  if (c_.empty())
    low_ = 0;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent)
{
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.c_ = {c};
  }
  return p;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p)
{
  return LaurentPoly(0, p.coeffs());
}

Rational LaurentPoly::coeff(int exponent) const
{
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

LaurentPoly LaurentPoly::operator-() const
{
  LaurentPoly p = *this;
  for (auto& c : p.c_)
    c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
  if (o.is_zero())
    return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<Rational> merged(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (int e = low_; e <= high(); ++e)
    merged[static_cast<std::size_t>(e - lo)] += coeff(e);
  for (int e = o.low_; e <= o.high(); ++e)
    merged[static_cast<std::size_t>(e - lo)] += o.coeff(e);
  low_ = lo;
  c_ = std::move(merged);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
  return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
  if (a.is_zero() || b.is_zero())
    return LaurentPoly();
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  p.normalize();
  return p;
}

LaurentPoly operator*(const Rational& s, LaurentPoly p)
{
  for (auto& c : p.c_)
    c *= s;
  p.normalize();
  return p;
}

Rational LaurentPoly::eval(const Rational& x) const
{
  if (is_zero())
    return Rational(0);
  if (x == 0 && low_ < 0)
    throw std::invalid_argument("LaurentPoly::eval: negative exponent at zero");
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * x + c_[i];
  // acc now equals the value of the coefficient vector as an ordinary
  // polynomial; scale by x^low.
  Rational scale(1);
  if (low_ > 0)
    for (int k = 0; k < low_; ++k)
      scale *= x;
  else
    for (int k = 0; k < -low_; ++k)
      scale /= x;
  return acc * scale;
}

std::string LaurentPoly::to_string(const std::string& variable) const
{
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational c = coeff(e);
    if (c == 0)
      continue;
    if (!first)
      out << " + ";
    out << format_rational(c);
    if (e != 0)
      out << "*" << variable << "^" << e;
    first = false;
  }
  return out.str();
}

} // namespace grw
