#include "grw/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace grw {

void MultiPoly::add_term(const std::vector<int>& e, const Rational& c)
{
  if (c == 0)
    return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c)
{
  MultiPoly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::var(int nvars, int i)
{
  if (i < 0 || i >= nvars)
    throw std::invalid_argument("MultiPoly::var: variable index out of range");
  MultiPoly p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::operator-() const
{
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_)
    c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly p(a.nvars_);
  std::vector<int> e(static_cast<std::size_t>(a.nvars_), 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

MultiPoly operator*(const Rational& s, MultiPoly p)
{
  if (s == 0)
    return MultiPoly(p.nvars_);
  for (auto& [e, c] : p.terms_)
    c *= s;
  return p;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const
{
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("MultiPoly::eval: point has wrong arity");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k)
        term *= point[i];
    acc += term;
  }
  return acc;
}

std::string MultiPoly::to_string(const std::string& stem) const
{
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first)
      out << " + ";
    out << format_rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      out << "*" << stem << i;
      if (e[i] > 1)
        out << "^" << e[i];
    }
    first = false;
  }
  return out.str();
}

namespace {

void expand(const std::vector<std::vector<MultiPoly>>& m, std::size_t row,
            std::vector<bool>& used, int sign, const MultiPoly& partial, MultiPoly& acc)
{
  const std::size_t n = m.size();
  if (row == n) {
    if (sign > 0)
      acc += partial;
    else
      acc -= partial;
    return;
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (used[col] || m[row][col].is_zero())
      continue; // structural zero: prune the whole branch
    // Cofactor sign for the minor: col is the k-th still-unused column, and we
    // expand along the minor's top row, so the sign flips by (-1)^k.
    int k = 0;
    for (std::size_t c = 0; c < col; ++c)
      if (!used[c])
        ++k;
    used[col] = true;
    expand(m, row + 1, used, (k % 2 == 0) ? sign : -sign, partial * m[row][col], acc);
    used[col] = false;
  }
}

} // namespace

MultiPoly sym_det(const std::vector<std::vector<MultiPoly>>& m)
{
  const std::size_t n = m.size();
  if (n == 0)
    throw std::invalid_argument("sym_det: empty matrix");
  if (n > static_cast<std::size_t>(kSymDetCap))
    throw std::invalid_argument("sym_det: dimension cap exceeded");
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("sym_det: matrix not square");
  const int nvars = m[0][0].nvars();
  for (const auto& row : m)
    for (const auto& entry : row)
      if (entry.nvars() != nvars)
        throw std::invalid_argument("sym_det: variable count mismatch");
  MultiPoly acc(nvars);
  std::vector<bool> used(n, false);
  expand(m, 0, used, 1, MultiPoly::constant(nvars, Rational(1)), acc);
  return acc;
}

} // namespace grw
