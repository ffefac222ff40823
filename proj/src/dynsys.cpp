#include "grw/dynsys.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "grw/rng.hpp"
#include "grw/subspace.hpp"

namespace grw {

namespace {

Permutation h_power(const FiniteDynSystem& sys, long n)
{
  const Permutation base = n >= 0 ? sys.h : sys.h.inverse();
  Permutation out = Permutation::identity(sys.space.size());
  for (long k = 0; k < (n >= 0 ? n : -n); ++k)
    out = out.then(base);
  return out;
}

void require_valid(const FiniteDynSystem& sys, const char* who)
{
  const auto problems = validate_dynsys(sys);
  if (!problems.empty()) {
    std::ostringstream out;
    out << who << ": invalid system: ";
    for (std::size_t i = 0; i < problems.size(); ++i)
      out << (i ? "; " : "") << problems[i];
    throw std::invalid_argument(out.str());
  }
}

void prune_zeros(CrossedElement& a)
{
  for (auto it = a.begin(); it != a.end();) {
    if (it->second == Vec::Zero(it->second.size()))
      it = a.erase(it);
    else
      ++it;
  }
}

} // namespace

std::vector<std::string> validate_dynsys(const FiniteDynSystem& sys)
{
  std::vector<std::string> problems;
  if (sys.space.size() < 1)
    problems.push_back("the point set is empty");
  try {
    validate_permutation(sys.h);
  } catch (const std::exception& e) {
    problems.push_back(std::string("h is not a permutation: ") + e.what());
    return problems;
  }
  if (sys.h.size() != sys.space.size())
    problems.push_back("h permutes the wrong number of points");
  return problems;
}

std::vector<int> per_n(const FiniteDynSystem& sys, long n)
{
  require_valid(sys, "per_n");
  const Permutation hn = h_power(sys, n);
  std::vector<int> fixed;
  for (int x = 0; x < sys.space.size(); ++x)
    if (hn.apply(x) == x)
      fixed.push_back(x);
  return fixed;
}

std::vector<int> periodic_points(const FiniteDynSystem& sys)
{
  require_valid(sys, "periodic_points");
  std::vector<int> result;
  for (int x = 0; x < sys.space.size(); ++x) {
    int y = sys.h.apply(x);
    // The forward orbit of x is finite, so it returns to x.
    while (y != x)
      y = sys.h.apply(y);
    result.push_back(x);
  }
  return result;
}

std::vector<int> aperiodic_points(const FiniteDynSystem& sys)
{
  const std::vector<int> per = periodic_points(sys);
  std::vector<int> out;
  int next = 0;
  for (int x = 0; x < sys.space.size(); ++x) {
    if (next < static_cast<int>(per.size()) && per[next] == x)
      ++next;
    else
      out.push_back(x);
  }
  return out;
}

long order_of_map(const FiniteDynSystem& sys)
{
  require_valid(sys, "order_of_map");
  long order = 1;
  for (const std::vector<int>& orbit : orbits(sys.space.size(), {sys.h}))
    order = std::lcm(order, static_cast<long>(orbit.size()));
  return order;
}

bool is_minimal(const FiniteDynSystem& sys)
{
  require_valid(sys, "is_minimal");
  return orbits(sys.space.size(), {sys.h}).size() == 1;
}

GSimpleVerdict z_simple_coefficients(const FiniteDynSystem& sys)
{
  require_valid(sys, "z_simple_coefficients");
  return is_g_simple(sys.space, {PermutationInduced{sys.h}});
}

CrossedElement crossed_monomial(const FiniteDynSystem& sys, long n, Vec f)
{
  require_valid(sys, "crossed_monomial");
  if (f.size() != sys.space.size())
    throw std::invalid_argument("crossed_monomial: coefficient has the wrong dimension");
  CrossedElement out;
  out[n] = std::move(f);
  prune_zeros(out);
  return out;
}

CrossedElement crossed_add(const CrossedElement& a, const CrossedElement& b)
{
  CrossedElement out = a;
  for (const auto& [n, f] : b) {
    auto it = out.find(n);
    if (it == out.end())
      out.emplace(n, f);
    else
      it->second += f;
  }
  prune_zeros(out);
  return out;
}

CrossedElement crossed_sub(const CrossedElement& a, const CrossedElement& b)
{
  CrossedElement negated;
  for (const auto& [n, f] : b)
    negated.emplace(n, Vec(-f));
  return crossed_add(a, negated);
}

CrossedElement crossed_mul(const FiniteDynSystem& sys, const CrossedElement& a,
                           const CrossedElement& b)
{
  require_valid(sys, "crossed_mul");
  CrossedElement out;
  for (const auto& [n, f] : a) {
    const PermutationInduced sigma_n{h_power(sys, n)};
    for (const auto& [m, g] : b) {
      const Vec term = f.cwiseProduct(apply_automorphism(sigma_n, g));
      auto it = out.find(n + m);
      if (it == out.end())
        out.emplace(n + m, term);
      else
        it->second += term;
    }
  }
  prune_zeros(out);
  return out;
}

CommutantMembershipReport commutant_membership(const FiniteDynSystem& sys,
                                               const CrossedElement& a)
{
  require_valid(sys, "commutant_membership");
  CommutantMembershipReport report;
  for (const auto& [n, f] : a) {
    const Permutation hn = h_power(sys, n);
    std::vector<int> bad;
    for (int x = 0; x < sys.space.size(); ++x)
      if (f(x) != 0 && hn.apply(x) != x)
        bad.push_back(x);
    if (!bad.empty()) {
      report.member = false;
      report.violations.emplace(n, std::move(bad));
    }
  }
  return report;
}

DynSysVerdicts dynsys_verdicts(const FiniteDynSystem& sys)
{
  require_valid(sys, "dynsys_verdicts");
  DynSysVerdicts v;
  v.minimal = is_minimal(sys);
  v.z_simple = z_simple_coefficients(sys);
  v.minimal_matches_z_simple = (v.minimal == v.z_simple.g_simple);

  const long ord = order_of_map(sys);
  v.top_free = false;
  v.top_free_reason = "h^" + std::to_string(ord) +
                      " fixes every point, so the nonzero power " + std::to_string(ord) +
                      " has periodic points everywhere; a finite nonempty system is "
                      "never topologically free";

  // Shortest cycle: its indicator commutes with every function at a nonzero
  // degree, so the commutant of Q^X exceeds Q^X.
  const auto orbit_list = orbits(sys.space.size(), {sys.h});
  std::size_t shortest = 0;
  for (std::size_t i = 1; i < orbit_list.size(); ++i)
    if (orbit_list[i].size() < orbit_list[shortest].size())
      shortest = i;
  const long cycle = static_cast<long>(orbit_list[shortest].size());
  Vec indicator = Vec::Zero(sys.space.size());
  indicator(orbit_list[shortest][0]) = 1;
  const CrossedElement witness = crossed_monomial(sys, cycle, indicator);
  if (!commutant_membership(sys, witness).member)
    throw std::logic_error("dynsys_verdicts: shortest-cycle witness left the commutant");
  v.max_commutative = false;
  v.commutant_witness = witness;

  v.simple = false;
  if (!v.minimal) {
    v.simple_reason = "not minimal: functions supported on the orbit of point " +
                      std::to_string(orbit_list[0][0]) +
                      " form a proper nonzero two-sided ideal in every degree";
  } else {
    v.simple_reason = "minimal, yet never simple: u_" + std::to_string(ord) +
                      " - 1 maps to (t - 1)I in the faithful matrix picture, which "
                      "evaluation at t = 1 kills while it keeps the unity";
  }
  return v;
}

LaurentMatrix::LaurentMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows * cols), LaurentPoly::zero())
{
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("LaurentMatrix: negative dimension");
}

LaurentMatrix LaurentMatrix::identity(Index n)
{
  LaurentMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    m.at(i, i) = LaurentPoly::one();
  return m;
}

LaurentPoly& LaurentMatrix::at(Index i, Index j)
{
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("LaurentMatrix::at");
  return entries_[static_cast<std::size_t>(i * cols_ + j)];
}

const LaurentPoly& LaurentMatrix::at(Index i, Index j) const
{
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("LaurentMatrix::at");
  return entries_[static_cast<std::size_t>(i * cols_ + j)];
}

LaurentMatrix LaurentMatrix::pow(int k) const
{
  if (rows_ != cols_)
    throw std::invalid_argument("LaurentMatrix::pow: matrix not square");
  if (k < 0)
    throw std::invalid_argument("LaurentMatrix::pow: negative exponent");
  LaurentMatrix out = identity(rows_);
  for (int i = 0; i < k; ++i)
    out = out * (*this);
  return out;
}

Mat LaurentMatrix::eval(const Rational& x) const
{
  Mat out(rows_, cols_);
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j)
      out(i, j) = at(i, j).eval(x);
  return out;
}

bool LaurentMatrix::is_zero() const
{
  for (const LaurentPoly& e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("LaurentMatrix: shape mismatch in +");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] += b.entries_[i];
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("LaurentMatrix: shape mismatch in -");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] -= b.entries_[i];
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b)
{
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("LaurentMatrix: shape mismatch in *");
  LaurentMatrix out(a.rows_, b.cols_);
  for (Index i = 0; i < a.rows_; ++i)
    for (Index k = 0; k < a.cols_; ++k) {
      const LaurentPoly& left = a.at(i, k);
      if (left.is_zero())
        continue;
      for (Index j = 0; j < b.cols_; ++j)
        out.at(i, j) += left * b.at(k, j);
    }
  return out;
}

LaurentMatrix operator*(const LaurentPoly& s, LaurentMatrix m)
{
  for (Index i = 0; i < m.rows_; ++i)
    for (Index j = 0; j < m.cols_; ++j)
      m.at(i, j) = s * m.at(i, j);
  return m;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

/// Orbit positions x_i = h^i(x_0), x_0 = point 0; valid for single orbits.
std::vector<int> orbit_order(const FiniteDynSystem& sys)
{
  if (!is_minimal(sys))
    throw std::invalid_argument("matrix picture requires a single orbit");
  std::vector<int> order;
  int x = 0;
  for (int i = 0; i < sys.space.size(); ++i) {
    order.push_back(x);
    x = sys.h.apply(x);
  }
  return order;
}

} // namespace

LaurentMatrix pi_shift_matrix(const FiniteDynSystem& sys, long n)
{
  const Index p = orbit_order(sys).size();
  LaurentMatrix step(p, p);
  if (n >= 0) {
    // The down-shift: e_j -> e_{j-1}, with e_0 -> t e_{p-1}.
    for (Index j = 1; j < p; ++j)
      step.at(j - 1, j) = LaurentPoly::one();
    step.at(p - 1, 0) = LaurentPoly::monomial(Rational(1), 1);
  } else {
    // Its inverse: e_j -> e_{j+1}, with e_{p-1} -> t^-1 e_0.
    for (Index j = 0; j + 1 < p; ++j)
      step.at(j + 1, j) = LaurentPoly::one();
    step.at(0, p - 1) = LaurentPoly::monomial(Rational(1), -1);
  }
  return step.pow(static_cast<int>(n >= 0 ? n : -n));
}

LaurentMatrix pi_of(const FiniteDynSystem& sys, const CrossedElement& a)
{
  const std::vector<int> order = orbit_order(sys);
  const Index p = static_cast<Index>(order.size());
  LaurentMatrix out(p, p);
  for (const auto& [n, f] : a) {
    if (f.size() != sys.space.size())
      throw std::invalid_argument("pi_of: coefficient has the wrong dimension");
    LaurentMatrix diag(p, p);
    for (Index i = 0; i < p; ++i)
      diag.at(i, i) = LaurentPoly::from_poly(Poly::constant(f(order[i])));
    out = out + diag * pi_shift_matrix(sys, n);
  }
  return out;
}

PiReport verify_pi(const FiniteDynSystem& sys, int degree_window, int samples,
                   std::uint64_t seed)
{
  require_valid(sys, "verify_pi");
  if (degree_window < 0)
    throw std::invalid_argument("verify_pi: negative degree window");
  if (samples < 1)
    throw std::invalid_argument("verify_pi: need at least one sample");
  const std::vector<int> order = orbit_order(sys); // throws unless one orbit
  const int p = static_cast<int>(order.size());
  const int D = degree_window;

  PiReport report;
  report.p = p;
  report.degree_window = D;
  report.samples = samples;
  report.seed = seed;
  const auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  // Multiplicativity on random pairs, exact (entries are full Laurent
  // polynomials, nothing is truncated).
  report.homomorphism_on_samples = true;
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    CrossedElement a, b;
    for (int parts = 0; parts < 2; ++parts) {
      a = crossed_add(a, crossed_monomial(sys, rng.int_in(-2, 2),
                                          rng.vector(sys.space.size())));
      b = crossed_add(b, crossed_monomial(sys, rng.int_in(-2, 2),
                                          rng.vector(sys.space.size())));
    }
    if (pi_of(sys, crossed_mul(sys, a, b)) != pi_of(sys, a) * pi_of(sys, b)) {
      report.homomorphism_on_samples = false;
      fail("pi(ab) != pi(a) pi(b) at sample " + std::to_string(k));
      break;
    }
  }

  const LaurentMatrix u = pi_shift_matrix(sys, 1);
  const LaurentMatrix t_identity =
      LaurentPoly::monomial(Rational(1), 1) * LaurentMatrix::identity(p);
  report.shift_power_is_t = (u.pow(p) == t_identity);
  if (!report.shift_power_is_t)
    fail("pi(u_1)^p != t I");

  // Window coordinates: exponents |e| <= B = D + 1 at every matrix position.
  const int B = D + 1;
  const Index ambient = static_cast<Index>(p) * p * (2 * B + 1);
  const auto coordinate = [&](Index i, Index j, int e) {
    return (i * p + j) * (2 * B + 1) + (e + B);
  };
  const long N = static_cast<long>(p) * (D + 1);
  report.domain_dim = static_cast<Index>(p) * (2 * N + 1);
  Mat image(report.domain_dim, ambient);
  image.setZero();
  Index row = 0;
  for (long n = -N; n <= N; ++n)
    for (int x = 0; x < p; ++x, ++row) {
      Vec f = Vec::Zero(p);
      f(x) = 1;
      const LaurentMatrix m = pi_of(sys, crossed_monomial(sys, n, f));
      for (Index i = 0; i < p; ++i)
        for (Index j = 0; j < p; ++j) {
          const LaurentPoly& entry = m.at(i, j);
          for (int e = entry.low(); e <= entry.high(); ++e)
            if (entry.coeff(e) != 0) {
              if (e < -B || e > B)
                throw std::logic_error("verify_pi: image exponent left the window");
              image(row, coordinate(i, j, e)) = entry.coeff(e);
            }
        }
    }
  const Subspace image_space = Subspace::from_rows(image);
  report.image_rank = image_space.dim();
  report.injective_on_window = (report.image_rank == report.domain_dim);
  if (!report.injective_on_window)
    fail("pi drops rank on the degree window");

  // Surjectivity onto W_D: every matrix unit E_ij t^e with |e| <= D is hit.
  report.window_dim = static_cast<Index>(p) * p * (2 * D + 1);
  report.window_surjective = true;
  for (Index i = 0; i < p && report.window_surjective; ++i)
    for (Index j = 0; j < p && report.window_surjective; ++j)
      for (int e = -D; e <= D && report.window_surjective; ++e) {
        Vec unit = Vec::Zero(ambient);
        unit(coordinate(i, j, e)) = 1;
        if (!image_space.contains(unit)) {
          report.window_surjective = false;
          fail("matrix unit ( " + std::to_string(i) + ", " + std::to_string(j) +
               " ) t^" + std::to_string(e) + " is not in the image window");
        }
      }

  // Evaluation certificate: pi(u_p - 1) = (t - 1)I dies at t = 1, the unity
  // does not, and evaluation respects products (it is a ring map), so the
  // two-sided ideal generated by u_p - 1 is proper and nonzero.
  const Vec ones = Vec::Constant(p, Rational(1));
  const CrossedElement escape = crossed_sub(crossed_monomial(sys, p, ones),
                                            crossed_monomial(sys, 0, ones));
  const LaurentMatrix image_escape = pi_of(sys, escape);
  const LaurentMatrix expected =
      (LaurentPoly::monomial(Rational(1), 1) - LaurentPoly::one()) *
      LaurentMatrix::identity(p);
  report.unit_ideal_escape = !image_escape.is_zero() && image_escape == expected &&
                             image_escape.eval(Rational(1)) == Mat::Zero(p, p) &&
                             pi_of(sys, crossed_monomial(sys, 0, ones)).eval(Rational(1)) ==
                                 Mat(Mat::Identity(p, p));
  if (!report.unit_ideal_escape)
    fail("the t = 1 evaluation certificate failed");

  return report;
}

} // namespace grw
