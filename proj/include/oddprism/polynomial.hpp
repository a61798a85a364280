#pragma once

// Real polynomials (constant term first) and largest-real-root isolation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddprism {

class RealPolynomial {
 public:
  RealPolynomial() = default;
  RealPolynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }
  explicit RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Coefficients, constant term first. Empty for the zero polynomial.
  const std::vector<double>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  double coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0.0; }
  double leading() const noexcept { return c_.empty() ? 0.0 : c_.back(); }

  double operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RealPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
    return RealPolynomial(std::move(d));
  }

  double max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<double> out(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
    return RealPolynomial(std::move(out));
  }
  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) {
    std::vector<double> out(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
    return RealPolynomial(std::move(out));
  }
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RealPolynomial(std::move(out));
  }
  friend bool operator==(const RealPolynomial& a, const RealPolynomial& b) { return a.c_ == b.c_; }

  /// e.g. "x^3 - 24x - 32".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const double v = c_[i];
      if (v == 0.0) continue;
      const double mag = std::abs(v);
      if (first) {
        if (v < 0) os << '-';
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      if (mag != 1.0 || i == 0) os << mag;
      if (i >= 1) os << 'x';
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }
  std::vector<double> c_;
};

class RootNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest real root in (0, bracket_hi]. Scans downward for the first sign
/// change, bisects it, then polishes with guarded Newton steps. Roots of even
/// multiplicity without a sign change are not detected.
inline double largest_real_root(const RealPolynomial& p, double bracket_hi) {
  if (p.degree() < 1) throw RootNotFound("polynomial has no roots to isolate");
  if (!(bracket_hi > 0.0)) throw RootNotFound("bracket must be positive");
  if (p(bracket_hi) == 0.0) return bracket_hi;

  const std::size_t steps = 4096 * static_cast<std::size_t>(p.degree());
  const double h = bracket_hi / static_cast<double>(steps);
  double hi = bracket_hi;
  double f_hi = p(hi);
  double lo = hi;
  bool found = false;
  for (std::size_t i = 1; i <= steps; ++i) {
    lo = bracket_hi - h * static_cast<double>(i);
    if (i == steps) lo = 0.0;
    const double f_lo = p(lo);
    if (f_lo == 0.0) return lo;
    if ((f_lo < 0) != (f_hi < 0)) {
      found = true;
      break;
    }
    hi = lo;
    f_hi = f_lo;
  }
  if (!found) throw RootNotFound("no sign change in (0, bracket_hi]");

  const bool rising = p(hi) > 0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = p(mid);
    if (f == 0.0) return mid;
    if ((f > 0) == rising)
      hi = mid;
    else
      lo = mid;
  }
  double x = 0.5 * (lo + hi);
  const RealPolynomial dp = p.derivative();
  for (int it = 0; it < 4; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    const double next = x - p(x) / d;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Exact integer characteristic polynomials.

using IntegerPolynomial = std::vector<std::int64_t>;  // constant term first
using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

/// det(xI - M) by the Faddeev-LeVerrier recurrence in 128-bit integers; each
/// division by the step index is exact.
inline IntegerPolynomial integer_characteristic_polynomial(const IntegerMatrix& m) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("matrix must be square");
  using Big = __int128;
  std::vector<std::vector<Big>> a(k, std::vector<Big>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];

  std::vector<Big> c(k + 1, 0);
  c[k] = 1;
  std::vector<std::vector<Big>> acc(k, std::vector<Big>(k, 0));  // M_{i}
  for (std::size_t step = 1; step <= k; ++step) {
    // M_step = A * M_{step-1} + c_{k-step+1} I
    std::vector<std::vector<Big>> next(k, std::vector<Big>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Big s = 0;
        for (std::size_t t = 0; t < k; ++t) s += a[i][t] * acc[t][j];
        next[i][j] = s + (i == j ? c[k - step + 1] : 0);
      }
    acc = std::move(next);
    Big trace = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < k; ++t) trace += a[i][t] * acc[t][i];
    c[k - step] = -trace / static_cast<Big>(step);
  }
  IntegerPolynomial out(k + 1);
  for (std::size_t i = 0; i <= k; ++i) out[i] = static_cast<std::int64_t>(c[i]);
  return out;
}

inline RealPolynomial to_real(const IntegerPolynomial& p) {
  std::vector<double> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<double>(p[i]);
  return RealPolynomial(std::move(c));
}

}  // namespace oddprism
