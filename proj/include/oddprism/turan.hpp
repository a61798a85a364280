#pragma once

// Closed forms and constructions for the edge and spectral Turan problems of
// odd prisms. Both closed forms are asymptotic statements; evaluated at small
// n they are labelled as such.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "oddprism/graph.hpp"
#include "oddprism/polynomial.hpp"
#include "oddprism/spectral.hpp"

namespace oddprism {

inline constexpr const char* kAsymptoticNote = "formula value - asymptotic regime not guaranteed";

struct ExFormulaResult {
  std::int64_t value = 0;
  std::size_t n_a = 0;
  std::size_t j = 0;
};

/// e(K_{a,n-a}) plus an extremal P4-free graph on the part of size a:
/// a(1 + n - a) + (j^2 - 3j)/2 with j = a mod 3.
inline std::int64_t ex_split_value(std::size_t n, std::size_t n_a) {
  const auto a = static_cast<std::int64_t>(n_a);
  const auto b = static_cast<std::int64_t>(n - n_a);
  const auto j = static_cast<std::int64_t>(n_a % 3);
  return a * (1 + b) + (j * j - 3 * j) / 2;
}

/// Maximum over splits n_a + n_b = n with 1 <= n_a <= n-1; ties go to the
/// smallest n_a.
inline ExFormulaResult ex_formula(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ex formula needs n >= 2");
  ExFormulaResult best;
  bool first = true;
  for (std::size_t a = 1; a < n; ++a) {
    const auto v = ex_split_value(n, a);
    if (first || v > best.value) {
      best = {v, a, a % 3};
      first = false;
    }
  }
  return best;
}

/// floor(m/3) triangles on ids 0..; then one isolated vertex (m = 1 mod 3) or
/// one edge (m = 2 mod 3) on the last ids.
inline Graph p4_extremal_graph(std::size_t m) {
  Graph g(m);
  const std::size_t triangles = m / 3;
  for (std::size_t t = 0; t < triangles; ++t) {
    g.add_edge(3 * t, 3 * t + 1);
    g.add_edge(3 * t, 3 * t + 2);
    g.add_edge(3 * t + 1, 3 * t + 2);
  }
  if (m % 3 == 2) g.add_edge(m - 2, m - 1);
  return g;
}

/// K_{n_a, n-n_a} (part of size n_a on ids 0..n_a-1) with p4_extremal_graph(n_a)
/// laid over the first part.
inline Graph ex_extremal_construction(std::size_t n, std::size_t n_a) {
  if (n_a > n) throw std::invalid_argument("n_a must not exceed n");
  Graph g = make_complete_bipartite(n_a, n - n_a);
  for (const auto& e : p4_extremal_graph(n_a).edges()) g.add_edge(e.u, e.v);
  return g;
}

struct SpexClosedForm {
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  /// Largest root of det(xI - B) for the apex quotient B.
  double value = 0.0;
  /// Largest root of the as-printed cubic x^3 - (n2(n-n2) + (n-n2-1))x - 2.
  double as_printed_value = 0.0;
  double gap = 0.0;
  RealPolynomial quotient_polynomial;
  RealPolynomial as_printed_polynomial;
};

/// lambda(K_1 v T(n-1,2)) as the largest root of the apex quotient's
/// characteristic polynomial, alongside the as-printed cubic's root.
inline SpexClosedForm spex_closed_form(std::size_t n) {
  if (n < 3) throw std::invalid_argument("spex closed form needs n >= 3");
  SpexClosedForm out;
  out.n = n;
  out.n1 = n / 2;  // ceil((n-1)/2)
  out.n2 = (n - 1) / 2;
  out.quotient_polynomial = quotient_char_poly(apex_quotient(out.n1, out.n2));
  out.as_printed_polynomial = apex_cubic_as_printed(out.n1, out.n2);
  const auto bracket = static_cast<double>(n);
  out.value = largest_real_root(out.quotient_polynomial, bracket);
  out.as_printed_value = largest_real_root(out.as_printed_polynomial, bracket);
  out.gap = std::abs(out.value - out.as_printed_value);
  return out;
}

struct ApexFactorisationReport {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  /// Characteristic quartic of (K_{1,n1}) v n2 K_1 in star/triangle form.
  RealPolynomial quartic;
  RealPolynomial as_printed_factorisation;
  RealPolynomial derived_factorisation;  // (x - 2) * apex_cubic(n1, n2)
  bool as_printed_identity_holds = false;
  bool derived_identity_holds = false;
  double dense_radius = 0.0;
  double as_printed_cubic_residual = 0.0;  // |as-printed cubic(dense radius)|
  double derived_cubic_residual = 0.0;
  double as_printed_root = 0.0;
  double derived_root = 0.0;
  double gap = 0.0;
};

/// Compares the as-printed factorisation of the apex quartic with the one
/// obtained from the quotient determinant, on K_1 v K_{n1,n2}.
inline ApexFactorisationReport apex_factorisation_report(std::size_t n1, std::size_t n2) {
  ApexFactorisationReport r;
  r.n1 = n1;
  r.n2 = n2;
  r.quartic = star_triangle_quartic(0, n1, n2);
  r.as_printed_factorisation = apex_quartic_factored_as_printed(n1, n2);
  r.derived_factorisation = RealPolynomial{-2.0, 1.0} * apex_cubic(n1, n2);
  r.as_printed_identity_holds = r.as_printed_factorisation == r.quartic;
  r.derived_identity_holds = r.derived_factorisation == r.quartic;
  r.dense_radius = dense_spectral_radius(join(make_complete(1), make_complete_bipartite(n1, n2)));
  const auto printed = apex_cubic_as_printed(n1, n2);
  const auto derived = apex_cubic(n1, n2);
  r.as_printed_cubic_residual = std::abs(printed(r.dense_radius));
  r.derived_cubic_residual = std::abs(derived(r.dense_radius));
  const auto bracket = static_cast<double>(n1 + n2 + 1);
  r.as_printed_root = largest_real_root(printed, bracket);
  r.derived_root = largest_real_root(derived, bracket);
  r.gap = std::abs(r.derived_root - r.as_printed_root);
  return r;
}

}  // namespace oddprism
