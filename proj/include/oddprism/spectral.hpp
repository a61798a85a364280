#pragma once

// Adjacency spectral radius and Perron vectors, equitable partitions and
// their quotient matrices, and the characteristic polynomials attached to the
// spectral extremal construction K_1 v T(n-1,2).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddprism/graph.hpp"
#include "oddprism/polynomial.hpp"

namespace oddprism {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultIterationCap = 1'000'000;

struct SpectralResult {
  double radius = 0.0;
  /// Max-entry-normalised eigenvector; zero outside the dominant component.
  std::vector<double> vector;
  std::size_t iterations = 0;
  double residual = 0.0;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

namespace detail {

struct ComponentResult {
  double radius;
  std::vector<double> vector;  // indexed by position in the component
  std::size_t iterations;
  double residual;
};

// Power iteration on A + I for one connected component given as adjacency
// lists over local ids. Rayleigh quotient estimate; stops when both the
// estimate change and the eigen-residual fall under tolerance.
inline ComponentResult shifted_power_iteration(const std::vector<std::vector<std::size_t>>& adj,
                                               double tol, std::size_t cap) {
  const std::size_t n = adj.size();
  if (n == 1) return {0.0, {1.0}, 0, 0.0};
  std::vector<double> x(n, 1.0);
  std::vector<double> ax(n);
  double lambda = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  const double residual_tol = tol * static_cast<double>(n);
  for (std::size_t it = 1; it <= cap; ++it) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double s = 0.0;
      for (std::size_t w : adj[v]) s += x[w];
      ax[v] = s;
      num += x[v] * s;
      den += x[v] * x[v];
    }
    lambda = num / den;
    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual = std::max(residual, std::abs(ax[v] - lambda * x[v]));
    if (std::abs(lambda - prev) < tol && residual < residual_tol) return {lambda, x, it, residual};
    prev = lambda;
    double top = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      ax[v] += x[v];
      top = std::max(top, ax[v]);
    }
    for (std::size_t v = 0; v < n; ++v) x[v] = ax[v] / top;
  }
  throw NonConvergence("spectral radius: iteration cap reached (residual " +
                           std::to_string(residual) + ")",
                       lambda);
}

}  // namespace detail

/// Largest adjacency eigenvalue, taken over components for disconnected input.
inline SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTolerance,
                                      std::size_t cap = kDefaultIterationCap) {
  if (g.order() == 0) throw std::invalid_argument("spectral radius of the empty graph");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  SpectralResult best;
  best.radius = -1.0;
  std::size_t total_iterations = 0;
  std::vector<std::size_t> local(g.order());
  for (const auto& comp : connected_components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::vector<std::size_t>> adj(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i])) adj[i].push_back(local[w]);
    auto r = detail::shifted_power_iteration(adj, tol, cap);
    total_iterations += r.iterations;
    if (r.radius > best.radius) {
      best.radius = r.radius;
      best.residual = r.residual;
      best.vector.assign(g.order(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) best.vector[comp[i]] = r.vector[i];
    }
  }
  best.iterations = total_iterations;
  return best;
}

/// Perron vector of a connected graph, normalised to max entry 1.
inline SpectralResult perron_vector(const Graph& g, double tol = kDefaultTolerance) {
  if (!is_connected(g)) throw std::invalid_argument("Perron vector requires a connected graph");
  return spectral_radius(g, tol);
}

/// 2e(G)/n, the Rayleigh quotient of the all-ones vector.
inline double rayleigh_lower_bound(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("Rayleigh bound of the empty graph");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.order());
}

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

/// Largest eigenvalue by a full symmetric eigendecomposition. Independent of
/// the iterative route; used to cross-check it.
inline double dense_spectral_radius(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("spectral radius of the empty graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

// ---------------------------------------------------------------------------
// Equitable partitions.

class VertexPartition {
 public:
  VertexPartition() = default;

  /// Block ids must be dense 0..k-1.
  explicit VertexPartition(std::vector<std::size_t> block_of) : block_of_(std::move(block_of)) {
    for (std::size_t b : block_of_) blocks_ = std::max(blocks_, b + 1);
    std::vector<char> used(blocks_, 0);
    for (std::size_t b : block_of_) used[b] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end())
      throw std::invalid_argument("partition block ids must be dense");
  }

  static VertexPartition trivial(std::size_t n) {
    return VertexPartition(std::vector<std::size_t>(n, 0));
  }

  std::size_t order() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }
  const std::vector<std::size_t>& assignment() const noexcept { return block_of_; }

  std::vector<std::vector<Vertex>> blocks() const {
    std::vector<std::vector<Vertex>> out(blocks_);
    for (Vertex v = 0; v < block_of_.size(); ++v) out[block_of_[v]].push_back(v);
    return out;
  }

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> out(blocks_, 0);
    for (std::size_t b : block_of_) ++out[b];
    return out;
  }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t blocks_ = 0;
};

/// b_ij = number of block-j neighbours of any vertex of block i.
struct QuotientMatrix {
  IntegerMatrix entries;
  std::vector<std::size_t> block_sizes;

  std::size_t size() const noexcept { return entries.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
};

class NotEquitable : public std::runtime_error {
 public:
  NotEquitable(Vertex u, Vertex v, std::size_t target_block)
      : std::runtime_error("partition is not equitable: vertices " + std::to_string(u) + " and " +
                           std::to_string(v) + " differ in block-" + std::to_string(target_block) +
                           " neighbour count"),
        u_(u), v_(v) {}
  Vertex first() const noexcept { return u_; }
  Vertex second() const noexcept { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

namespace detail {

inline void check_partition(const Graph& g, const VertexPartition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition order differs from graph order");
}

inline std::vector<std::size_t> block_degrees(const Graph& g, const VertexPartition& p, Vertex v) {
  std::vector<std::size_t> counts(p.block_count(), 0);
  for (Vertex w : g.neighbors(v)) ++counts[p.block_of(w)];
  return counts;
}

// First vertex pair in the same block whose neighbour counts into some block differ.
inline std::optional<std::pair<std::pair<Vertex, Vertex>, std::size_t>> equitability_violation(
    const Graph& g, const VertexPartition& p) {
  check_partition(g, p);
  std::vector<std::optional<std::pair<Vertex, std::vector<std::size_t>>>> reference(p.block_count());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto counts = block_degrees(g, p, v);
    auto& ref = reference[p.block_of(v)];
    if (!ref) {
      ref.emplace(v, std::move(counts));
      continue;
    }
    for (std::size_t j = 0; j < counts.size(); ++j)
      if (counts[j] != ref->second[j]) return std::make_pair(std::make_pair(ref->first, v), j);
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_equitable(const Graph& g, const VertexPartition& p) {
  return !detail::equitability_violation(g, p).has_value();
}

inline QuotientMatrix quotient_matrix(const Graph& g, const VertexPartition& p) {
  if (auto bad = detail::equitability_violation(g, p))
    throw NotEquitable(bad->first.first, bad->first.second, bad->second);
  QuotientMatrix q;
  q.block_sizes = p.block_sizes();
  q.entries.assign(p.block_count(), std::vector<std::int64_t>(p.block_count(), 0));
  for (const auto& block : p.blocks()) {
    const auto counts = detail::block_degrees(g, p, block.front());
    for (std::size_t j = 0; j < counts.size(); ++j)
      q.entries[p.block_of(block.front())][j] = static_cast<std::int64_t>(counts[j]);
  }
  return q;
}

/// Colour refinement from `initial` until the block count stops growing.
/// New block ids follow the order of each block's smallest vertex.
inline VertexPartition coarsest_equitable_partition(const Graph& g, const VertexPartition& initial) {
  detail::check_partition(g, initial);
  const std::size_t n = g.order();
  std::vector<std::size_t> colour = initial.assignment();
  std::size_t colours = initial.block_count();
  // Renumber the initial colouring by first appearance.
  {
    std::map<std::size_t, std::size_t> remap;
    for (auto& c : colour) c = remap.try_emplace(c, remap.size()).first->second;
  }
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signature_ids;
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> sig(colours + 1, 0);
      sig[0] = colour[v];
      for (Vertex w : g.neighbors(v)) ++sig[colour[w] + 1];
      next[v] = signature_ids.try_emplace(std::move(sig), signature_ids.size()).first->second;
    }
    const std::size_t next_colours = signature_ids.size();
    colour = std::move(next);
    if (next_colours == colours) break;
    colours = next_colours;
  }
  return VertexPartition(std::move(colour));
}

// ---------------------------------------------------------------------------
// Quotient spectra.

/// det(xI - B) with exact integer coefficients; blocks limited to 6.
inline RealPolynomial quotient_char_poly(const QuotientMatrix& b) {
  if (b.size() > 6) throw std::invalid_argument("quotient characteristic polynomial limited to 6 blocks");
  return to_real(integer_characteristic_polynomial(b.entries));
}

/// Largest eigenvalue of a nonnegative quotient matrix. Power iteration on
/// B + I; for at most four blocks a failed iteration falls back to root
/// isolation on the characteristic polynomial.
inline double quotient_spectral_radius(const QuotientMatrix& b, double tol = kDefaultTolerance,
                                       std::size_t cap = kDefaultIterationCap) {
  const std::size_t k = b.size();
  if (k == 0) throw std::invalid_argument("empty quotient matrix");
  for (const auto& row : b.entries)
    for (auto v : row)
      if (v < 0) throw std::invalid_argument("quotient matrix must be nonnegative");
  std::vector<double> x(k, 1.0);
  std::vector<double> y(k);
  double lambda = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= cap; ++it) {
    double top = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j) s += static_cast<double>(b.entries[i][j]) * x[j];
      y[i] = s;
    }
    // x has max entry 1, so max_i (Bx)_i estimates the radius.
    lambda = *std::max_element(y.begin(), y.end());
    double residual = 0.0;
    for (std::size_t i = 0; i < k; ++i) residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
    if (std::abs(lambda - prev) < tol && residual < tol * static_cast<double>(k)) return lambda;
    prev = lambda;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] += x[i];
      top = std::max(top, y[i]);
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / top;
  }
  if (k <= 4) {
    double bound = 1.0;
    for (const auto& row : b.entries) {
      double s = 0.0;
      for (auto v : row) s += static_cast<double>(v);
      bound = std::max(bound, s + 1.0);
    }
    return largest_real_root(quotient_char_poly(b), bound);
  }
  throw NonConvergence("quotient spectral radius: iteration cap reached", lambda);
}

// ---------------------------------------------------------------------------
// Characteristic polynomials of the joined star/triangle family
// (rC_3 u K_{1,s}) v n2 K_1 and of the apex graph K_1 v K_{n1,n2}.

/// x^4 - 2x^3 - (n2(s+3r+1)+s)x^2 + 2(n2+s)x + 3 n2 s r + 4 n2 s, as-printed form.
inline RealPolynomial star_triangle_quartic(std::size_t r, std::size_t s, std::size_t n2) {
  const auto R = static_cast<double>(r);
  const auto S = static_cast<double>(s);
  const auto N2 = static_cast<double>(n2);
  return RealPolynomial{3 * N2 * S * R + 4 * N2 * S, 2 * (N2 + S), -(N2 * (S + 3 * R + 1) + S), -2.0, 1.0};
}

/// As-printed cubic factor x^3 - (n2(n1+1)+n1)x - 2 for K_1 v K_{n1,n2}.
inline RealPolynomial apex_cubic_as_printed(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("apex cubic needs n1, n2 >= 1");
  const auto a = static_cast<double>(n1);
  const auto b = static_cast<double>(n2);
  return RealPolynomial{-2.0, -(b * (a + 1) + a), 0.0, 1.0};
}

/// As-printed cubic for the rebalanced K_1 v K_{n1-1,n2+1}:
/// x^3 - ((n2+1)n1 + n1 - 1)x - 2.
inline RealPolynomial rebalanced_apex_cubic_as_printed(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("apex cubic needs n1, n2 >= 1");
  const auto a = static_cast<double>(n1);
  const auto b = static_cast<double>(n2);
  return RealPolynomial{-2.0, -((b + 1) * a + a - 1), 0.0, 1.0};
}

/// As-printed factorisation (x-2)(x^3 - (n2(n-n2) + (n-n2-1))x - 2), n = n1+n2+1.
inline RealPolynomial apex_quartic_factored_as_printed(std::size_t n1, std::size_t n2) {
  const auto n = static_cast<double>(n1 + n2 + 1);
  const auto b = static_cast<double>(n2);
  return RealPolynomial{-2.0, 1.0} * RealPolynomial{-2.0, -(b * (n - b) + (n - b - 1)), 0.0, 1.0};
}

/// Characteristic polynomial of the apex quotient of K_1 v K_{n1,n2}:
/// x^3 - (n1 n2 + n1 + n2)x - 2 n1 n2. Agrees with the as-printed cubic
/// except in the constant term.
inline RealPolynomial apex_cubic(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("apex cubic needs n1, n2 >= 1");
  const auto a = static_cast<double>(n1);
  const auto b = static_cast<double>(n2);
  return RealPolynomial{-2 * a * b, -(a * b + a + b), 0.0, 1.0};
}

/// Blocks {apex}, part of size n1, part of size n2.
inline QuotientMatrix apex_quotient(std::size_t n1, std::size_t n2) {
  const auto a = static_cast<std::int64_t>(n1);
  const auto b = static_cast<std::int64_t>(n2);
  return {{{0, a, b}, {1, 0, b}, {1, a, 0}}, {1, n1, n2}};
}

// ---------------------------------------------------------------------------
// Edge rotation.

struct RotationOutcome {
  bool premise_holds = false;
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  /// x^T A' x - x^T A x for the Perron vector x of the original graph.
  double quadratic_gain = 0.0;
};

/// Evaluates x^T A' x >= x^T A x for the Perron vector x of g. When it holds
/// the spectral radius must grow strictly; a violation beyond `tol` throws.
inline RotationOutcome rotation_test(const Graph& g, const Graph& g_prime, Vertex u,
                                     double tol = 1e-9) {
  if (g.order() != g_prime.order()) throw std::invalid_argument("rotation: graphs differ in order");
  if (u >= g.order()) throw std::out_of_range("rotation: vertex out of range");
  bool strict = false;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == u) continue;
    const bool before = g.has_edge(u, w);
    const bool after = g_prime.has_edge(u, w);
    if (before && !after) throw std::invalid_argument("rotation: N_G(u) is not contained in N_G'(u)");
    if (!before && after) strict = true;
  }
  if (!strict) throw std::invalid_argument("rotation: containment N_G(u) in N_G'(u) is not strict");
  if (!is_connected(g) || !is_connected(g_prime))
    throw std::invalid_argument("rotation: both graphs must be connected");

  const auto perron = perron_vector(g);
  const auto& x = perron.vector;
  double gain = 0.0;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const int delta = static_cast<int>(g_prime.has_edge(a, b)) - static_cast<int>(g.has_edge(a, b));
      if (delta != 0) gain += 2.0 * delta * x[a] * x[b];
    }
  RotationOutcome out;
  out.quadratic_gain = gain;
  out.lambda_before = perron.radius;
  out.premise_holds = gain >= 0.0;
  if (out.premise_holds) {
    out.lambda_after = spectral_radius(g_prime).radius;
    if (!(out.lambda_after > out.lambda_before - tol))
      throw std::logic_error("rotation: premise holds but the spectral radius did not grow");
  }
  return out;
}

}  // namespace oddprism
