#pragma once

// Exhaustive extremal search over labelled graphs: the maximum edge count and
// the maximum spectral radius of C_{2k+1} x K_2-free graphs on n vertices,
// emitted as self-checked certificates.
//
// The walk decides edges in lexicographic order, adding an edge only while the
// graph stays prism-free. Prism-freeness is closed under edge deletion, so
// this visits exactly the free graphs; leaves that admit a further free edge
// are discarded, leaving the edge-maximal ones. Both objectives are monotone
// under edge addition, so maximal graphs suffice.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oddprism/canonical.hpp"
#include "oddprism/graph.hpp"
#include "oddprism/patterns.hpp"
#include "oddprism/spectral.hpp"
#include "oddprism/turan.hpp"
#include "oddprism/words.hpp"

namespace oddprism {

enum class Objective { kEdges, kSpectral };

inline const char* to_string(Objective o) { return o == Objective::kEdges ? "edges" : "spectral"; }

inline constexpr std::size_t kEnumerationMaxN = 8;
inline constexpr std::size_t kFullScanMaxN = 7;
inline constexpr double kSearchTolerance = 1e-9;
inline constexpr double kDominanceMargin = 1e-7;

struct SearchOptions {
  unsigned threads = 1;
  double tolerance = kSearchTolerance;
  /// Workers prune only with their own bound and the seeded one, so node
  /// counts do not depend on scheduling; timing fields are zeroed.
  bool deterministic = false;
};

struct SearchStatistics {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t graphs_tested = 0;
  std::uint64_t maximal_graphs = 0;
  double elapsed_ms = 0.0;

  SearchStatistics& operator+=(const SearchStatistics& o) {
    nodes_expanded += o.nodes_expanded;
    graphs_tested += o.graphs_tested;
    maximal_graphs += o.maximal_graphs;
    return *this;
  }
};

struct Witness {
  std::string graph6;  // canonical labelling when n <= kCanonicalMaxOrder
  double value = 0.0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ExtremalCertificate {
  std::size_t n = 0;
  std::size_t k = 0;
  Objective mode = Objective::kEdges;
  double optimum = 0.0;
  std::vector<Witness> witnesses;  // sorted by graph6
  std::optional<double> formula_value;
  bool agrees = false;
  /// spectral: the witness set is exactly {K_1 v T(n-1,2)} up to isomorphism.
  /// edges: some witness is isomorphic to the closed-form construction.
  std::optional<bool> construction_isomorphic;
  std::optional<double> formula_gap;
  std::string provenance = "exhaustive";
  std::optional<std::string> assumption;
  std::vector<std::string> notes;
  SearchStatistics stats;
};

class SearchCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Edge> lex_edges(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

/// Largest spectral radius possible with m edges: (sqrt(1 + 8m) - 1) / 2.
inline double edge_spectral_bound(std::size_t m) {
  return (std::sqrt(1.0 + 8.0 * static_cast<double>(m)) - 1.0) / 2.0;
}

struct WalkState {
  Graph graph;
  std::size_t depth = 0;
  std::vector<std::size_t> skipped;  // edges left out although they kept the graph free
};

// Depth-first walk over free graphs. Sink must provide
//   bool prune(std::size_t edges, std::size_t undecided) const;
//   void visit(const Graph&);
template <class Sink>
class FreeGraphWalker {
 public:
  FreeGraphWalker(std::size_t k, const std::vector<Edge>& edges, Sink& sink)
      : k_(k), edges_(edges), sink_(sink) {}

  void walk(WalkState& s) { step(s); }

  /// Collects the undecided states at `depth`, in walk order.
  void expand_to(WalkState& s, std::size_t depth, std::vector<WalkState>& out) {
    if (s.depth == depth || s.depth == edges_.size()) {
      out.push_back(s);
      return;
    }
    branch(s, [&](WalkState& child) { expand_to(child, depth, out); });
  }

  SearchStatistics stats;

 private:
  template <class Next>
  void branch(WalkState& s, Next&& next) {
    ++stats.nodes_expanded;
    if (sink_.prune(s.graph.edge_count(), edges_.size() - s.depth)) return;
    const Edge e = edges_[s.depth];
    s.graph.add_edge(e.u, e.v);
    ++stats.graphs_tested;
    const bool free = is_prism_free(s.graph, k_);
    ++s.depth;
    if (free) next(s);
    s.graph.remove_edge(e.u, e.v);
    if (free) s.skipped.push_back(s.depth - 1);
    next(s);
    if (free) s.skipped.pop_back();
    --s.depth;
  }

  void step(WalkState& s) {
    if (s.depth == edges_.size()) {
      leaf(s);
      return;
    }
    branch(s, [&](WalkState& child) { step(child); });
  }

  void leaf(WalkState& s) {
    for (std::size_t idx : s.skipped) {
      const Edge e = edges_[idx];
      s.graph.add_edge(e.u, e.v);
      ++stats.graphs_tested;
      const bool free = is_prism_free(s.graph, k_);
      s.graph.remove_edge(e.u, e.v);
      if (free) return;
    }
    ++stats.maximal_graphs;
    sink_.visit(s.graph);
  }

  std::size_t k_;
  const std::vector<Edge>& edges_;
  Sink& sink_;
};

inline void atomic_max(std::atomic<double>& target, double value) {
  double cur = target.load(std::memory_order_relaxed);
  while (value > cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Best value plus the witnesses attaining it, keyed by canonical graph6.
class OptimumTracker {
 public:
  OptimumTracker(Objective mode, double margin) : mode_(mode), margin_(margin) {}

  void offer(const Graph& g, double value) {
    if (has_best_ && value < best_ - margin_) return;
    if (!has_best_ || value > best_ + margin_) {
      best_ = value;
      has_best_ = true;
      prune_witnesses();
    } else if (value > best_) {
      best_ = value;
      prune_witnesses();
    }
    const std::string key = g.order() <= kCanonicalMaxOrder ? canonical_graph6(g) : graph6_encode(g);
    auto [it, inserted] = witnesses_.emplace(key, value);
    if (!inserted) it->second = std::max(it->second, value);
  }

  void merge(const OptimumTracker& other) {
    if (!other.has_best_) return;
    for (const auto& [key, value] : other.witnesses_) {
      if (has_best_ && value < best_ - margin_) continue;
      if (!has_best_ || value > best_) {
        best_ = value;
        has_best_ = true;
      }
      auto [it, inserted] = witnesses_.emplace(key, value);
      if (!inserted) it->second = std::max(it->second, value);
    }
    prune_witnesses();
  }

  bool has_best() const noexcept { return has_best_; }
  double best() const noexcept { return best_; }
  const std::map<std::string, double>& witnesses() const noexcept { return witnesses_; }
  Objective mode() const noexcept { return mode_; }

 private:
  void prune_witnesses() {
    std::erase_if(witnesses_, [&](const auto& kv) { return kv.second < best_ - margin_; });
  }

  Objective mode_;
  double margin_;
  bool has_best_ = false;
  double best_ = 0.0;
  std::map<std::string, double> witnesses_;
};

struct SharedBound {
  std::atomic<double> value;
  bool use_shared;
};

class ObjectiveSink {
 public:
  ObjectiveSink(Objective mode, double seed, SharedBound& shared, double tol)
      : tracker_(mode, mode == Objective::kEdges ? 0.5 : kDominanceMargin),
        seed_(seed), shared_(shared), tol_(tol) {}

  bool prune(std::size_t edges, std::size_t undecided) const {
    double bound = seed_;
    if (tracker_.has_best()) bound = std::max(bound, tracker_.best());
    if (shared_.use_shared) bound = std::max(bound, shared_.value.load(std::memory_order_relaxed));
    const std::size_t reachable = edges + undecided;
    if (tracker_.mode() == Objective::kEdges) return static_cast<double>(reachable) < bound;
    return edge_spectral_bound(reachable) < bound - kDominanceMargin;
  }

  void visit(const Graph& g) {
    const double value = tracker_.mode() == Objective::kEdges ? static_cast<double>(g.edge_count())
                                                              : spectral_radius(g, tol_).radius;
    tracker_.offer(g, value);
    if (shared_.use_shared) atomic_max(shared_.value, value);
  }

  const OptimumTracker& tracker() const noexcept { return tracker_; }

 private:
  OptimumTracker tracker_;
  double seed_;
  SharedBound& shared_;
  double tol_;
};

// A value some known prism-free graph attains; a valid lower bound to prune with.
inline double seeded_bound(std::size_t n, std::size_t k, Objective mode, double tol) {
  std::vector<Graph> known;
  if (n >= 2) {
    known.push_back(ex_extremal_construction(n, ex_formula(n).n_a));
    known.push_back(spex_candidate(n));
  }
  double best = 0.0;
  for (const auto& g : known) {
    if (!is_prism_free(g, k)) continue;
    const double v = mode == Objective::kEdges ? static_cast<double>(g.edge_count())
                                               : spectral_radius(g, tol).radius - kDominanceMargin;
    best = std::max(best, v);
  }
  return best;
}

inline double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Walks the tree in parallel: states at a fixed prefix depth are handed out in
// order and each gets its own sink; sinks are merged in prefix order.
inline std::pair<OptimumTracker, SearchStatistics> partitioned_search(std::size_t n, std::size_t k,
                                                                     Objective mode,
                                                                     const SearchOptions& opts) {
  const auto edges = lex_edges(n);
  SharedBound shared{{0.0}, !opts.deterministic};
  const double seed = seeded_bound(n, k, mode, opts.tolerance);
  const unsigned threads = std::max(1U, opts.threads);

  ObjectiveSink root_sink(mode, seed, shared, opts.tolerance);
  FreeGraphWalker<ObjectiveSink> root(k, edges, root_sink);
  WalkState start{Graph(n), 0, {}};
  std::vector<WalkState> prefixes;
  root.expand_to(start, std::min<std::size_t>(edges.size(), threads == 1 ? 0 : 8), prefixes);

  std::vector<ObjectiveSink> sinks;
  sinks.reserve(prefixes.size());
  for (std::size_t i = 0; i < prefixes.size(); ++i) sinks.emplace_back(mode, seed, shared, opts.tolerance);
  std::vector<SearchStatistics> stats(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
      FreeGraphWalker<ObjectiveSink> walker(k, edges, sinks[i]);
      walker.walk(prefixes[i]);
      stats[i] = walker.stats;
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  OptimumTracker merged(mode, mode == Objective::kEdges ? 0.5 : kDominanceMargin);
  SearchStatistics total = root.stats;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    merged.merge(sinks[i].tracker());
    total += stats[i];
  }
  return {std::move(merged), total};
}

inline std::vector<Witness> witness_list(const OptimumTracker& t) {
  std::vector<Witness> out;
  for (const auto& [g6, value] : t.witnesses()) out.push_back({g6, value});
  return out;
}

// Re-checks every witness with the generic matcher and its objective value.
inline void reverify(const ExtremalCertificate& cert, double tol) {
  const Graph prism = odd_prism(cert.k);
  for (const auto& w : cert.witnesses) {
    const Graph g = graph6_decode(w.graph6);
    if (g.order() != cert.n) throw std::logic_error("certificate witness has the wrong order");
    if (contains_subgraph(g, prism)) throw std::logic_error("certificate witness contains the prism: " + w.graph6);
    if (cert.mode == Objective::kEdges) {
      if (static_cast<double>(g.edge_count()) != cert.optimum)
        throw std::logic_error("certificate witness edge count differs from the optimum");
    } else if (std::abs(spectral_radius(g, tol).radius - cert.optimum) > kDominanceMargin) {
      throw std::logic_error("certificate witness radius differs from the optimum");
    }
  }
}

inline void compare_with_formulas(ExtremalCertificate& cert) {
  const std::size_t prism_order = 2 * (2 * cert.k + 1);
  if (cert.n < prism_order) cert.notes.emplace_back("pattern larger than host; K_n optimal");
  if (cert.mode == Objective::kEdges) {
    if (cert.n < 2) return;
    const auto ex = ex_formula(cert.n);
    cert.formula_value = static_cast<double>(ex.value);
    cert.agrees = cert.optimum == static_cast<double>(ex.value);
    if (cert.n <= kCanonicalMaxOrder) {
      const std::string target = canonical_graph6(ex_extremal_construction(cert.n, ex.n_a));
      cert.construction_isomorphic =
          std::any_of(cert.witnesses.begin(), cert.witnesses.end(),
                      [&](const Witness& w) { return w.graph6 == target; });
    }
  } else {
    if (cert.n < 3) return;
    const auto closed = spex_closed_form(cert.n);
    cert.formula_value = closed.value;
    cert.formula_gap = std::abs(cert.optimum - closed.value);
    if (cert.n <= kCanonicalMaxOrder) {
      const std::string target = canonical_graph6(spex_candidate(cert.n));
      cert.construction_isomorphic = cert.witnesses.size() == 1 && cert.witnesses.front().graph6 == target;
    }
    cert.agrees = *cert.formula_gap <= kDominanceMargin && cert.construction_isomorphic.value_or(false);
  }
  cert.notes.emplace_back(kAsymptoticNote);
}

inline ExtremalCertificate run_brute_force(std::size_t n, std::size_t k, Objective mode,
                                           const SearchOptions& opts) {
  if (k == 0) throw std::invalid_argument("odd prism needs k >= 1");
  if (n < 1) throw std::invalid_argument("brute force needs n >= 1");
  if (n > kEnumerationMaxN)
    throw SearchCapExceeded("n = " + std::to_string(n) + " exceeds the built-in enumeration cap of " +
                            std::to_string(kEnumerationMaxN) + "; feed a graph6 stream via ingest instead");
  const auto t0 = std::chrono::steady_clock::now();
  auto [tracker, stats] = partitioned_search(n, k, mode, opts);
  ExtremalCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.mode = mode;
  cert.optimum = tracker.best();
  cert.witnesses = witness_list(tracker);
  cert.stats = stats;
  cert.stats.elapsed_ms = opts.deterministic ? 0.0 : elapsed_since(t0);
  reverify(cert, opts.tolerance);
  compare_with_formulas(cert);
  return cert;
}

}  // namespace detail

/// Calls `visit` on every edge-maximal prism-free labelled graph on n vertices.
inline SearchStatistics enumerate_maximal_free(std::size_t n, std::size_t k,
                                               const std::function<void(const Graph&)>& visit) {
  if (k == 0) throw std::invalid_argument("odd prism needs k >= 1");
  if (n > kEnumerationMaxN)
    throw SearchCapExceeded("n = " + std::to_string(n) + " exceeds the built-in enumeration cap of " +
                            std::to_string(kEnumerationMaxN) + "; feed a graph6 stream via ingest instead");
  struct Forward {
    const std::function<void(const Graph&)>& fn;
    bool prune(std::size_t, std::size_t) const { return false; }
    void visit(const Graph& g) { fn(g); }
  } sink{visit};
  const auto t0 = std::chrono::steady_clock::now();
  const auto edges = detail::lex_edges(n);
  detail::FreeGraphWalker<Forward> walker(k, edges, sink);
  detail::WalkState start{Graph(n), 0, {}};
  walker.walk(start);
  walker.stats.elapsed_ms = detail::elapsed_since(t0);
  return walker.stats;
}

inline ExtremalCertificate brute_force_ex(std::size_t n, std::size_t k, const SearchOptions& opts = {}) {
  return detail::run_brute_force(n, k, Objective::kEdges, opts);
}

inline ExtremalCertificate brute_force_spex(std::size_t n, std::size_t k, const SearchOptions& opts = {}) {
  return detail::run_brute_force(n, k, Objective::kSpectral, opts);
}

/// Unpruned reference: every labelled graph on n vertices, freeness decided
/// by the generic matcher.
inline ExtremalCertificate full_scan(std::size_t n, std::size_t k, Objective mode,
                                     const SearchOptions& opts = {}) {
  if (k == 0) throw std::invalid_argument("odd prism needs k >= 1");
  if (n < 1 || n > kFullScanMaxN)
    throw SearchCapExceeded("full scan supports 1 <= n <= " + std::to_string(kFullScanMaxN));
  const auto t0 = std::chrono::steady_clock::now();
  const auto edges = detail::lex_edges(n);
  const Graph prism = odd_prism(k);
  detail::OptimumTracker tracker(mode, mode == Objective::kEdges ? 0.5 : kDominanceMargin);
  SearchStatistics stats;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(edges[i].u, edges[i].v);
    ++stats.graphs_tested;
    if (contains_subgraph(g, prism)) continue;
    const double value =
        mode == Objective::kEdges ? static_cast<double>(g.edge_count()) : spectral_radius(g, opts.tolerance).radius;
    tracker.offer(g, value);
  }
  ExtremalCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.mode = mode;
  cert.optimum = tracker.best();
  cert.witnesses = detail::witness_list(tracker);
  cert.provenance = "full scan";
  cert.stats = stats;
  cert.stats.elapsed_ms = opts.deterministic ? 0.0 : detail::elapsed_since(t0);
  detail::reverify(cert, opts.tolerance);
  detail::compare_with_formulas(cert);
  return cert;
}

/// Optimises over graphs read one graph6 per line. The stream is taken to be
/// complete for its order; that is recorded, not checked.
inline ExtremalCertificate ingest_graph6_stream(std::istream& in, std::size_t k, Objective mode,
                                                const SearchOptions& opts = {}) {
  if (k == 0) throw std::invalid_argument("odd prism needs k >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  detail::OptimumTracker tracker(mode, mode == Objective::kEdges ? 0.5 : kDominanceMargin);
  SearchStatistics stats;
  std::optional<std::size_t> order;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view body = line;
    if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
    if (body.empty()) continue;
    if (body.front() == ':' || body.front() == ';' || body.front() == '&')
      throw StreamError("line " + std::to_string(line_no) + ": not a graph6 record (sparse6/digraph6 input is not supported)");
    Graph g;
    try {
      g = graph6_decode(body);
    } catch (const Graph6Error& e) {
      throw StreamError("line " + std::to_string(line_no) + ": malformed graph6: " + e.what());
    }
    if (order && *order != g.order())
      throw StreamError("line " + std::to_string(line_no) + ": mixed orders (" + std::to_string(*order) + " and " +
                        std::to_string(g.order()) + ")");
    order = g.order();
    ++stats.graphs_tested;
    if (!is_prism_free(g, k)) continue;
    ++stats.maximal_graphs;
    const double value =
        mode == Objective::kEdges ? static_cast<double>(g.edge_count()) : spectral_radius(g, opts.tolerance).radius;
    tracker.offer(g, value);
  }
  if (!order) throw StreamError("no graphs");
  if (!tracker.has_best()) throw StreamError("no prism-free graph in the stream");
  ExtremalCertificate cert;
  cert.n = *order;
  cert.k = k;
  cert.mode = mode;
  cert.optimum = tracker.best();
  cert.witnesses = detail::witness_list(tracker);
  cert.provenance = "streamed";
  cert.assumption = "input stream is complete up to isomorphism for n = " + std::to_string(*order);
  cert.stats = stats;
  cert.stats.elapsed_ms = opts.deterministic ? 0.0 : detail::elapsed_since(t0);
  detail::reverify(cert, opts.tolerance);
  detail::compare_with_formulas(cert);
  return cert;
}

struct TheoremRow {
  std::size_t n = 0;
  double ex_brute = 0.0;
  std::optional<double> ex_formula_value;
  bool ex_agrees = false;
  std::optional<bool> ex_construction_isomorphic;
  double spex_brute = 0.0;
  std::optional<double> spex_closed_form_value;
  std::optional<double> spex_gap;
  std::optional<bool> spex_candidate_unique;
  bool spex_agrees = false;
  std::string note;
};

struct TheoremReport {
  std::size_t k = 0;
  std::vector<TheoremRow> rows;
  /// Smallest n such that both objectives agree for every tested n' >= n.
  std::optional<std::size_t> agreement_from;
};

/// Side-by-side table of brute-force optima and the closed forms. Disagreement
/// at small n is data: both theorems are asymptotic.
inline TheoremReport verify_theorems(std::size_t n_lo, std::size_t n_hi, std::size_t k,
                                     const SearchOptions& opts = {}) {
  TheoremReport report;
  report.k = k;
  for (std::size_t n = n_lo; n <= n_hi && n_lo <= n_hi; ++n) {
    const auto ex = brute_force_ex(n, k, opts);
    const auto spex = brute_force_spex(n, k, opts);
    TheoremRow row;
    row.n = n;
    row.ex_brute = ex.optimum;
    row.ex_formula_value = ex.formula_value;
    row.ex_agrees = ex.agrees;
    row.ex_construction_isomorphic = ex.construction_isomorphic;
    row.spex_brute = spex.optimum;
    row.spex_closed_form_value = spex.formula_value;
    row.spex_gap = spex.formula_gap;
    row.spex_candidate_unique = spex.construction_isomorphic;
    row.spex_agrees = spex.agrees;
    row.note = n < 2 * (2 * k + 1) ? "pattern larger than host; K_n optimal" : kAsymptoticNote;
    report.rows.push_back(std::move(row));
  }
  for (std::size_t i = report.rows.size(); i-- > 0;) {
    if (!(report.rows[i].ex_agrees && report.rows[i].spex_agrees)) break;
    report.agreement_from = report.rows[i].n;
  }
  return report;
}

inline std::string to_csv(const TheoremReport& report) {
  auto opt = [](const auto& v) {
    std::ostringstream os;
    os.precision(12);
    if (v) os << *v;
    return os.str();
  };
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? std::string("1") : std::string("0")) : std::string(); };
  std::ostringstream os;
  os.precision(12);
  os << "n,k,ex_brute,ex_formula,ex_agrees,ex_construction_isomorphic,spex_brute,spex_closed_form,spex_gap,"
        "spex_candidate_unique,spex_agrees,note\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << report.k << ',' << r.ex_brute << ',' << opt(r.ex_formula_value) << ','
       << (r.ex_agrees ? 1 : 0) << ',' << flag(r.ex_construction_isomorphic) << ',' << r.spex_brute << ','
       << opt(r.spex_closed_form_value) << ',' << opt(r.spex_gap) << ',' << flag(r.spex_candidate_unique) << ','
       << (r.spex_agrees ? 1 : 0) << ",\"" << r.note << "\"\n";
  }
  return os.str();
}

}  // namespace oddprism
