#pragma once

// Forbidden-subgraph detection: a generic backtracking subgraph matcher that
// serves as the reference oracle, a ladder search specialised to odd prisms,
// and the small two-coloured configurations used around the prism.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddprism/graph.hpp"
#include "oddprism/spectral.hpp"

namespace oddprism {

/// Pattern vertex id -> host vertex id.
using Embedding = std::vector<Vertex>;

enum class SearchStatus { kFound, kNotFound, kBudgetExceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::kFound; }
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

/// True iff `map` is injective and every pattern edge lands on a host edge.
inline bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& map) {
  if (map.size() != pattern.order()) return false;
  std::vector<char> used(host.order(), 0);
  for (Vertex h : map) {
    if (h >= host.order() || used[h]) return false;
    used[h] = 1;
  }
  for (const auto& e : pattern.edges())
    if (!host.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

namespace detail {

// Descending degree first, then most already-placed neighbours, ties by
// higher degree and then lower id.
inline std::vector<Vertex> pattern_search_order(const Graph& pattern) {
  const std::size_t n = pattern.order();
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n) {
        best = v;
        continue;
      }
      if (links[v] != links[best]) {
        if (links[v] > links[best]) best = v;
      } else if (pattern.degree(v) > pattern.degree(best)) {
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : pattern.neighbors(best)) ++links[w];
  }
  return order;
}

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern, std::uint64_t budget)
      : host_(host), pattern_(pattern), budget_(budget), order_(pattern_search_order(pattern)),
        map_(pattern.order(), 0), used_(host.order(), 0) {
    host_degree_ = host.degree_sequence();
    pattern_degree_ = pattern.degree_sequence();
    // For each step, the earlier steps whose pattern vertex is adjacent.
    back_links_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (pattern.has_edge(order_[i], order_[j])) back_links_[i].push_back(j);
  }

  SearchOutcome run() {
    SearchOutcome out;
    if (pattern_.order() > host_.order() || pattern_.edge_count() > host_.edge_count()) {
      out.status = SearchStatus::kNotFound;
      return out;
    }
    const bool ok = extend(0);
    out.nodes = nodes_;
    if (exhausted_) {
      out.status = SearchStatus::kBudgetExceeded;
    } else if (ok) {
      out.status = SearchStatus::kFound;
      out.embedding = map_;
    }
    return out;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    const std::size_t words = host_.words_per_row();
    // Candidates: host vertices adjacent to the images of every placed neighbour.
    std::vector<Graph::Word> cand(words, ~Graph::Word{0});
    if (host_.order() % Graph::kWordBits != 0 && words > 0)
      cand.back() = (Graph::Word{1} << (host_.order() % Graph::kWordBits)) - 1;
    for (std::size_t j : back_links_[depth]) {
      const auto row = host_.row(map_[order_[j]]);
      for (std::size_t w = 0; w < words; ++w) cand[w] &= row[w];
    }
    for (std::size_t w = 0; w < words; ++w) {
      Graph::Word bits = cand[w];
      while (bits != 0) {
        const Vertex h = w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (used_[h] || host_degree_[h] < pattern_degree_[p]) continue;
        if (++nodes_ > budget_) {
          exhausted_ = true;
          return false;
        }
        map_[p] = h;
        used_[h] = 1;
        if (extend(depth + 1)) return true;
        used_[h] = 0;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> back_links_;
  std::vector<std::size_t> host_degree_;
  std::vector<std::size_t> pattern_degree_;
  Embedding map_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Non-induced subgraph search. The embedding returned is the first one in
/// the fixed search order, with host candidates tried by ascending id.
inline SearchOutcome find_subgraph(const Graph& host, const Graph& pattern,
                                   std::uint64_t budget = kUnlimited) {
  auto out = detail::SubgraphMatcher(host, pattern, budget).run();
  if (out.embedding && !is_valid_embedding(host, pattern, *out.embedding))
    throw std::logic_error("subgraph search produced an invalid embedding");
  return out;
}

inline std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_subgraph(host, pattern).embedding;
}

// ---------------------------------------------------------------------------
// Odd prisms.

namespace detail {

// Builds the prism rung by rung: rung i is a host edge (top_i, bottom_i) with
// top_i ~ top_{i-1} and bottom_i ~ bottom_{i-1}. The prism is vertex
// transitive and a vertex stabiliser is the reflection fixing rung 0, so we
// may take top_0 to be the smallest image and require top_1 < top_{2k}.
// The layer swap is absorbed by letting bottom_0 range over all neighbours.
class PrismLadder {
 public:
  PrismLadder(const Graph& host, std::size_t k, std::uint64_t budget)
      : host_(host), len_(2 * k + 1), budget_(budget), top_(len_), bottom_(len_),
        used_(host.order(), 0) {}

  SearchOutcome run() {
    SearchOutcome out;
    const std::size_t n = host_.order();
    if (n < 2 * len_ || host_.edge_count() < 3 * len_) return out;
    for (Vertex a = 0; a < n && !exhausted_; ++a) {
      if (host_.degree(a) < 3) continue;
      for (Vertex b : host_.neighbors(a)) {
        if (b < a || host_.degree(b) < 3) continue;
        top_[0] = a;
        bottom_[0] = b;
        used_[a] = used_[b] = 1;
        if (extend(1)) return finish(out);
        used_[a] = used_[b] = 0;
        if (exhausted_) break;
      }
    }
    out.nodes = nodes_;
    if (exhausted_) out.status = SearchStatus::kBudgetExceeded;
    return out;
  }

 private:
  SearchOutcome finish(SearchOutcome& out) {
    out.status = SearchStatus::kFound;
    out.nodes = nodes_;
    Embedding e(2 * len_);
    for (std::size_t i = 0; i < len_; ++i) {
      e[2 * i] = top_[i];
      e[2 * i + 1] = bottom_[i];
    }
    out.embedding = std::move(e);
    return out;
  }

  bool extend(std::size_t i) {
    const Vertex anchor = top_[0];
    if (i == len_) {
      return top_[1] < top_[len_ - 1] && host_.has_edge(top_[len_ - 1], top_[0]) &&
             host_.has_edge(bottom_[len_ - 1], bottom_[0]);
    }
    for (Vertex t : host_.neighbors(top_[i - 1])) {
      if (used_[t] || t < anchor) continue;
      if (i == len_ - 1 && !host_.has_edge(t, top_[0])) continue;
      for (Vertex s : host_.neighbors(t)) {
        if (used_[s] || s < anchor || !host_.has_edge(s, bottom_[i - 1])) continue;
        if (i == len_ - 1 && !host_.has_edge(s, bottom_[0])) continue;
        if (++nodes_ > budget_) {
          exhausted_ = true;
          return false;
        }
        top_[i] = t;
        bottom_[i] = s;
        used_[t] = used_[s] = 1;
        if (extend(i + 1)) return true;
        used_[t] = used_[s] = 0;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Graph& host_;
  std::size_t len_;
  std::uint64_t budget_;
  std::vector<Vertex> top_;
  std::vector<Vertex> bottom_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Specialised search for C_{2k+1} x K_2. A witness is reported in the vertex
/// order of odd_prism(k).
inline SearchOutcome find_odd_prism(const Graph& host, std::size_t k,
                                    std::uint64_t budget = kUnlimited) {
  if (k == 0) throw std::invalid_argument("odd prism needs k >= 1");
  auto out = detail::PrismLadder(host, k, budget).run();
  if (out.embedding && !is_valid_embedding(host, odd_prism(k), *out.embedding))
    throw std::logic_error("prism search produced an invalid embedding");
  return out;
}

inline bool is_prism_free(const Graph& g, std::size_t k) { return !find_odd_prism(g, k).found(); }

// ---------------------------------------------------------------------------
// Two-block and two-colour configurations.

/// 4-cycle a-b-c-d-a with ab inside block 0 and cd inside block 1, returned
/// in cycle order.
inline std::optional<Embedding> find_crossing_c4(const Graph& g, const VertexPartition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition order differs from graph order");
  if (p.block_count() != 2) throw std::invalid_argument("crossing C4 needs exactly two blocks");
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    if (p.block_of(a) != 0) continue;
    for (Vertex b : g.neighbors(a)) {
      if (p.block_of(b) != 0) continue;
      for (Vertex c : g.neighbors(b)) {
        if (p.block_of(c) != 1) continue;
        for (Vertex d : g.neighbors(c)) {
          if (p.block_of(d) != 1 || !g.has_edge(d, a)) continue;
          return Embedding{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

enum class Colour : std::uint8_t { kRed = 0, kBlue = 1 };

enum class PrismStructure { kNone, kMonochromaticP4, kBicolouredC4 };

inline const char* to_string(PrismStructure s) {
  switch (s) {
    case PrismStructure::kMonochromaticP4:
      return "monochromatic P4";
    case PrismStructure::kBicolouredC4:
      return "bicoloured C4";
    case PrismStructure::kNone:
      break;
  }
  return "none";
}

struct StructureReport {
  PrismStructure kind = PrismStructure::kNone;
  std::vector<Vertex> vertices;
};

/// Path v0-v1-v2-v3 on four distinct vertices of one colour.
inline std::optional<std::vector<Vertex>> find_monochromatic_p4(const Graph& g,
                                                                const std::vector<Colour>& colour) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.neighbors(a)) {
      if (colour[b] != colour[a]) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c == a || colour[c] != colour[a]) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d == a || d == b || colour[d] != colour[a]) continue;
          return std::vector<Vertex>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

/// Cycle u-v-w-z-u with u, v red and w, z blue.
inline std::optional<std::vector<Vertex>> find_bicoloured_c4(const Graph& g,
                                                             const std::vector<Colour>& colour) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (colour[u] != Colour::kRed) continue;
    for (Vertex v : g.neighbors(u)) {
      if (colour[v] != Colour::kRed) continue;
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] != Colour::kBlue) continue;
        for (Vertex z : g.neighbors(w)) {
          if (colour[z] != Colour::kBlue || !g.has_edge(z, u)) continue;
          return std::vector<Vertex>{u, v, w, z};
        }
      }
    }
  }
  return std::nullopt;
}

/// Searches the coloured prism C_{2k+1} x K_2 (ids as in odd_prism) for a
/// monochromatic P4, then for a red-red-blue-blue C4.
inline StructureReport find_mono_p4_or_bicoloured_c4(std::size_t k, const std::vector<Colour>& colour) {
  const Graph prism = odd_prism(k);
  if (colour.size() != prism.order()) throw std::invalid_argument("colouring length must be 2(2k+1)");
  if (auto p = find_monochromatic_p4(prism, colour)) return {PrismStructure::kMonochromaticP4, *p};
  if (auto c = find_bicoloured_c4(prism, colour)) return {PrismStructure::kBicolouredC4, *c};
  return {};
}

}  // namespace oddprism
