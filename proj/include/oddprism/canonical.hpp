#pragma once

// Exact canonical labelling for small graphs: vertices are split into classes
// by an isomorphism-invariant colour refinement, and the adjacency bitstring
// is maximised over all permutations that respect the class order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddprism/graph.hpp"

namespace oddprism {

inline constexpr std::size_t kCanonicalMaxOrder = 11;

namespace detail {

// Colour refinement with colours ranked by sorted signature, so the final
// colouring does not depend on the input labelling.
inline std::vector<std::size_t> invariant_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, 0);
  std::size_t colours = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].assign(colours + 1, 0);
      sig[v][0] = colour[v];
      for (Vertex w : g.neighbors(v)) ++sig[v][colour[w] + 1];
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    std::size_t r = 0;
    for (auto& [key, id] : rank) id = r++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (rank.size() == colours) break;
    colours = rank.size();
  }
  return colour;
}

// Upper triangle in graph6 bit order packed into an integer; earlier bits are
// more significant. 55 bits suffice for 11 vertices.
inline std::uint64_t relabelled_bits(const Graph& g, const std::vector<Vertex>& label_to_vertex) {
  const std::size_t n = g.order();
  std::uint64_t bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      bits = (bits << 1) | static_cast<std::uint64_t>(g.has_edge(label_to_vertex[i], label_to_vertex[j]));
  return bits;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {
    const auto colour = invariant_colours(g);
    std::size_t colours = 0;
    for (auto c : colour) colours = std::max(colours, c + 1);
    classes_.resize(colours);
    for (Vertex v = 0; v < g.order(); ++v) classes_[colour[v]].push_back(v);
  }

  std::vector<Vertex> run() {
    labels_.clear();
    permute_class(0);
    return best_labels_;
  }

 private:
  void permute_class(std::size_t c) {
    if (c == classes_.size()) {
      const auto bits = relabelled_bits(g_, labels_);
      if (best_labels_.empty() || bits > best_bits_) {
        best_bits_ = bits;
        best_labels_ = labels_;
      }
      return;
    }
    auto members = classes_[c];
    std::sort(members.begin(), members.end());
    const std::size_t base = labels_.size();
    do {
      labels_.resize(base);
      labels_.insert(labels_.end(), members.begin(), members.end());
      permute_class(c + 1);
    } while (std::next_permutation(members.begin(), members.end()));
    labels_.resize(base);
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> classes_;
  std::vector<Vertex> labels_;
  std::vector<Vertex> best_labels_;
  std::uint64_t best_bits_ = 0;
};

}  // namespace detail

/// Canonical relabelling: isomorphic graphs map to identical graphs.
inline Graph canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical form is limited to " + std::to_string(kCanonicalMaxOrder) +
                                " vertices");
  if (g.order() == 0) return g;
  const auto labels = detail::CanonicalSearch(g).run();
  return induced_subgraph(g, labels);
}

inline std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_form(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace oddprism
