#pragma once

// Finite simple undirected graphs stored as per-vertex bitsets, the named
// constructions used throughout the library, and graph6 interchange.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddprism {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of edges with u < v, strictly increasing lexicographically.
using EdgeList = std::vector<Edge>;

class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;
  explicit Graph(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

  Graph(std::size_t n, const EdgeList& edges) : Graph(n) {
    for (const auto& e : edges) add_edge(e.u, e.v);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  /// Adds uv. Self-loops and out-of-range ids throw; an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (has_edge(u, v)) return;
    set_bit(u, v);
    set_bit(v, u);
    ++m_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!has_edge(u, v)) return;
    clear_bit(u, v);
    clear_bit(v, u);
    --m_;
  }

  std::size_t degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (const Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  /// Raw neighbourhood bitset of v, words_per_row() words long.
  struct RowView {
    const Word* first;
    std::size_t size;
    const Word* begin() const noexcept { return first; }
    const Word* end() const noexcept { return first + size; }
    Word operator[](std::size_t i) const noexcept { return first[i]; }
  };
  RowView row(Vertex v) const noexcept { return {bits_.data() + v * words_, words_}; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = bits_[v * words_ + w];
      while (bits != 0) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// |N(u) ∩ N(v)| by word-parallel intersection.
  std::size_t common_neighbors(Vertex u, Vertex v) const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w)
      c += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w] & bits_[v * words_ + w]));
    return c;
  }

  EdgeList edges() const {
    EdgeList out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.push_back({u, v});
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
  }
  void set_bit(Vertex u, Vertex v) noexcept {
    bits_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void clear_bit(Vertex u, Vertex v) noexcept {
    bits_[u * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> bits_;
};

// ---------------------------------------------------------------------------
// Constructions. Every constructor documents its vertex-id layout.

inline Graph make_empty(std::size_t n) { return Graph(n); }

inline Graph make_complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Parts {0..s-1} and {s..s+t-1}.
inline Graph make_complete_bipartite(std::size_t s, std::size_t t) {
  Graph g(s + t);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = s; v < s + t; ++v) g.add_edge(u, v);
  return g;
}

/// Ring 0-1-...-(n-1)-0.
inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// Path 0-1-...-(n-1).
inline Graph make_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Part sizes of T(n,r), larger parts first.
inline std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  if (r == 0) throw std::invalid_argument("Turan graph needs r >= 1");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

/// Complete r-partite graph on n vertices with balanced parts; ids are
/// assigned part by part, larger parts first.
inline Graph make_turan(std::size_t n, std::size_t r) {
  const auto sizes = turan_part_sizes(n, r);
  std::vector<std::size_t> part(n);
  std::size_t id = 0;
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t i = 0; i < sizes[p]; ++i) part[id++] = p;
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

/// Vertices of h are shifted by |g|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  Graph out(off + h.order());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) out.add_edge(e.u + off, e.v + off);
  return out;
}

/// Disjoint union plus every edge between the two sides; h shifted by |g|.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const std::size_t off = g.order();
  for (Vertex u = 0; u < off; ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, off + v);
  return out;
}

/// Vertex (a, b) gets id a * |h| + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  Graph out(ng * nh);
  for (Vertex a = 0; a < ng; ++a)
    for (const auto& e : h.edges()) out.add_edge(a * nh + e.u, a * nh + e.v);
  for (Vertex b = 0; b < nh; ++b)
    for (const auto& e : g.edges()) out.add_edge(e.u * nh + b, e.v * nh + b);
  return out;
}

/// C_{2k+1} x K_2. Cycle position i has layer-0 vertex 2i and layer-1 vertex 2i+1.
inline Graph odd_prism(std::size_t k) {
  if (k == 0) throw std::invalid_argument("odd prism needs k >= 1");
  return cartesian_product(make_cycle(2 * k + 1), make_complete(2));
}

/// K_1 joined with T(n-1, 2). The apex is vertex 0; the larger part follows.
inline Graph spex_candidate(std::size_t n) {
  if (n < 2) throw std::invalid_argument("spex candidate needs n >= 2");
  return join(make_complete(1), make_turan(n - 1, 2));
}

/// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the given order.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

// ---------------------------------------------------------------------------
// graph6

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    throw Graph6Error("graph6: order above 258047 is not supported");
  }
  unsigned group = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  // Tolerate a trailing newline / carriage return from line-based input.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (const char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) < 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated order header");
    if (static_cast<unsigned char>(text[1]) == 126)
      throw Graph6Error("graph6: 8-byte order header is not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw Graph6Error("graph6: body length does not match order");
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const auto byte = static_cast<unsigned>(text[pos + bit / 6] - 63);
      if ((byte >> (5 - bit % 6)) & 1U) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned>(text.back() - 63);
    if ((last & ((1U << (6 - bits % 6)) - 1)) != 0)
      throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace oddprism
