#include <gtest/gtest.h>

#include <random>

#include "oddprism/graph.hpp"
#include "oddprism/patterns.hpp"
#include "oddprism/turan.hpp"

using namespace oddprism;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Matcher, FindsAndValidatesEmbeddings) {
  const auto hit = contains_subgraph(make_complete(5), make_cycle(4));
  ASSERT_TRUE(hit);
  EXPECT_TRUE(is_valid_embedding(make_complete(5), make_cycle(4), *hit));
  EXPECT_FALSE(contains_subgraph(make_complete_bipartite(3, 3), make_cycle(3)));
  EXPECT_FALSE(contains_subgraph(make_path(3), make_path(4)));  // pattern larger than host
  EXPECT_TRUE(contains_subgraph(make_cycle(6), Graph(0)));
}

TEST(Matcher, EmbeddingValidation) {
  const Graph host = make_path(3);
  const Graph edge = make_path(2);
  EXPECT_TRUE(is_valid_embedding(host, edge, {0, 1}));
  EXPECT_FALSE(is_valid_embedding(host, edge, {0, 2}));
  EXPECT_FALSE(is_valid_embedding(host, edge, {1, 1}));
  EXPECT_FALSE(is_valid_embedding(host, edge, {0}));
  EXPECT_FALSE(is_valid_embedding(host, edge, {0, 7}));
}

TEST(Matcher, BudgetExceeded) {
  const auto out = find_subgraph(make_complete_bipartite(6, 6), make_cycle(5), 10);
  EXPECT_EQ(out.status, SearchStatus::kBudgetExceeded);
  EXPECT_FALSE(out.embedding);
  const auto prism = find_odd_prism(make_complete_bipartite(7, 7), 1, 5);
  EXPECT_EQ(prism.status, SearchStatus::kBudgetExceeded);
}

TEST(Prism, BasicHostsAndWitnessLayout) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const Graph p = odd_prism(k);
    const auto out = find_odd_prism(p, k);
    ASSERT_TRUE(out.found());
    EXPECT_TRUE(is_valid_embedding(p, p, *out.embedding));
  }
  EXPECT_TRUE(find_odd_prism(make_complete(6), 1).found());
  EXPECT_FALSE(find_odd_prism(make_complete(5), 1).found());
  EXPECT_TRUE(is_prism_free(make_complete_bipartite(10, 10), 1));  // bipartite hosts have no odd cycle
  EXPECT_TRUE(is_prism_free(odd_prism(2), 1));
  EXPECT_FALSE(is_prism_free(odd_prism(2), 2));
  EXPECT_THROW(find_odd_prism(make_complete(6), 0), std::invalid_argument);
}

TEST(Prism, ExtremalConstructionsAreFree) {
  for (std::size_t n = 6; n <= 12; ++n) {
    const auto ex = ex_formula(n);
    const Graph g = ex_extremal_construction(n, ex.n_a);
    EXPECT_TRUE(is_prism_free(g, 1)) << "n=" << n;
    EXPECT_FALSE(contains_subgraph(g, odd_prism(1))) << "n=" << n;
    EXPECT_TRUE(is_prism_free(spex_candidate(n), 1)) << "n=" << n;
  }
}

TEST(Prism, OracleEquivalenceOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t k = 1 + rng() % 2;
    const Graph g = random_graph(n, 0.3 + 0.6 * (rng() % 100) / 100.0, rng);
    const auto fast = find_odd_prism(g, k);
    const auto slow = contains_subgraph(g, odd_prism(k));
    ASSERT_EQ(fast.found(), slow.has_value()) << graph6_encode(g) << " k=" << k;
    if (fast.found()) {
      EXPECT_TRUE(is_valid_embedding(g, odd_prism(k), *fast.embedding));
    }
  }
}

TEST(Prism, OracleEquivalenceOnAllSixVertexGraphs) {
  const Graph prism = odd_prism(1);
  std::size_t containing = 0;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const Graph g = graph_from_mask(6, mask);
    const bool fast = find_odd_prism(g, 1).found();
    ASSERT_EQ(fast, contains_subgraph(g, prism).has_value()) << mask;
    containing += fast;
  }
  // 6!/|Aut(prism)| = 720/12 = 60 labelled prisms; every host containing one
  // is a supergraph of one of them
  EXPECT_GT(containing, 60u);
}

TEST(CrossingC4, FindsCycleAcrossBlocks) {
  const Graph g = make_complete_bipartite(2, 2);
  // blocks {0,2} and {1,3}: edges 0-2 and 1-3 exist, crossing edges too
  const VertexPartition p({0, 1, 0, 1});
  const auto c = find_crossing_c4(g, p);
  ASSERT_TRUE(c);
  EXPECT_EQ(p.block_of((*c)[0]), 0u);
  EXPECT_EQ(p.block_of((*c)[1]), 0u);
  EXPECT_EQ(p.block_of((*c)[2]), 1u);
  EXPECT_EQ(p.block_of((*c)[3]), 1u);
  EXPECT_THROW(find_crossing_c4(g, VertexPartition::trivial(4)), std::invalid_argument);
  EXPECT_FALSE(find_crossing_c4(make_path(4), VertexPartition({0, 0, 1, 1})));
}

TEST(Colouring, StructuresOnPrism) {
  // all red: a monochromatic P4 along the top cycle
  std::vector<Colour> red(6, Colour::kRed);
  auto r = find_mono_p4_or_bicoloured_c4(1, red);
  EXPECT_EQ(r.kind, PrismStructure::kMonochromaticP4);
  EXPECT_EQ(r.vertices.size(), 4u);
  EXPECT_STREQ(to_string(r.kind), "monochromatic P4");

  // alternate colours between layers: tops red, bottoms blue; rungs 0 and 1
  // form a red-red-blue-blue square
  std::vector<Colour> layered(6);
  for (std::size_t i = 0; i < 3; ++i) {
    layered[2 * i] = Colour::kRed;
    layered[2 * i + 1] = Colour::kBlue;
  }
  r = find_mono_p4_or_bicoloured_c4(1, layered);
  EXPECT_EQ(r.kind, PrismStructure::kBicolouredC4);
  EXPECT_STREQ(to_string(r.kind), "bicoloured C4");
  const Graph p = odd_prism(1);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(p.has_edge(r.vertices[i], r.vertices[(i + 1) % 4]));

  EXPECT_THROW(find_mono_p4_or_bicoloured_c4(1, std::vector<Colour>(5)), std::invalid_argument);
  EXPECT_STREQ(to_string(PrismStructure::kNone), "none");
}
