#include <random>

#include <gtest/gtest.h>

#include "cozero/error.hpp"
#include "cozero/graph.hpp"
#include "cozero/harness.hpp"
#include "cozero/ring_graph.hpp"
#include "oracles.hpp"

using namespace cozero;

namespace {

ExtendedNat as_ext(std::uint64_t v) { return v == oracle::kInf ? ExtendedNat::infinity() : ExtendedNat(v); }

SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

void expect_matches_oracles(const SimpleGraph& g, const std::string& what) {
  const auto d = oracle::diameter(g);
  // An infinite oracle distance means disconnected.
  EXPECT_EQ(diameter(g), g.vertex_count() < 2 ? ExtendedNat(0) : as_ext(d)) << what;
  EXPECT_EQ(girth(g), as_ext(oracle::girth(g))) << what;
  EXPECT_EQ(clique_number(g), oracle::clique(g)) << what;
  EXPECT_EQ(chromatic_number(g), oracle::chromatic(g)) << what;
  EXPECT_EQ(is_connected(g), d != oracle::kInf) << what;
}

}  // namespace

TEST(ExtendedNat, OrderingAndText) {
  EXPECT_LT(ExtendedNat(3), ExtendedNat::infinity());
  EXPECT_LT(ExtendedNat(2), ExtendedNat(3));
  EXPECT_EQ(ExtendedNat::infinity(), ExtendedNat::infinity());
  EXPECT_EQ(ExtendedNat::infinity().to_string(), "inf");
  EXPECT_EQ(ExtendedNat(4).to_string(), "4");
}

TEST(Metrics, EmptyGraphConventions) {
  SimpleGraph g(0);
  const auto m = compute_metrics(g);
  EXPECT_TRUE(m.connected);
  EXPECT_EQ(m.diameter, ExtendedNat(0));
  EXPECT_EQ(m.girth, ExtendedNat::infinity());
  EXPECT_EQ(m.clique_number, 0u);
  EXPECT_EQ(m.chromatic_number, 0u);
  EXPECT_TRUE(m.planar);
  EXPECT_TRUE(m.bipartite);
  EXPECT_FALSE(m.complete_bipartite.has_value());
}

TEST(Metrics, NamedGraphs) {
  EXPECT_EQ(girth(SimpleGraph::cycle(5)), ExtendedNat(5));
  EXPECT_EQ(girth(SimpleGraph::path(6)), ExtendedNat::infinity());
  EXPECT_EQ(diameter(SimpleGraph::path(6)), ExtendedNat(5));
  EXPECT_EQ(chromatic_number(SimpleGraph::cycle(7)), 3u);
  EXPECT_EQ(clique_number(SimpleGraph::complete(6)), 6u);
  EXPECT_EQ(chromatic_number(SimpleGraph::complete_bipartite(3, 4)), 2u);
  EXPECT_EQ(clique_number(SimpleGraph(3)), 1u);
  const auto ps = partite_structure(SimpleGraph::complete_bipartite(2, 3));
  ASSERT_TRUE(ps.complete_bipartite.has_value());
  EXPECT_EQ(*ps.complete_bipartite, (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_TRUE(partite_structure(SimpleGraph::complete(4)).complete);
  EXPECT_FALSE(partite_structure(SimpleGraph::cycle(5)).bipartite);
}

TEST(Metrics, DistanceRejectsNonVertex) {
  try {
    distance(SimpleGraph::path(3), 0, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_vertex);
  }
  EXPECT_EQ(distance(SimpleGraph(2), 0, 1), ExtendedNat::infinity());
}

TEST(Metrics, RandomGraphsMatchOracles) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 400; ++t) {
    const auto n = rng() % 9;
    const auto g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    expect_matches_oracles(g, "random #" + std::to_string(t));
  }
}

TEST(Metrics, SmallCorpusGraphsMatchOracles) {
  CorpusConfig c;
  c.cyclic = c.products = true;
  c.custom = {RingSpec::galois(2, 2), RingSpec::galois(2, 3), RingSpec::galois(3, 2), RingSpec::galois(5, 2)};
  std::size_t checked = 0;
  for (const auto& R : generate_corpus(c)) {
    std::vector<RingGraph> graphs{zero_divisor_graph(*R), cozero_divisor_graph(*R)};
    for (const auto& I : R->all_ideals()) {
      graphs.push_back(ideal_cozero_divisor_graph(*R, I));
      if (I.is_proper()) graphs.push_back(ideal_zero_divisor_graph(*R, I));
    }
    const auto count = graphs.size();
    for (std::size_t i = 0; i < count; ++i) graphs.push_back(graphs[i].without(R->jacobson_radical().members()));
    for (const auto& G : graphs) {
      if (G.graph().vertex_count() > 8) continue;
      expect_matches_oracles(G.graph(), R->name() + " " + std::string(to_string(G.kind())));
      ++checked;
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(Metrics, Relations) {
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(rng, 1 + rng() % 12, 0.4);
    const auto m = compute_metrics(g);
    EXPECT_LE(m.clique_number, m.chromatic_number);
    EXPECT_EQ(m.girth == ExtendedNat(3), m.clique_number >= 3);
    if (g.edge_count() > 0) EXPECT_EQ(m.bipartite, m.chromatic_number == 2);
    if (m.bipartite && g.edge_count() > 0) EXPECT_EQ(m.clique_number, m.chromatic_number);
    if (m.complete_bipartite) EXPECT_TRUE(m.bipartite);
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (rng() % 3) keep.push_back(v);
    const auto h = g.induced(keep);
    EXPECT_GE(girth(h), m.girth);
    EXPECT_LE(clique_number(h), m.clique_number);
    for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(is_r_partite(g, r), m.chromatic_number <= r);
  }
}

TEST(Planarity, KuratowskiGraphs) {
  EXPECT_FALSE(is_planar(SimpleGraph::complete(5)));
  EXPECT_FALSE(is_planar(SimpleGraph::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_planar(SimpleGraph::complete(4)));
  EXPECT_TRUE(is_planar(SimpleGraph::complete_bipartite(2, 5)));
  // Petersen graph: non-planar with only 15 edges.
  SimpleGraph p(10);
  for (std::size_t i = 0; i < 5; ++i) {
    p.add_edge(i, (i + 1) % 5);
    p.add_edge(i, i + 5);
    p.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  EXPECT_FALSE(is_planar(p));
}

TEST(Planarity, EveryGraphOnFourVerticesIsPlanar) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      SimpleGraph g(n);
      std::size_t bit = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b, ++bit)
          if (mask >> bit & 1) g.add_edge(a, b);
      EXPECT_TRUE(is_planar(g));
    }
  }
}

TEST(Planarity, MatchesMinorOracleOnRandomGraphs) {
  std::mt19937 rng(5);
  int nonplanar = 0;
  for (int t = 0; t < 150; ++t) {
    const auto n = 5 + rng() % 3;
    const auto g = random_graph(rng, n, 0.55 + 0.4 * (rng() % 2));
    const bool expect = oracle::planar(g);
    nonplanar += !expect;
    EXPECT_EQ(is_planar(g), expect) << "trial " << t;
  }
  EXPECT_GT(nonplanar, 10);
}

TEST(Planarity, CapExceeded) {
  MetricLimits limits;
  limits.exact_vertex_cap = 4;
  try {
    is_planar(SimpleGraph::cycle(6), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}

TEST(Metrics, RingSpotValues) {
  auto Z6 = build_ring("Zn:6");
  EXPECT_EQ(diameter(cozero_divisor_graph(*Z6).graph()), ExtendedNat(2));
  auto Z12 = build_ring("Zn:12");
  const auto m = compute_metrics(cozero_divisor_graph(*Z12).graph());
  EXPECT_EQ(m.girth, ExtendedNat(4));
  EXPECT_EQ(m.chromatic_number, 2u);
  EXPECT_EQ(m.clique_number, 2u);
  EXPECT_TRUE(m.bipartite);
  const auto b = compute_metrics(ideal_cozero_divisor_graph(*Z12, principal_ideal(*Z12, 3)).graph());
  EXPECT_FALSE(b.connected);
  EXPECT_EQ(b.diameter, ExtendedNat::infinity());
}
