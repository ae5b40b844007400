#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cozero/classify.hpp"
#include "cozero/error.hpp"
#include "cozero/harness.hpp"
#include "cozero/ring_graph.hpp"
#include "oracles.hpp"

using namespace cozero;

namespace {

std::string golden(const std::string& name) {
  std::ifstream f(std::string(COZERO_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

using EdgeList = std::vector<std::pair<Index, Index>>;

std::vector<RingPtr> small_corpus() {
  CorpusConfig c;
  c.cyclic = c.products = true;
  c.custom = {RingSpec::galois(2, 2), RingSpec::galois(2, 3), RingSpec::galois(3, 2), RingSpec::galois(5, 2),
              parse_ring_spec("polyquot:2:0,0,1"), parse_ring_spec("polyquot:3:0,0,0,1")};
  return generate_corpus(c);
}

}  // namespace

TEST(GraphGolden, CozeroOfZ12) {
  auto R = build_ring("Zn:12");
  const auto G = cozero_divisor_graph(*R);
  EXPECT_EQ(emit_dot(G), golden("z12_cozero.dot"));
  EXPECT_EQ(G.edges().size(), 10u);
}

TEST(GraphGolden, IdealCozeroOfZ12AtThree) {
  auto R = build_ring("Zn:12");
  const auto G = ideal_cozero_divisor_graph(*R, principal_ideal(*R, 3));
  EXPECT_EQ(emit_dot(G), golden("z12_cozero_ideal_3.dot"));
  EXPECT_EQ(G.vertices(), (std::vector<Index>{2, 6, 10}));
  EXPECT_EQ(G.edges(), (EdgeList{{2, 10}}));
}

TEST(GraphGolden, ZeroDivisorOfZ12) {
  auto R = build_ring("Zn:12");
  const auto G = zero_divisor_graph(*R);
  EXPECT_EQ(emit_dot(G), golden("z12_zero_div.dot"));
  EXPECT_EQ(G.edges().size(), 8u);
}

TEST(GraphGolden, IdealZeroDivisorOfZ12AtThreeIsEmpty) {
  auto R = build_ring("Zn:12");
  const auto G = ideal_zero_divisor_graph(*R, principal_ideal(*R, 3));
  EXPECT_TRUE(G.empty());
  EXPECT_EQ(emit_dot(G), golden("z12_zero_div_ideal_3.dot"));
}

TEST(GraphBuild, SmallExamples) {
  auto Z8 = build_ring("Zn:8");
  const auto G = ideal_cozero_divisor_graph(*Z8, principal_ideal(*Z8, 2));
  EXPECT_EQ(G.vertices(), (std::vector<Index>{2, 6}));
  EXPECT_EQ(G.edges(), (EdgeList{{2, 6}}));
  const auto H = ideal_zero_divisor_graph(*Z8, principal_ideal(*Z8, 4));
  EXPECT_EQ(H.vertices(), (std::vector<Index>{2, 6}));
  EXPECT_EQ(H.edges(), (EdgeList{{2, 6}}));

  auto Z6 = build_ring("Zn:6");
  const auto P = cozero_divisor_graph(*Z6);
  EXPECT_EQ(P.vertices(), (std::vector<Index>{2, 3, 4}));
  EXPECT_EQ(P.edges(), (EdgeList{{2, 3}, {3, 4}}));

  const auto Z4 = zero_divisor_graph(*build_ring("Zn:4"));
  EXPECT_EQ(Z4.vertices(), (std::vector<Index>{2}));
  EXPECT_TRUE(Z4.edges().empty());

  for (const char* f : {"Zn:7", "gf:3^2"}) {
    auto F = build_ring(f);
    EXPECT_TRUE(zero_divisor_graph(*F).empty());
    EXPECT_TRUE(cozero_divisor_graph(*F).empty());
  }
}

TEST(GraphBuild, ZeroIdealGivesEmptyCozeroGraph) {
  auto R = build_ring("Zn:12");
  EXPECT_TRUE(ideal_cozero_divisor_graph(*R, R->zero_ideal()).empty());
}

TEST(GraphBuild, IdealZeroDivisorGraphRejectsFullIdeal) {
  auto R = build_ring("Zn:12");
  EXPECT_THROW(ideal_zero_divisor_graph(*R, R->unit_ideal()), Error);
}

TEST(GraphBuild, EveryBuilderMatchesDefinitionalOracle) {
  for (const auto& R : small_corpus()) {
    EXPECT_EQ(oracle::plain(zero_divisor_graph(*R)), oracle::zero_div(*R)) << R->name();
    EXPECT_EQ(oracle::plain(cozero_divisor_graph(*R)), oracle::cozero(*R)) << R->name();
    for (const auto& I : R->all_ideals()) {
      EXPECT_EQ(oracle::plain(ideal_cozero_divisor_graph(*R, I)), oracle::ideal_cozero(*R, I)) << R->name();
      if (I.is_proper())
        EXPECT_EQ(oracle::plain(ideal_zero_divisor_graph(*R, I)), oracle::ideal_zero_div(*R, I)) << R->name();
    }
  }
}

TEST(GraphBuild, Identities) {
  for (const auto& R : small_corpus()) {
    const auto coz = oracle::plain(cozero_divisor_graph(*R));
    EXPECT_EQ(oracle::plain(ideal_cozero_divisor_graph(*R, R->unit_ideal())), coz) << R->name();
    EXPECT_EQ(oracle::plain(ideal_zero_divisor_graph(*R, R->zero_ideal())), oracle::plain(zero_divisor_graph(*R)))
        << R->name();
    for (const auto& I : R->all_ideals()) {
      if (I.is_zero()) continue;
      EXPECT_EQ(ideal_cozero_divisor_graph(*R, I).empty(), is_second(*R, I)) << R->name();
    }
  }
}

TEST(GraphBuild, AdjacencyIsSymmetricAndIrreflexive) {
  for (const auto& R : small_corpus()) {
    for (const auto& I : R->all_ideals()) {
      const auto G = ideal_cozero_divisor_graph(*R, I);
      for (Index x : G.vertices()) {
        EXPECT_FALSE(G.adjacent(x, x));
        for (Index y : G.vertices()) EXPECT_EQ(G.adjacent(x, y), G.adjacent(y, x));
      }
    }
  }
}

TEST(RemoveVertices, DeletesInducedVertices) {
  auto R = build_ring("Zn:12");
  const auto G = ideal_cozero_divisor_graph(*R, principal_ideal(*R, 3));
  const auto H = remove_vertices(G, R->jacobson_radical().members());
  EXPECT_EQ(H.vertices(), (std::vector<Index>{2, 10}));
  EXPECT_EQ(H.edges(), (EdgeList{{2, 10}}));
  EXPECT_TRUE(is_connected(H.graph()));
  EXPECT_EQ(oracle::plain(remove_vertices(G, R->empty_set())), oracle::plain(G));
  EXPECT_TRUE(remove_vertices(G, R->full_set()).empty());
  EXPECT_EQ(H.removals().size(), 1u);
}

TEST(Emit, EmptyGraphHasEmptyBody) {
  auto R = build_ring("Zn:7");
  EXPECT_EQ(emit_dot(cozero_divisor_graph(*R)), "graph cozero_Zn_7 {\n}\n");
}

TEST(Emit, NamesCarryIdealAndRemovals) {
  auto R = build_ring("Zn:12");
  const auto G = remove_vertices(ideal_cozero_divisor_graph(*R, principal_ideal(*R, 3)),
                                 R->jacobson_radical().members());
  const auto name = graph_name(G);
  EXPECT_EQ(name.rfind("cozero_ideal_Zn_12_gen_3_minus", 0), 0u) << name;
  for (char c : name) EXPECT_TRUE(std::isalnum(static_cast<unsigned char>(c)) || c == '_') << name;
}

TEST(Emit, JsonContract) {
  auto R = build_ring("Zn:12");
  const auto j = nlohmann::json::parse(emit_json(ideal_cozero_divisor_graph(*R, principal_ideal(*R, 3))));
  EXPECT_EQ(j["kind"], "cozero_ideal");
  EXPECT_EQ(j["ring_spec"], "Zn:12");
  EXPECT_EQ(j["ideal_members"], nlohmann::json({0, 3, 6, 9}));
  EXPECT_EQ(j["vertices"], nlohmann::json({2, 6, 10}));
  EXPECT_EQ(j["edges"], nlohmann::json::parse("[[2,10]]"));
  const auto z = nlohmann::json::parse(emit_json(zero_divisor_graph(*R)));
  EXPECT_TRUE(z["ideal_members"].is_null());
}

TEST(Emit, ProductLabelsAreQuoted) {
  auto R = build_ring("Zn:2xZn:2");
  const auto dot = emit_dot(cozero_divisor_graph(*R));
  EXPECT_NE(dot.find("\"(0,1)\" -- \"(1,0)\""), std::string::npos) << dot;
}

TEST(Emit, Deterministic) {
  auto A = build_ring("Zn:30");
  auto B = build_ring("Zn:30");
  for (std::size_t i = 0; i < A->all_ideals().size(); ++i) {
    EXPECT_EQ(emit_dot(ideal_cozero_divisor_graph(*A, A->all_ideals()[i])),
              emit_dot(ideal_cozero_divisor_graph(*B, B->all_ideals()[i])));
  }
}

TEST(Distance, RingGraphDistance) {
  auto R = build_ring("Zn:12");
  const auto G = cozero_divisor_graph(*R);
  EXPECT_EQ(distance(G, 2, 3), ExtendedNat(1));
  EXPECT_EQ(distance(G, 2, 4), ExtendedNat(2));
  EXPECT_THROW(distance(G, 2, 1), Error);
}
