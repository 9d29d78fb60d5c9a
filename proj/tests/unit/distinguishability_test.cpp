#include <gtest/gtest.h>

#include "gpmc/distinguishability.hpp"
#include "gpmc/errors.hpp"
#include "gpmc/topology.hpp"
#include "support/gallery.hpp"
#include "support/oracles.hpp"

namespace gpmc {
namespace {

std::vector<FaultPair> consistent_pairs(const Graph& g, std::size_t t,
                                        std::size_t s) {
  std::vector<FaultPair> out;
  for (testing::Mask fm : testing::subsets_up_to(g.vertex_count(), t)) {
    for (testing::Mask sm : testing::subsets_up_to(g.edge_count(), s)) {
      std::vector<VertexId> fv;
      std::vector<Edge> se;
      bool ok = true;
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if ((fm >> u) & 1U) fv.push_back(u);
      }
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!((sm >> i) & 1U)) continue;
        const Edge& e = g.edges()[i];
        ok = ok && !((fm >> e.u) & 1U) && !((fm >> e.v) & 1U);
        se.push_back(e);
      }
      if (ok) out.push_back(make_fault_pair(g, fv, se));
    }
  }
  return out;
}

TEST(StructuralCriterionTest, GoodNeighbourSeesFaultyVertex) {
  Graph q3 = build_hypercube(3);
  Verdict v = distinguishable_lemma1(q3, make_fault_pair(q3, {0b000}, {}),
                                     make_fault_pair(q3, {}, {}));
  ASSERT_TRUE(v.distinguishable);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->condition, 1);
  EXPECT_EQ(v.witness->edge, Edge::of(0b000, 0b001));
  EXPECT_EQ(v.witness->tester, 0b001u);
  EXPECT_EQ(v.witness->testee, 0b000u);
  EXPECT_TRUE(v.witness->first_is_a);
}

TEST(StructuralCriterionTest, FaultyEdgeBetweenGoodVertices) {
  Graph q2 = build_hypercube(2);
  for (const Edge& e : q2.edges()) {
    Verdict v = distinguishable_lemma1(q2, make_fault_pair(q2, {}, {e}),
                                       make_fault_pair(q2, {}, {}));
    ASSERT_TRUE(v.distinguishable);
    EXPECT_EQ(v.witness->condition, 2);
    EXPECT_EQ(v.witness->edge, e);
  }
}

TEST(StructuralCriterionTest, HypercubeStarConstructionIsIndistinguishable) {
  for (int n = 2; n <= 4; ++n) {
    Graph q = build_hypercube(n);
    const VertexId u = 0;
    for (int h = 1; h <= n; ++h) {
      std::vector<VertexId> f1{u}, f2;
      std::vector<Edge> s2;
      for (int i = 1; i <= n; ++i) {
        VertexId w = hypercube_neighbor_id(u, n, i);
        if (i <= h) {
          s2.push_back(Edge::of(u, w));
        } else {
          f1.push_back(w);
          f2.push_back(w);
        }
      }
      FaultPair p1 = make_fault_pair(q, f1, {});
      FaultPair p2 = make_fault_pair(q, f2, s2);
      Verdict v = distinguishable_lemma1(q, p1, p2);
      EXPECT_FALSE(v.distinguishable) << "n=" << n << " h=" << h;
      EXPECT_FALSE(v.witness.has_value());
      EXPECT_FALSE(distinguishable_oracle(q, p1, p2));
    }
  }
}

TEST(StructuralCriterionTest, RejectsIdenticalPairsAndForeignGraphs) {
  Graph q2 = build_hypercube(2);
  FaultPair a = make_fault_pair(q2, {1}, {});
  EXPECT_THROW(distinguishable_lemma1(q2, a, a), InputError);
  EXPECT_THROW(distinguishable_oracle(q2, a, a), InputError);
  // Same vertex count, different edge set.
  Graph path = build_named_topology("path", {4});
  EXPECT_THROW(distinguishable_lemma1(path, a, make_fault_pair(path, {}, {})),
               InputError);
}

TEST(OracleTest, WholeGraphFaultyVersusOneLess) {
  // K_2 with F_1 = {a, b} and F_2 = {a}: b is only tested by a, which is
  // faulty under both pairs.
  Graph k2 = build_hypercube(1);
  FaultPair both = make_fault_pair(k2, {0, 1}, {});
  FaultPair one = make_fault_pair(k2, {0}, {});
  EXPECT_FALSE(distinguishable_oracle(k2, both, one));
  EXPECT_FALSE(distinguishable_lemma1(k2, both, one).distinguishable);
  EXPECT_FALSE(distinguishable_by_enumeration(k2, both, one));
}

TEST(OracleTest, CriterionAgreesExhaustivelyOnQ2) {
  Graph q2 = build_hypercube(2);
  auto pairs = consistent_pairs(q2, 2, 2);
  std::size_t compared = 0;
  for (const FaultPair& a : pairs) {
    for (const FaultPair& b : pairs) {
      if (a == b) continue;
      ++compared;
      const bool oracle = distinguishable_oracle(q2, a, b);
      EXPECT_EQ(distinguishable_lemma1(q2, a, b).distinguishable, oracle)
          << to_string(a) << " vs " << to_string(b);
      EXPECT_EQ(distinguishable_by_enumeration(q2, a, b), oracle)
          << to_string(a) << " vs " << to_string(b);
    }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(OracleTest, CriterionAgreesOnSmallGallery) {
  std::vector<Graph> graphs{build_named_topology("cycle", {5}),
                            build_named_topology("complete", {4})};
  graphs.push_back(testing::random_gallery(1).front());
  for (const Graph& g : graphs) {
    auto pairs = consistent_pairs(g, 2, 1);
    for (const FaultPair& a : pairs) {
      for (const FaultPair& b : pairs) {
        if (a == b) continue;
        EXPECT_EQ(distinguishable_lemma1(g, a, b).distinguishable,
                  distinguishable_oracle(g, a, b))
            << g.name() << ": " << to_string(a) << " vs " << to_string(b);
      }
    }
  }
}

TEST(OracleTest, EnumerationAgreesOnK4) {
  Graph k4 = build_named_topology("complete", {4});
  ASSERT_EQ(enumerate_tests(k4).size(), kMaxEnumeratedTests);
  auto pairs = consistent_pairs(k4, 2, 1);
  for (const FaultPair& a : pairs) {
    for (const FaultPair& b : pairs) {
      if (a == b) continue;
      EXPECT_EQ(distinguishable_by_enumeration(k4, a, b),
                distinguishable_oracle(k4, a, b));
    }
  }
}

TEST(OracleTest, EnumerationRefusesLargeGraphs) {
  Graph q3 = build_hypercube(3);
  EXPECT_THROW(distinguishable_by_enumeration(q3, make_fault_pair(q3, {0}, {}),
                                              make_fault_pair(q3, {}, {})),
               InputError);
}

TEST(VerdictPropertyTest, SymmetricAndWitnessesHold) {
  for (const Graph& g : {build_hypercube(2), build_hypercube(3),
                         build_named_topology("cycle", {6})}) {
    auto pairs = consistent_pairs(g, 2, 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        const FaultPair& a = pairs[i];
        const FaultPair& b = pairs[j];
        Verdict ab = distinguishable_lemma1(g, a, b);
        Verdict ba = distinguishable_lemma1(g, b, a);
        ASSERT_EQ(ab.distinguishable, ba.distinguishable);
        ASSERT_EQ(ab.witness.has_value(), ab.distinguishable);
        if (ab.witness) {
          EXPECT_TRUE(witness_holds(g, a, b, *ab.witness));
          EXPECT_TRUE(witness_holds(g, b, a, *ba.witness));
          EXPECT_EQ(ab.witness->edge, ba.witness->edge);
        }
      }
    }
  }
}

TEST(WitnessHoldsTest, RejectsWrongClause) {
  Graph q3 = build_hypercube(3);
  FaultPair a = make_fault_pair(q3, {0}, {});
  FaultPair b = make_fault_pair(q3, {}, {});
  DistinguishingWitness w{1, Edge::of(0, 1), 1, 0, true};
  EXPECT_TRUE(witness_holds(q3, a, b, w));
  w.first_is_a = false;
  EXPECT_FALSE(witness_holds(q3, a, b, w));
  w = {2, Edge::of(0, 1), 1, 0, true};
  EXPECT_FALSE(witness_holds(q3, a, b, w));
}

}  // namespace
}  // namespace gpmc
