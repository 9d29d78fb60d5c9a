#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gpmc/errors.hpp"
#include "gpmc/fault_model.hpp"
#include "gpmc/topology.hpp"
#include "support/gallery.hpp"
#include "support/oracles.hpp"

namespace gpmc {
namespace {

constexpr auto P = TestOutcome::kPass;
constexpr auto F = TestOutcome::kFail;

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> v(g.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Every consistent pair of g with |F| <= t and |S| <= s, from raw masks.
std::vector<FaultPair> all_pairs(const Graph& g, std::size_t t, std::size_t s) {
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
        if (((fm >> e.u) & 1U) || ((fm >> e.v) & 1U)) ok = false;
        se.push_back(e);
      }
      if (ok) out.push_back(make_fault_pair(g, fv, se));
    }
  }
  return out;
}

TEST(MakeFaultPairTest, Examples) {
  Graph q3 = build_hypercube(3);
  FaultPair fp = make_fault_pair(q3, {0b000}, {Edge::of(0b011, 0b111)});
  EXPECT_EQ(fp.faulty_vertices(), (std::vector<VertexId>{0}));
  EXPECT_TRUE(fp.is_faulty(Edge::of(7, 3)));
  EXPECT_TRUE(make_fault_pair(q3, {}, {}).empty());
}

TEST(MakeFaultPairTest, EdgeTouchingFaultyVertexNamesTheEdge) {
  Graph q3 = build_hypercube(3);
  try {
    make_fault_pair(q3, {0}, {Edge::of(0, 1)});
    FAIL() << "expected ConsistencyError";
  } catch (const ConsistencyError& e) {
    EXPECT_NE(std::string(e.what()).find("0-1"), std::string::npos) << e.what();
  }
}

TEST(MakeFaultPairTest, OutOfRangeIsInputError) {
  Graph q2 = build_hypercube(2);
  EXPECT_THROW(make_fault_pair(q2, {4}, {}), InputError);
  EXPECT_THROW(make_fault_pair(q2, {}, {Edge::of(0, 3)}), InputError);
}

TEST(MakeFaultPairTest, DuplicatesMergeAndEdgesCanonicalize) {
  Graph q2 = build_hypercube(2);
  FaultPair fp = make_fault_pair(q2, {3, 3}, {Edge{1, 0}, Edge{0, 1}});
  EXPECT_EQ(fp.faulty_vertices(), (std::vector<VertexId>{3}));
  EXPECT_EQ(fp.faulty_edges(), (std::vector<Edge>{Edge::of(0, 1)}));
  EXPECT_EQ(to_string(fp), "F={3} S={0-1}");
}

TEST(MakeFaultPairTest, CanonicalOrder) {
  Graph q2 = build_hypercube(2);
  FaultPair empty = make_fault_pair(q2, {}, {});
  FaultPair one_edge = make_fault_pair(q2, {}, {Edge::of(2, 3)});
  FaultPair v0 = make_fault_pair(q2, {0}, {});
  FaultPair v1 = make_fault_pair(q2, {1}, {});
  FaultPair v0_edge = make_fault_pair(q2, {0}, {Edge::of(2, 3)});
  EXPECT_LT(empty, one_edge);
  EXPECT_LT(one_edge, v0);
  EXPECT_LT(v0, v0_edge);
  EXPECT_LT(v0_edge, v1);
}

TEST(EnumerateTestsTest, Counts) {
  EXPECT_EQ(enumerate_tests(build_hypercube(2)).size(), 8u);
  EXPECT_EQ(enumerate_tests(build_hypercube(1)).size(), 2u);
  EXPECT_EQ(enumerate_tests(build_hypercube(3)).size(), 24u);
  auto tests = enumerate_tests(build_hypercube(3));
  EXPECT_TRUE(std::is_sorted(tests.begin(), tests.end()));
}

TEST(ForcedOutcomeTest, Examples) {
  Graph q3 = build_hypercube(3);
  gpmc::Test t{0b000, 0b001};
  EXPECT_EQ(forced_outcome(q3, t, make_fault_pair(q3, {0b001}, {})),
            ForcedOutcome::kForcedFail);
  EXPECT_EQ(forced_outcome(q3, t, make_fault_pair(q3, {}, {})),
            ForcedOutcome::kForcedPass);
  EXPECT_EQ(forced_outcome(q3, t, make_fault_pair(q3, {0b000}, {})),
            ForcedOutcome::kArbitrary);
  EXPECT_EQ(forced_outcome(q3, t, make_fault_pair(q3, {}, {t.edge()})),
            ForcedOutcome::kForcedFail);
}

TEST(ForcedOutcomeTest, GraphMismatchAndBadTest) {
  Graph q3 = build_hypercube(3);
  Graph c8 = build_named_topology("cycle", {8});
  FaultPair fp = make_fault_pair(c8, {}, {});
  EXPECT_THROW(forced_outcome(q3, {0, 1}, fp), InputError);
  EXPECT_THROW(forced_outcome(q3, {0, 3}, make_fault_pair(q3, {}, {})),
               InputError);
}

TEST(ForcedOutcomeTest, ArbitraryIffTesterFaulty) {
  for (const Graph& g : {build_hypercube(2), build_named_topology("cycle", {5}),
                         build_named_topology("complete", {4})}) {
    for (const FaultPair& fp : all_pairs(g, 2, 2)) {
      for (const gpmc::Test& t : enumerate_tests(g)) {
        EXPECT_EQ(forced_outcome(g, t, fp) == ForcedOutcome::kArbitrary,
                  fp.is_faulty(t.tester));
      }
    }
  }
}

TEST(SyndromeTest, FromResultsRejectsIncompleteOrDuplicate) {
  Graph q2 = build_hypercube(2);
  Syndrome sig = generate_syndrome(q2, make_fault_pair(q2, {}, {}),
                                   Adversary::all_pass());
  auto results = sig.results();
  EXPECT_EQ(Syndrome::from_results(q2, results), sig);
  auto missing = results;
  missing.pop_back();
  EXPECT_THROW(Syndrome::from_results(q2, missing), InputError);
  auto dup = results;
  dup.back() = dup.front();
  EXPECT_THROW(Syndrome::from_results(q2, dup), InputError);
  EXPECT_THROW(Syndrome(q2, std::vector<TestOutcome>(7, P)), InputError);
}

TEST(GenerateSyndromeTest, FaultFreeIsAllPass) {
  Graph q3 = build_hypercube(3);
  FaultPair none = make_fault_pair(q3, {}, {});
  for (const Adversary& a : {Adversary::all_pass(), Adversary::all_fail(),
                             Adversary::random(9)}) {
    Syndrome sig = generate_syndrome(q3, none, a);
    EXPECT_TRUE(std::all_of(sig.outcomes().begin(), sig.outcomes().end(),
                            [](TestOutcome o) { return o == P; }));
  }
}

TEST(GenerateSyndromeTest, Q2AllFailByHand) {
  // Tests in order 0>1 0>2 1>0 1>3 2>0 2>3 3>1 3>2 with vertex 00 faulty:
  // 00's own tests are Arbitrary (all-fail), tests of 00 fail, the rest pass.
  Graph q2 = build_hypercube(2);
  Syndrome sig = generate_syndrome(q2, make_fault_pair(q2, {0}, {}),
                                   Adversary::all_fail());
  EXPECT_EQ(sig.outcomes(), (std::vector<TestOutcome>{F, F, F, P, F, P, P, P}));
}

TEST(GenerateSyndromeTest, SeededRandomIsReproducible) {
  Graph q3 = build_hypercube(3);
  FaultPair fp = make_fault_pair(q3, {0, 7}, {});
  EXPECT_EQ(generate_syndrome(q3, fp, Adversary::random(42)),
            generate_syndrome(q3, fp, Adversary::random(42)));
}

TEST(GenerateSyndromeTest, ExplicitAssignment) {
  Graph q2 = build_hypercube(2);
  FaultPair fp = make_fault_pair(q2, {0}, {});
  Syndrome sig = generate_syndrome(
      q2, fp, Adversary::explicit_assignment({{{0, 1}, F}, {{0, 2}, P}}));
  EXPECT_EQ(sig.outcome(0, 1), F);
  EXPECT_EQ(sig.outcome(0, 2), P);
  EXPECT_THROW(generate_syndrome(q2, fp,
                                 Adversary::explicit_assignment({{{0, 1}, F}})),
               InputError);
}

TEST(IsConsistentTest, Examples) {
  Graph q3 = build_hypercube(3);
  Syndrome all_pass = generate_syndrome(q3, make_fault_pair(q3, {}, {}),
                                        Adversary::all_pass());
  EXPECT_FALSE(is_consistent(q3, all_pass, make_fault_pair(q3, {5}, {})));
  EXPECT_TRUE(is_consistent(q3, all_pass,
                            make_fault_pair(q3, all_vertices(q3), {})));
}

TEST(IsConsistentTest, GeneratedSyndromesAreConsistent) {
  for (const Graph& g : testing::gallery()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      std::vector<VertexId> fv{static_cast<VertexId>(seed % g.vertex_count())};
      FaultPair fp = make_fault_pair(g, fv, {});
      for (const Adversary& a : {Adversary::all_pass(), Adversary::all_fail(),
                                 Adversary::random(seed)}) {
        EXPECT_TRUE(is_consistent(g, generate_syndrome(g, fp, a), fp));
      }
    }
  }
}

TEST(IsConsistentTest, EverythingFaultyExplainsAnySyndrome) {
  Graph c4 = build_named_topology("cycle", {4});
  FaultPair everything = make_fault_pair(c4, all_vertices(c4), {});
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<TestOutcome> o(8);
    for (int i = 0; i < 8; ++i) o[i] = TestOutcome((bits >> i) & 1U);
    EXPECT_TRUE(is_consistent(c4, Syndrome(c4, o), everything));
  }
}

TEST(IsConsistentTest, SyndromeCountIsTwoToTheArbitraryTests) {
  // Graphs with at most 10 tests.
  std::vector<Graph> graphs{build_hypercube(1), build_hypercube(2),
                            build_named_topology("path", {4}),
                            build_named_topology("cycle", {5})};
  for (const Graph& g : graphs) {
    const std::size_t m = 2 * g.edge_count();
    ASSERT_LE(m, 10u);
    for (const FaultPair& fp : all_pairs(g, g.vertex_count(), g.edge_count())) {
      std::size_t arbitrary = 0;
      for (const gpmc::Test& t : enumerate_tests(g)) {
        arbitrary += forced_outcome(g, t, fp) == ForcedOutcome::kArbitrary;
      }
      std::size_t count = 0;
      for (unsigned bits = 0; bits < (1U << m); ++bits) {
        std::vector<TestOutcome> o(m);
        for (std::size_t i = 0; i < m; ++i) o[i] = TestOutcome((bits >> i) & 1U);
        count += is_consistent(g, Syndrome(g, o), fp);
      }
      EXPECT_EQ(count, std::size_t{1} << arbitrary) << to_string(fp);
    }
  }
}

TEST(EnumerateConsistentPairsTest, Examples) {
  Graph q2 = build_hypercube(2);
  Syndrome all_pass = generate_syndrome(q2, make_fault_pair(q2, {}, {}),
                                        Adversary::all_pass());
  auto pairs = enumerate_consistent_pairs(q2, all_pass, 0, 0);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_TRUE(pairs[0].empty());

  FaultPair fp = make_fault_pair(q2, {0}, {});
  Syndrome sig = generate_syndrome(q2, fp, Adversary::all_fail());
  auto found = enumerate_consistent_pairs(q2, sig, 1, 0);
  EXPECT_NE(std::find(found.begin(), found.end(), fp), found.end());

  auto everything = enumerate_consistent_pairs(q2, sig, 4, 4);
  EXPECT_NE(std::find(everything.begin(), everything.end(),
                      make_fault_pair(q2, all_vertices(q2), {})),
            everything.end());
  EXPECT_TRUE(std::is_sorted(everything.begin(), everything.end()));
}

// Reference: filter every pair within bounds through the raw definition.
std::set<std::pair<testing::Mask, testing::Mask>> brute_force_candidates(
    const Graph& g, const Syndrome& sig, std::size_t t, std::size_t s) {
  std::set<std::pair<testing::Mask, testing::Mask>> out;
  auto fail = [&](VertexId x, VertexId y) {
    return sig.outcome(x, y) == TestOutcome::kFail;
  };
  for (testing::Mask fm : testing::subsets_up_to(g.vertex_count(), t)) {
    for (testing::Mask sm : testing::subsets_up_to(g.edge_count(), s)) {
      if (testing::raw_consistent(g, fm, sm, fail)) out.insert({fm, sm});
    }
  }
  return out;
}

std::set<std::pair<testing::Mask, testing::Mask>> as_masks(
    const Graph& g, const std::vector<FaultPair>& pairs) {
  std::set<std::pair<testing::Mask, testing::Mask>> out;
  for (const FaultPair& fp : pairs) {
    testing::Mask fm = 0, sm = 0;
    for (VertexId u : fp.faulty_vertices()) fm |= testing::Mask{1} << u;
    for (const Edge& e : fp.faulty_edges()) {
      sm |= testing::Mask{1} << *g.edge_index(e);
    }
    out.insert({fm, sm});
  }
  return out;
}

TEST(EnumerateConsistentPairsTest, MatchesBruteForce) {
  std::vector<Graph> graphs{build_hypercube(2), build_hypercube(3),
                            build_named_topology("cycle", {5}),
                            build_named_topology("complete", {4})};
  for (Graph& g : testing::random_gallery(3)) graphs.push_back(std::move(g));
  for (const Graph& g : graphs) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      std::vector<TestOutcome> o(2 * g.edge_count());
      std::mt19937_64 rng(seed);
      // Mostly-pass syndromes so the candidate sets are non-trivial.
      for (auto& x : o) x = (rng() % 5 == 0) ? F : P;
      Syndrome sig(g, o);
      for (auto [t, s] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1},
                          {2, 2}, {3, 0}}) {
        EXPECT_EQ(as_masks(g, enumerate_consistent_pairs(g, sig, t, s)),
                  brute_force_candidates(g, sig, t, s))
            << g.name() << " seed " << seed << " t=" << t << " s=" << s;
      }
    }
  }
}

TEST(EnumerateConsistentPairsTest, MaximalBoundsContainGeneratorAndEverything) {
  for (const Graph& g : {build_hypercube(2), build_named_topology("cycle", {5}),
                         build_named_topology("complete", {4})}) {
    for (const FaultPair& fp : all_pairs(g, 2, 1)) {
      Syndrome sig = generate_syndrome(g, fp, Adversary::random(3));
      auto found = enumerate_consistent_pairs(g, sig, g.vertex_count(),
                                              g.edge_count());
      EXPECT_TRUE(std::binary_search(found.begin(), found.end(), fp));
      EXPECT_TRUE(std::binary_search(found.begin(), found.end(),
                                     make_fault_pair(g, all_vertices(g), {})));
    }
  }
}

}  // namespace
}  // namespace gpmc
