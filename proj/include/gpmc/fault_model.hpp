#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpmc/graph.hpp"

namespace gpmc {

// A consistent faulty pair (F, S): faulty vertices F and faulty edges S such
// that no edge of S has an endpoint in F. Instances only come out of
// make_fault_pair, so every FaultPair in the program is consistent and bound
// to the graph it was validated against.
class FaultPair {
 public:
  // Sorted ascending, no duplicates.
  const std::vector<VertexId>& faulty_vertices() const { return vertices_; }
  const std::vector<Edge>& faulty_edges() const { return edges_; }

  bool is_faulty(VertexId u) const;
  bool is_faulty(const Edge& e) const;
  bool empty() const { return vertices_.empty() && edges_.empty(); }

  std::uint64_t graph_fingerprint() const { return fingerprint_; }

  friend bool operator==(const FaultPair& a, const FaultPair& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  // Canonical order: (|F|, F, |S|, S).
  friend bool operator<(const FaultPair& a, const FaultPair& b);

 private:
  friend FaultPair make_fault_pair(const Graph& g, std::vector<VertexId> F,
                                   std::vector<Edge> S);
  FaultPair() = default;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::uint64_t fingerprint_ = 0;
};

// Throws InputError for ids or edges not in g, ConsistencyError (naming the
// offending edge) when an edge of S touches F. Duplicates are merged.
FaultPair make_fault_pair(const Graph& g, std::vector<VertexId> F,
                          std::vector<Edge> S);

std::string to_string(const FaultPair& fp);

// t(u, v; e): tester u examines testee v over the edge uv.
struct Test {
  VertexId tester = 0;
  VertexId testee = 0;

  Edge edge() const { return Edge::of(tester, testee); }
  friend auto operator<=>(const Test&, const Test&) = default;
};

enum class TestOutcome : std::uint8_t { kPass = 0, kFail = 1 };
enum class ForcedOutcome : std::uint8_t { kForcedPass, kForcedFail, kArbitrary };

const char* to_string(ForcedOutcome f);

// Both directions of every edge, sorted by (tester, testee).
std::vector<Test> enumerate_tests(const Graph& g);

// Arbitrary iff the tester is faulty; otherwise Fail iff the testee or the
// test edge is faulty. Throws InputError if t is not a test of g or fp is
// bound to another graph.
ForcedOutcome forced_outcome(const Graph& g, const Test& t, const FaultPair& fp);

// Unchecked variant for inner loops; t must be a test of fp's graph.
inline ForcedOutcome forced_outcome_unchecked(const Test& t,
                                              const FaultPair& fp) {
  if (fp.is_faulty(t.tester)) return ForcedOutcome::kArbitrary;
  if (fp.is_faulty(t.testee) || fp.is_faulty(t.edge())) {
    return ForcedOutcome::kForcedFail;
  }
  return ForcedOutcome::kForcedPass;
}

struct TestResult {
  Test test;
  TestOutcome outcome = TestOutcome::kPass;
};

// One fixed outcome for every test of a graph.
class Syndrome {
 public:
  // `outcomes` follows enumerate_tests(g) order.
  Syndrome(const Graph& g, std::vector<TestOutcome> outcomes);
  // Every test of g exactly once; anything else is an InputError.
  static Syndrome from_results(const Graph& g,
                               std::span<const TestResult> results);

  std::size_t size() const { return tests_.size(); }
  const std::vector<Test>& tests() const { return tests_; }
  const std::vector<TestOutcome>& outcomes() const { return outcomes_; }
  TestOutcome outcome(VertexId tester, VertexId testee) const;
  std::vector<TestResult> results() const;

  std::uint64_t graph_fingerprint() const { return fingerprint_; }

  friend bool operator==(const Syndrome& a, const Syndrome& b) {
    return a.fingerprint_ == b.fingerprint_ && a.outcomes_ == b.outcomes_;
  }

 private:
  std::vector<Test> tests_;
  std::vector<TestOutcome> outcomes_;
  std::uint64_t fingerprint_ = 0;
};

// How tests with a faulty tester are answered. Tests with a fault-free
// tester always receive their forced value.
struct Adversary {
  enum class Kind { kAllPass, kAllFail, kRandom, kExplicit };

  Kind kind = Kind::kAllPass;
  std::uint64_t seed = 0;
  // kExplicit: (tester, testee) -> outcome; must cover every Arbitrary test.
  std::map<std::pair<VertexId, VertexId>, TestOutcome> assignments;

  static Adversary all_pass() { return {}; }
  static Adversary all_fail() { return {Kind::kAllFail, 0, {}}; }
  static Adversary random(std::uint64_t seed) {
    return {Kind::kRandom, seed, {}};
  }
  static Adversary explicit_assignment(
      std::map<std::pair<VertexId, VertexId>, TestOutcome> assignments) {
    return {Kind::kExplicit, 0, std::move(assignments)};
  }
};

Syndrome generate_syndrome(const Graph& g, const FaultPair& fp,
                           const Adversary& adversary);

// True iff sig is one of the syndromes fp can produce.
bool is_consistent(const Graph& g, const Syndrome& sig, const FaultPair& fp);

// Called with (F, S) for every consistent pair found. Return false to stop.
using ConsistentPairVisitor = std::function<bool(
    const std::vector<VertexId>& F, const std::vector<Edge>& S)>;

// Every fault pair with |F| <= t and |S| <= s that is consistent with sig,
// in no particular order. For a fixed F, S is determined by sig: an edge
// between two fault-free vertices is faulty iff both of its tests fail.
// The search assigns vertices in id order and propagates the verdicts of
// already fault-free testers onto their undecided neighbours.
void for_each_consistent_pair(const Graph& g, const Syndrome& sig,
                              std::size_t t, std::size_t s,
                              const ConsistentPairVisitor& visit);

// Same set, as FaultPairs in canonical order.
std::vector<FaultPair> enumerate_consistent_pairs(const Graph& g,
                                                  const Syndrome& sig,
                                                  std::size_t t,
                                                  std::size_t s);

}  // namespace gpmc
