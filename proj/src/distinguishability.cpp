#include "gpmc/distinguishability.hpp"

#include <cassert>

#include "gpmc/errors.hpp"

namespace gpmc {

namespace {

void check_pair_inputs(const Graph& g, const FaultPair& p1,
                       const FaultPair& p2) {
  if (p1.graph_fingerprint() != g.fingerprint() ||
      p2.graph_fingerprint() != g.fingerprint()) {
    throw InputError("fault pair belongs to a different graph");
  }
  if (p1 == p2) {
    throw InputError("distinguishability of identical fault pairs " +
                     to_string(p1));
  }
}

bool outside_both(const FaultPair& a, const FaultPair& b, VertexId v) {
  return !a.is_faulty(v) && !b.is_faulty(v);
}

// Condition 1 for roles (a, b) with faulty end u and tester v.
bool condition1(const FaultPair& a, const FaultPair& b, VertexId u,
                VertexId v) {
  return a.is_faulty(u) && !b.is_faulty(u) && outside_both(a, b, v) &&
         !b.is_faulty(Edge::of(u, v));
}

// Condition 2 for roles (a, b).
bool condition2(const FaultPair& a, const FaultPair& b, const Edge& e) {
  return a.is_faulty(e) && !b.is_faulty(e) && !b.is_faulty(e.u) &&
         !b.is_faulty(e.v);
}

// Smallest witness for roles (a, b), if any. Candidate edges for
// condition 1 touch F_a \ F_b; for condition 2 they lie in S_a \ S_b.
std::optional<DistinguishingWitness> best_for_roles(const Graph& g,
                                                    const FaultPair& a,
                                                    const FaultPair& b,
                                                    bool first_is_a) {
  std::optional<DistinguishingWitness> best;
  auto offer = [&](DistinguishingWitness w) {
    if (!best || w.edge < best->edge ||
        (w.edge == best->edge && w.condition < best->condition)) {
      best = w;
    }
  };
  for (VertexId u : a.faulty_vertices()) {
    if (b.is_faulty(u)) continue;
    for (VertexId v : g.neighbors(u)) {
      if (condition1(a, b, u, v)) {
        offer({1, Edge::of(u, v), v, u, first_is_a});
        break;  // neighbours ascend, so later v give larger edges
      }
    }
  }
  for (const Edge& e : a.faulty_edges()) {
    if (condition2(a, b, e)) {
      offer({2, e, e.u, e.v, first_is_a});
      break;
    }
  }
  return best;
}

}  // namespace

Verdict distinguishable_lemma1(const Graph& g, const FaultPair& p1,
                               const FaultPair& p2) {
  check_pair_inputs(g, p1, p2);
  auto forward = best_for_roles(g, p1, p2, true);
  auto backward = best_for_roles(g, p2, p1, false);
  std::optional<DistinguishingWitness> best = forward;
  if (backward) {
    bool take = !best || backward->edge < best->edge ||
                (backward->edge == best->edge &&
                 backward->condition < best->condition);
    if (take) best = backward;
  }
  return Verdict{best.has_value(), best};
}

bool witness_holds(const Graph& g, const FaultPair& p1, const FaultPair& p2,
                   const DistinguishingWitness& w) {
  if (!g.has_edge(w.edge.u, w.edge.v)) return false;
  if (Edge::of(w.tester, w.testee) != w.edge) return false;
  const FaultPair& a = w.first_is_a ? p1 : p2;
  const FaultPair& b = w.first_is_a ? p2 : p1;
  if (w.condition == 1) return condition1(a, b, w.testee, w.tester);
  if (w.condition == 2) return condition2(a, b, w.edge);
  return false;
}

bool distinguishable_oracle(const Graph& g, const FaultPair& p1,
                            const FaultPair& p2) {
  check_pair_inputs(g, p1, p2);
  for (const Test& t : enumerate_tests(g)) {
    ForcedOutcome f1 = forced_outcome_unchecked(t, p1);
    ForcedOutcome f2 = forced_outcome_unchecked(t, p2);
    if (f1 == ForcedOutcome::kArbitrary || f2 == ForcedOutcome::kArbitrary) {
      continue;
    }
    if (f1 != f2) return true;
  }
  return false;
}

bool distinguishable_by_enumeration(const Graph& g, const FaultPair& p1,
                                    const FaultPair& p2) {
  check_pair_inputs(g, p1, p2);
  std::vector<Test> tests = enumerate_tests(g);
  if (tests.size() > kMaxEnumeratedTests) {
    throw InputError("syndrome enumeration limited to " +
                     std::to_string(kMaxEnumeratedTests) + " tests, graph has " +
                     std::to_string(tests.size()));
  }
  std::vector<std::size_t> free_tests;
  std::vector<TestOutcome> base(tests.size(), TestOutcome::kPass);
  for (std::size_t i = 0; i < tests.size(); ++i) {
    switch (forced_outcome_unchecked(tests[i], p1)) {
      case ForcedOutcome::kForcedPass: break;
      case ForcedOutcome::kForcedFail: base[i] = TestOutcome::kFail; break;
      case ForcedOutcome::kArbitrary: free_tests.push_back(i); break;
    }
  }
  const std::size_t total = std::size_t{1} << free_tests.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<TestOutcome> outcomes = base;
    for (std::size_t k = 0; k < free_tests.size(); ++k) {
      if ((mask >> k) & 1U) outcomes[free_tests[k]] = TestOutcome::kFail;
    }
    Syndrome sig(g, std::move(outcomes));
    assert(is_consistent(g, sig, p1));
    if (is_consistent(g, sig, p2)) return false;
  }
  return true;
}

}  // namespace gpmc
