#pragma once

#include <optional>

#include "gpmc/fault_model.hpp"
#include "gpmc/graph.hpp"

namespace gpmc {

// The clause of the distinguishability characterisation that separates two
// pairs, phrased for the ordered roles (A, B):
//   condition 1: edge uv with u in F_A \ F_B, v outside F_A u F_B, uv not
//                in S_B. The test v -> u fails under A and passes under B.
//   condition 2: edge uv in S_A \ S_B with u, v outside F_B. The test
//                v -> u fails under A and passes under B.
// `first_is_a` records whether the first argument plays role A.
struct DistinguishingWitness {
  int condition = 1;
  Edge edge;
  VertexId tester = 0;
  VertexId testee = 0;
  bool first_is_a = true;

  friend bool operator==(const DistinguishingWitness&,
                         const DistinguishingWitness&) = default;
};

struct Verdict {
  bool distinguishable = false;
  std::optional<DistinguishingWitness> witness;  // set iff distinguishable
};

// Structural characterisation. The witness uses the smallest qualifying
// edge; ties go to condition 1 before 2 and to (p1, p2) before (p2, p1).
// Throws InputError for identical pairs or pairs bound to another graph.
Verdict distinguishable_lemma1(const Graph& g, const FaultPair& p1,
                               const FaultPair& p2);

// Re-checks one witness clause against the raw sets.
bool witness_holds(const Graph& g, const FaultPair& p1, const FaultPair& p2,
                   const DistinguishingWitness& w);

// Syndrome-set oracle: the syndrome sets of p1 and p2 are disjoint iff some
// test is forced to pass under one pair and to fail under the other (tests
// with a faulty tester under either pair can always be made to agree).
bool distinguishable_oracle(const Graph& g, const FaultPair& p1,
                            const FaultPair& p2);

inline constexpr std::size_t kMaxEnumeratedTests = 12;

// Literal check of disjointness: enumerates every syndrome p1 can produce
// and tests each against p2. Limited to graphs with at most
// kMaxEnumeratedTests tests; larger graphs are an InputError.
bool distinguishable_by_enumeration(const Graph& g, const FaultPair& p1,
                                    const FaultPair& p2);

}  // namespace gpmc
