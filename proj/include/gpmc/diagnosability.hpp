#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "gpmc/fault_model.hpp"
#include "gpmc/graph.hpp"

namespace gpmc {

enum class SearchStrategy {
  // Every consistent pair within bounds against every other. Reference
  // path; needs at most 64 vertices and 64 edges and is only practical on
  // small graphs.
  kExhaustive,
  // Seeded search over connected fault regions (see diagnosability.cpp).
  kLocal,
};

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::kLocal;
  // For graphs built by build_hypercube, seed the local search at vertex 0
  // only. Ignored for other graphs.
  bool use_symmetry = true;
  // Disables every reduction that relies on symmetry (audit runs).
  bool audit_full_enumeration = false;
  unsigned jobs = 1;
};

// Deterministic counters; identical for every `jobs` value.
struct SearchStats {
  // Exhaustive: pair comparisons. Local: labelled regions within budget.
  std::uint64_t candidates_examined = 0;
  std::uint64_t regions_examined = 0;  // local search: labelled regions
  std::uint64_t pruned = 0;            // local search: branches cut by bounds
  std::uint64_t seeds = 0;                // local search: seed vertices

  SearchStats& operator+=(const SearchStats& o);
};

using FaultPairPair = std::pair<FaultPair, FaultPair>;

struct TsQueryResult {
  bool diagnosable = true;
  // Indistinguishable pair within the bounds when not diagnosable; the
  // smaller pair in canonical order comes first.
  std::optional<FaultPairPair> counterexample;
  SearchStats stats;
};

// (t, s)-diagnosability: every two distinct consistent pairs with
// |F_i| <= t and |S_i| <= s are distinguishable.
TsQueryResult is_ts_diagnosable(const Graph& g, std::size_t t, std::size_t s,
                                const SearchOptions& options = {});

enum class ParameterKind { kEdgeRestricted, kVertexRestricted, kPlainQuery };

const char* to_string(ParameterKind k);

struct Lemma2Bounds {
  std::size_t t_h_bound = 0;  // max(min_degree - h, 0)
  std::size_t s1_bound = 0;   // max(min_degree - 2, 0)
};

struct DiagnosabilityReport {
  std::string graph;
  ParameterKind kind = ParameterKind::kEdgeRestricted;
  std::size_t level = 0;  // h or r
  // nullopt when no bound is diagnosable at all (vertex-restricted only:
  // the graph is not (r, 0)-diagnosable).
  std::optional<std::size_t> value;
  // Indistinguishable pair showing value + 1 (or 0) fails.
  std::optional<FaultPairPair> witness;
  std::optional<Lemma2Bounds> bounds;
  // h or r beyond min_degree, where the analytic bounds say nothing.
  bool outside_analyzed_range = false;
  SearchStrategy strategy = SearchStrategy::kLocal;
  bool symmetry_used = false;
  SearchStats stats;
  std::chrono::nanoseconds elapsed{0};
};

// t_h^e: the largest t with g (t, h)-diagnosable. Ascends t from 0.
DiagnosabilityReport edge_restricted_diagnosability(
    const Graph& g, std::size_t h, const SearchOptions& options = {});

// s_r^v: the largest s with g (r, s)-diagnosable. r = 0 gives |E| without
// search. Capped at |E|.
DiagnosabilityReport vertex_restricted_edge_diagnosability(
    const Graph& g, std::size_t r, const SearchOptions& options = {});

// Classical PMC diagnosability, i.e. t_0^e.
std::size_t pmc_diagnosability(const Graph& g,
                               const SearchOptions& options = {});

// Throws InputError when h > min_degree or the graph is empty.
Lemma2Bounds lemma2_upper_bounds(const Graph& g, std::size_t h);

// With N = neighbours of u in ascending id order and d = degree(u):
//   first  = ({u} u N[h..d), {})
//   second = (N[h..d), {u N[0], ..., u N[h-1]})
// Always consistent and indistinguishable; with degree(u) = min_degree it
// shows t_h^e <= min_degree - h. Throws InputError when h > degree(u).
FaultPairPair construct_indistinguishable_witness(const Graph& g, VertexId u,
                                                  std::size_t h);

// For e = uv where u has minimum degree (the smaller id if both do):
//   first  = ({u}, NE(v) \ {e})
//   second = ({v}, NE(u) \ {e})
// The pairs are indistinguishable. When v also has minimum degree both edge
// sets have min_degree - 1 edges, showing s_1^v <= min_degree - 2.
// Throws InputError when neither endpoint has minimum degree or e is not an
// edge of g.
FaultPairPair construct_edge_witness(const Graph& g, const Edge& e);

// Re-validates a witness: distinct, consistent on g, within (t, s), and
// indistinguishable.
bool witness_is_valid(const Graph& g, const FaultPairPair& w, std::size_t t,
                      std::size_t s);

}  // namespace gpmc
