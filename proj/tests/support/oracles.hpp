#pragma once

// Brute-force references written straight from the definitions. They share
// no code with the library's search paths beyond the Graph type.

#include <cstdint>
#include <vector>

#include "gpmc/graph.hpp"

namespace gpmc::testing {

using Mask = std::uint64_t;

inline std::vector<Mask> subsets_up_to(std::size_t universe, std::size_t k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << universe); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) <= k) {
      out.push_back(m);
    }
  }
  return out;
}

// Classical PMC: vertex faults only. F1, F2 are distinguishable iff some
// vertex outside F1 u F2 tests a neighbour in the symmetric difference.
inline bool pmc_distinguishable(const Graph& g, Mask f1, Mask f2) {
  const Mask diff = f1 ^ f2;
  const Mask faulty = f1 | f2;
  for (const Edge& e : g.edges()) {
    Mask mu = Mask{1} << e.u, mv = Mask{1} << e.v;
    if (!(faulty & mu) && (diff & mv)) return true;
    if (!(faulty & mv) && (diff & mu)) return true;
  }
  return false;
}

inline bool pmc_t_diagnosable(const Graph& g, std::size_t t) {
  auto sets = subsets_up_to(g.vertex_count(), t);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!pmc_distinguishable(g, sets[i], sets[j])) return false;
    }
  }
  return true;
}

// Largest t with g t-diagnosable under PMC; up to 16 vertices.
inline std::size_t pmc_brute_force(const Graph& g) {
  std::size_t t = 0;
  while (t < g.vertex_count() && pmc_t_diagnosable(g, t + 1)) ++t;
  return t;
}

// Raw GPMC consistency of a syndrome with (F, S), both as masks over vertex
// ids and edge indices. `fail(u, v)` returns the outcome of test u -> v.
template <typename Outcome>
bool raw_consistent(const Graph& g, Mask F, Mask S, Outcome fail) {
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const bool bad_edge = (S >> i) & 1U;
    if (bad_edge && (((F >> e.u) & 1U) || ((F >> e.v) & 1U))) return false;
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if ((F >> x) & 1U) continue;
      const bool expect = ((F >> y) & 1U) || bad_edge;
      if (fail(x, y) != expect) return false;
    }
  }
  return true;
}

}  // namespace gpmc::testing
