#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gpmc/graph.hpp"

namespace gpmc {

inline constexpr int kMaxHypercubeDimension = 20;

// Hypercube Q_n, 1 <= n <= kMaxHypercubeDimension.
//
// Vertex i carries the n-character binary expansion of i, most significant
// bit first, so vertex 3 of Q_3 is "011". Bit positions are numbered 1..n
// from the left of the label: position p is integer bit (n - p). This is the
// only place the mapping is defined; hypercube_neighbor and
// hypercube_neighbor_id both follow it.
Graph build_hypercube(int n);

std::string hypercube_label(VertexId id, int n);

// Flips position `position` (1-based, from the left) of a binary label.
std::string hypercube_neighbor(std::string_view label, int position);
VertexId hypercube_neighbor_id(VertexId id, int n, int position);

struct TopologyParams {
  std::size_t size = 0;       // vertices; dimension for "hypercube"
  double edge_probability = 0.5;  // "random" only
  std::uint64_t seed = 1;         // "random" only
};

// kind: "path", "cycle", "complete", "random" (G(n,p)), "hypercube".
// Random graphs are reproducible for a fixed seed on every platform.
Graph build_named_topology(std::string_view kind, const TopologyParams& params);

// Edge-list text: first data line "n m", then m lines "u v" with 0-based ids.
// Blank lines and lines starting with '#' are skipped. Errors name the line.
Graph read_edge_list(std::istream& in, std::string name = {});
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

void write_dot(std::ostream& out, const Graph& g);

}  // namespace gpmc
