#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gpmc {

using VertexId = std::uint32_t;

// Undirected edge stored as (min, max).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge of(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  bool touches(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; every query is const.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, duplicate edges, out-of-range endpoints
  // or a label vector whose size differs from vertex_count.
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {}, std::string name = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return adjacency_.empty(); }

  // Canonical edges sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId u) const;
  std::vector<Edge> incident_edges(VertexId u) const;
  std::size_t degree(VertexId u) const { return neighbors(u).size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  bool has_vertex(VertexId u) const { return u < vertex_count(); }
  bool has_edge(VertexId a, VertexId b) const;
  // Position of the edge in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge& e) const;

  bool has_labels() const { return !labels_.empty(); }
  // Label if present, otherwise the decimal id.
  std::string label(VertexId u) const;
  const std::string& name() const { return name_; }

  // Set only by build_hypercube; enables symmetry reduction in searches.
  std::optional<int> hypercube_dimension() const { return hypercube_dim_; }

  // Structural hash of (vertex_count, edges). Fault pairs and syndromes
  // carry it to detect use against the wrong graph.
  std::uint64_t fingerprint() const { return fingerprint_; }

  void check_vertex(VertexId u) const;

 private:
  friend Graph build_hypercube(int n);

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::string name_;
  std::optional<int> hypercube_dim_;
  std::uint64_t fingerprint_ = 0;
};

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

// Length of the shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace gpmc
