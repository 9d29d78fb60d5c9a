#include "gpmc/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "gpmc/errors.hpp"

namespace gpmc {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels, std::string name)
    : adjacency_(vertex_count), labels_(std::move(labels)),
      name_(std::move(name)) {
  if (vertex_count > std::numeric_limits<VertexId>::max()) {
    throw InputError("vertex count too large");
  }
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match vertex count " +
                     std::to_string(vertex_count));
  }
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    e = Edge::of(e.u, e.v);
    if (e.v >= vertex_count) {
      throw InputError("edge " + to_string(e) + " references vertex " +
                       std::to_string(e.v) + " outside 0.." +
                       std::to_string(vertex_count) + "-1");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InputError("duplicate edge " + to_string(*dup));
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  fingerprint_ = fnv1a(0xcbf29ce484222325ULL, vertex_count);
  for (const Edge& e : edges_) {
    fingerprint_ = fnv1a(fingerprint_, (std::uint64_t{e.u} << 32) | e.v);
  }
}

void Graph::check_vertex(VertexId u) const {
  if (!has_vertex(u)) {
    throw InputError("vertex " + std::to_string(u) + " is not in a graph with " +
                     std::to_string(vertex_count()) + " vertices");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId u) const {
  check_vertex(u);
  return adjacency_[u];
}

std::vector<Edge> Graph::incident_edges(VertexId u) const {
  std::vector<Edge> out;
  for (VertexId v : neighbors(u)) out.push_back(Edge::of(u, v));
  return out;
}

std::size_t Graph::min_degree() const {
  if (empty()) throw InputError("minimum degree of an empty graph");
  std::size_t best = adjacency_[0].size();
  for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string Graph::label(VertexId u) const {
  check_vertex(u);
  return labels_.empty() ? std::to_string(u) : labels_[u];
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) {
    throw InputError("common neighbors requested for identical vertex " +
                     std::to_string(u));
  }
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::optional<std::size_t> girth(const Graph& g) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(g.vertex_count());
  std::vector<VertexId> parent(g.vertex_count());
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = root;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      if (best && 2 * dist[x] + 1 >= *best) break;
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          std::size_t cycle = dist[x] + dist[y] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace gpmc
