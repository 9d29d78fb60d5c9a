#include "gpmc/topology.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "gpmc/errors.hpp"

namespace gpmc {

Graph build_hypercube(int n) {
  if (n < 1 || n > kMaxHypercubeDimension) {
    throw InputError("hypercube dimension must be in 1.." +
                     std::to_string(kMaxHypercubeDimension) + ", got " +
                     std::to_string(n));
  }
  const VertexId count = VertexId{1} << n;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (count / 2));
  std::vector<std::string> labels;
  labels.reserve(count);
  for (VertexId u = 0; u < count; ++u) {
    labels.push_back(hypercube_label(u, n));
    for (int bit = 0; bit < n; ++bit) {
      VertexId v = u ^ (VertexId{1} << bit);
      if (u < v) edges.push_back({u, v});
    }
  }
  Graph g(count, std::move(edges), std::move(labels),
          "hypercube(" + std::to_string(n) + ")");
  g.hypercube_dim_ = n;
  return g;
}

std::string hypercube_label(VertexId id, int n) {
  std::string label(static_cast<std::size_t>(n), '0');
  for (int p = 1; p <= n; ++p) {
    if ((id >> (n - p)) & 1U) label[p - 1] = '1';
  }
  return label;
}

std::string hypercube_neighbor(std::string_view label, int position) {
  const int n = static_cast<int>(label.size());
  if (position < 1 || position > n) {
    throw InputError("bit position " + std::to_string(position) +
                     " outside 1.." + std::to_string(n));
  }
  std::string out(label);
  char& c = out[position - 1];
  if (c == '0') {
    c = '1';
  } else if (c == '1') {
    c = '0';
  } else {
    throw InputError("hypercube label '" + out + "' is not a bit string");
  }
  return out;
}

VertexId hypercube_neighbor_id(VertexId id, int n, int position) {
  if (position < 1 || position > n) {
    throw InputError("bit position " + std::to_string(position) +
                     " outside 1.." + std::to_string(n));
  }
  return id ^ (VertexId{1} << (n - position));
}

Graph build_named_topology(std::string_view kind, const TopologyParams& p) {
  const std::size_t n = p.size;
  std::vector<Edge> edges;
  if (kind == "hypercube") {
    return build_hypercube(static_cast<int>(n));
  }
  if (kind == "path") {
    if (n < 1) throw InputError("path needs at least 1 vertex");
    for (std::size_t i = 0; i + 1 < n; ++i) {
      edges.push_back(Edge::of(VertexId(i), VertexId(i + 1)));
    }
    return Graph(n, std::move(edges), {}, "path(" + std::to_string(n) + ")");
  }
  if (kind == "cycle") {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      edges.push_back(Edge::of(VertexId(i), VertexId((i + 1) % n)));
    }
    return Graph(n, std::move(edges), {}, "cycle(" + std::to_string(n) + ")");
  }
  if (kind == "complete") {
    if (n < 1) throw InputError("complete graph needs at least 1 vertex");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        edges.push_back(Edge::of(VertexId(i), VertexId(j)));
      }
    }
    return Graph(n, std::move(edges), {},
                 "complete(" + std::to_string(n) + ")");
  }
  if (kind == "random") {
    if (n < 1) throw InputError("random graph needs at least 1 vertex");
    if (!(p.edge_probability >= 0.0 && p.edge_probability <= 1.0)) {
      throw InputError("edge probability must lie in [0, 1]");
    }
    // Raw 53-bit draws instead of std::uniform_real_distribution, whose
    // output is implementation-defined.
    std::mt19937_64 rng(p.seed);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (draw < p.edge_probability) {
          edges.push_back(Edge::of(VertexId(i), VertexId(j)));
        }
      }
    }
    std::ostringstream name;
    name << "random(" << n << "," << p.edge_probability << "," << p.seed << ")";
    return Graph(n, std::move(edges), {}, name.str());
  }
  throw InputError("unknown topology '" + std::string(kind) +
                   "' (expected path, cycle, complete, random or hypercube)");
}

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses exactly two non-negative integers from the line.
bool parse_pair(const std::string& line, unsigned long long& a,
                unsigned long long& b) {
  std::istringstream ss(line);
  std::string ta, tb, extra;
  if (!(ss >> ta >> tb) || (ss >> extra && extra[0] != '#')) return false;
  auto digits = [](const std::string& s) {
    return !s.empty() &&
           s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!digits(ta) || !digits(tb)) return false;
  try {
    a = std::stoull(ta);
    b = std::stoull(tb);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in, std::string name) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    unsigned long long a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected two non-negative integers, got '" + line +
                       "'");
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) {
      throw InputError("line " + std::to_string(line_no) + ": vertex id out of "
                       "range 0.." + std::to_string(n) + "-1");
    }
    if (a == b) {
      throw InputError("line " + std::to_string(line_no) + ": self-loop at " +
                       std::to_string(a));
    }
    if (edges.size() == m) {
      throw InputError("line " + std::to_string(line_no) + ": more than " +
                       std::to_string(m) + " edges");
    }
    edges.push_back(Edge::of(VertexId(a), VertexId(b)));
  }
  if (!have_header) throw InputError("edge list is empty (missing 'n m' line)");
  if (edges.size() != m) {
    throw InputError("header declares " + std::to_string(m) +
                     " edges but found " + std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges), {}, std::move(name));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path + "'");
  return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    out << "  " << u << " [label=\"" << g.label(u) << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

}  // namespace gpmc
