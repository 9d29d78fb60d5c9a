#include "gpmc/diagnosability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

#include "gpmc/distinguishability.hpp"
#include "gpmc/errors.hpp"

namespace gpmc {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  candidates_examined += o.candidates_examined;
  regions_examined += o.regions_examined;
  pruned += o.pruned;
  seeds += o.seeds;
  return *this;
}

const char* to_string(ParameterKind k) {
  switch (k) {
    case ParameterKind::kEdgeRestricted: return "edge-restricted";
    case ParameterKind::kVertexRestricted: return "vertex-restricted";
    case ParameterKind::kPlainQuery: return "plain";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaskBits = 64;
// Consistent pairs the exhaustive strategy is willing to hold.
constexpr std::size_t kExhaustivePairLimit = 4'000'000;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<VertexId> mask_vertices(Mask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

unsigned effective_jobs(unsigned jobs) { return std::max(jobs, 1U); }

// Runs body(worker) on `jobs` threads (inline when jobs == 1).
template <typename Body>
void run_workers(unsigned jobs, Body&& body) {
  if (jobs <= 1) {
    body(0U);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(body, w);
  for (auto& th : threads) th.join();
}

FaultPairPair ordered(FaultPair a, FaultPair b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool witness_less(const FaultPairPair& x, const FaultPairPair& y) {
  if (x.first == y.first) return x.second < y.second;
  return x.first < y.first;
}

// ---------------------------------------------------------------------------
// Exhaustive strategy: all consistent pairs in canonical order, every
// unordered pair compared through forced outcomes on bitmasks.

struct CompactPair {
  Mask vertices = 0;
  Mask edges = 0;
};

void for_each_combination(std::size_t universe, std::size_t k,
                          const std::function<void(const std::vector<
                                                   std::size_t>&)>& fn) {
  if (k > universe) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == universe - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<CompactPair> consistent_pairs_in_order(const Graph& g,
                                                   std::size_t t,
                                                   std::size_t s) {
  const auto& edges = g.edges();
  std::vector<CompactPair> out;
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 0; k <= std::min(t, n); ++k) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& vs) {
      Mask F = 0;
      for (std::size_t v : vs) F |= bit(v);
      std::vector<std::size_t> allowed;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!(F & bit(edges[e].u)) && !(F & bit(edges[e].v))) {
          allowed.push_back(e);
        }
      }
      for (std::size_t j = 0; j <= std::min(s, allowed.size()); ++j) {
        for_each_combination(
            allowed.size(), j, [&](const std::vector<std::size_t>& es) {
              Mask S = 0;
              for (std::size_t e : es) S |= bit(allowed[e]);
              out.push_back({F, S});
              if (out.size() > kExhaustivePairLimit) {
                throw InputError(
                    "exhaustive search exceeds " +
                    std::to_string(kExhaustivePairLimit) +
                    " fault pairs; use the local strategy");
              }
            });
      }
    });
  }
  return out;
}

bool compact_indistinguishable(const std::vector<Edge>& edges,
                               const CompactPair& a, const CompactPair& b) {
  const Mask faulty = a.vertices | b.vertices;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Mask eb = bit(e);
    const VertexId x = edges[e].u, y = edges[e].v;
    // tester x -> testee y, then tester y -> testee x
    if (!(faulty & bit(x))) {
      bool fa = (a.vertices & bit(y)) || (a.edges & eb);
      bool fb = (b.vertices & bit(y)) || (b.edges & eb);
      if (fa != fb) return false;
    }
    if (!(faulty & bit(y))) {
      bool fa = (a.vertices & bit(x)) || (a.edges & eb);
      bool fb = (b.vertices & bit(x)) || (b.edges & eb);
      if (fa != fb) return false;
    }
  }
  return true;
}

FaultPair expand(const Graph& g, const CompactPair& c) {
  std::vector<Edge> S;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (c.edges & bit(e)) S.push_back(g.edges()[e]);
  }
  return make_fault_pair(g, mask_vertices(c.vertices), std::move(S));
}

TsQueryResult exhaustive_query(const Graph& g, std::size_t t, std::size_t s,
                               unsigned jobs) {
  if (g.vertex_count() > kMaskBits || g.edge_count() > kMaskBits) {
    throw InputError("exhaustive search supports at most 64 vertices and 64 "
                     "edges");
  }
  const std::vector<CompactPair> pairs = consistent_pairs_in_order(g, t, s);
  const std::size_t count = pairs.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_i{kNone};
  std::mutex mu;
  std::size_t found_i = kNone, found_j = kNone;

  jobs = effective_jobs(jobs);
  run_workers(jobs, [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += jobs) {
      if (i > best_i.load()) return;
      for (std::size_t j = i + 1; j < count; ++j) {
        if (compact_indistinguishable(g.edges(), pairs[i], pairs[j])) {
          std::lock_guard<std::mutex> lock(mu);
          if (i < found_i) {
            found_i = i;
            found_j = j;
            best_i.store(i);
          }
          return;
        }
      }
    }
  });

  TsQueryResult result;
  // Comparisons a sequential scan performs up to and including the witness.
  if (found_i == kNone) {
    result.stats.candidates_examined =
        count == 0 ? 0 : std::uint64_t{count} * (count - 1) / 2;
    return result;
  }
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i < found_i; ++i) examined += count - 1 - i;
  examined += found_j - found_i;
  result.stats.candidates_examined = examined;
  result.diagnosable = false;
  result.counterexample =
      FaultPairPair{expand(g, pairs[found_i]), expand(g, pairs[found_j])};
  return result;
}

// ---------------------------------------------------------------------------
// Local strategy.
//
// Two distinct consistent pairs are indistinguishable exactly when every
// test whose tester is fault-free under both pairs gets the same forced
// outcome. With U = F_1 u F_2, A = F_1 \ F_2, B = F_2 \ F_1:
//   * F_1 = F_2 forces S_1 = S_2, so A u B is non-empty;
//   * for a in A, every edge from a to a vertex outside U must lie in S_2
//     (and symmetrically for B and S_1); nothing else is needed, so the
//     smallest edge sets are exactly those edges;
//   * restricting both pairs to the connected component of G[U] holding a
//     vertex of A u B keeps them indistinguishable and only shrinks them.
// So (t, s)-diagnosability fails iff some connected U, containing a seed
// vertex labelled A (swap the pairs otherwise), admits a labelling into
// A, B, C = F_1 n F_2 with |A|+|C| <= t, |B|+|C| <= t and both required
// edge sets of size <= s. Seeds range over all vertices; on a hypercube
// vertex-transitivity lets the search fix the seed at vertex 0.
//
// U grows one frontier vertex at a time and each added vertex is labelled
// on the spot. A frontier vertex that is skipped stays outside U for the
// whole subtree, so edges between it and A (or B) are a lower bound on
// |S_2| (or |S_1|) and prune the subtree once they exceed s.

struct LocalCandidate {
  Mask a = 0, b = 0, c = 0;
  Mask region() const { return a | b | c; }
};

// Subtrees rooted at regions of this size are dealt out to workers.
constexpr std::size_t kSplitSize = 3;

class LabelledRegionSearch {
 public:
  LabelledRegionSearch(const std::vector<Mask>& nbr, std::size_t t,
                       std::size_t s, unsigned worker, unsigned jobs)
      : nbr_(nbr), t_(t), s_(s), worker_(worker), jobs_(jobs) {}

  // Calls found() for every admissible labelled region around the seed.
  template <typename Found>
  void from_seed(VertexId seed, SearchStats& stats, Found&& found) {
    const Mask sb = bit(seed);
    State st;
    st.cand.a = sb;
    st.f1 = 1;
    st.out_a = static_cast<std::size_t>(std::popcount(nbr_[seed]));
    visit(st, nbr_[seed], 0, 1, stats, found);
  }

 private:
  struct State {
    LocalCandidate cand;
    std::size_t f1 = 0, f2 = 0;
    // Edges from A (resp. B) to vertices outside U.
    std::size_t out_a = 0, out_b = 0;
    // Edges from A (resp. B) to vertices excluded for this subtree.
    std::size_t lb_a = 0, lb_b = 0;
  };

  enum class Label { kA, kB, kC };

  bool owned(std::size_t size) {
    if (size < kSplitSize) return worker_ == 0;
    if (size == kSplitSize) return (split_counter_++ % jobs_) == worker_;
    return true;
  }

  template <typename Found>
  void visit(const State& st, Mask frontier, Mask excluded, std::size_t size,
             SearchStats& stats, Found& found) {
    const bool mine = owned(size);
    if (size == kSplitSize && !mine) return;
    if (mine) {
      ++stats.regions_examined;
      if (st.out_a <= s_ && st.out_b <= s_) {
        ++stats.candidates_examined;
        found(st.cand);
      }
    }
    const Mask region = st.cand.region();
    std::size_t lb_a = st.lb_a, lb_b = st.lb_b;
    Mask remaining = frontier;
    while (remaining) {
      const Mask w = remaining & (~remaining + 1);
      remaining &= ~w;
      const VertexId wi = static_cast<VertexId>(std::countr_zero(w));
      const Mask next = (remaining | nbr_[wi]) & ~(region | w) & ~excluded;
      for (Label label : {Label::kA, Label::kB, Label::kC}) {
        State child = st;
        child.lb_a = lb_a;
        child.lb_b = lb_b;
        if (!add(child, wi, label, excluded)) {
          if (mine) ++stats.pruned;
          continue;
        }
        visit(child, next, excluded, size + 1, stats, found);
      }
      excluded |= w;
      lb_a += static_cast<std::size_t>(std::popcount(nbr_[wi] & st.cand.a));
      lb_b += static_cast<std::size_t>(std::popcount(nbr_[wi] & st.cand.b));
      if (lb_a > s_ || lb_b > s_) {
        if (mine) ++stats.pruned;
        break;
      }
    }
  }

  // Adds v to U under `label`; false when a budget is exceeded.
  bool add(State& st, VertexId v, Label label, Mask excluded) const {
    const Mask vb = bit(v);
    const Mask region = st.cand.region() | vb;
    st.out_a -= static_cast<std::size_t>(std::popcount(nbr_[v] & st.cand.a));
    st.out_b -= static_cast<std::size_t>(std::popcount(nbr_[v] & st.cand.b));
    const auto outside =
        static_cast<std::size_t>(std::popcount(nbr_[v] & ~region));
    const auto blocked =
        static_cast<std::size_t>(std::popcount(nbr_[v] & excluded));
    switch (label) {
      case Label::kA:
        if (st.f1 == t_) return false;
        ++st.f1;
        st.cand.a |= vb;
        st.out_a += outside;
        st.lb_a += blocked;
        break;
      case Label::kB:
        if (st.f2 == t_) return false;
        ++st.f2;
        st.cand.b |= vb;
        st.out_b += outside;
        st.lb_b += blocked;
        break;
      case Label::kC:
        if (st.f1 == t_ || st.f2 == t_) return false;
        ++st.f1;
        ++st.f2;
        st.cand.c |= vb;
        break;
    }
    return st.lb_a <= s_ && st.lb_b <= s_;
  }

  const std::vector<Mask>& nbr_;
  std::size_t t_;
  std::size_t s_;
  unsigned worker_;
  unsigned jobs_;
  std::uint64_t split_counter_ = 0;
};

FaultPairPair materialise(const Graph& g, const LocalCandidate& cand) {
  const Mask region = cand.region();
  auto required = [&](Mask side) {
    std::vector<Edge> S;
    for (VertexId u : mask_vertices(side)) {
      for (VertexId v : g.neighbors(u)) {
        if (!(region & bit(v))) S.push_back(Edge::of(u, v));
      }
    }
    return S;
  };
  FaultPair first =
      make_fault_pair(g, mask_vertices(cand.a | cand.c), required(cand.b));
  FaultPair second =
      make_fault_pair(g, mask_vertices(cand.b | cand.c), required(cand.a));
  return ordered(std::move(first), std::move(second));
}

bool symmetric_seed(const Graph& g, const SearchOptions& options) {
  return options.use_symmetry && !options.audit_full_enumeration &&
         g.hypercube_dimension().has_value();
}

TsQueryResult local_query(const Graph& g, std::size_t t, std::size_t s,
                          const SearchOptions& options) {
  if (g.vertex_count() > kMaskBits) {
    throw InputError("local search supports at most 64 vertices");
  }
  TsQueryResult result;
  if (t == 0 || g.empty()) return result;

  std::vector<Mask> nbr(g.vertex_count(), 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) nbr[u] |= bit(v);
  }
  const bool one_seed = symmetric_seed(g, options);
  const VertexId seed_end = one_seed ? 1 : static_cast<VertexId>(
                                               g.vertex_count());

  const unsigned jobs = effective_jobs(options.jobs);
  std::vector<SearchStats> worker_stats(jobs);
  std::vector<std::optional<FaultPairPair>> worker_best(jobs);
  run_workers(jobs, [&](unsigned worker) {
    LabelledRegionSearch search(nbr, t, s, worker, jobs);
    auto& best = worker_best[worker];
    for (VertexId seed = 0; seed < seed_end; ++seed) {
      search.from_seed(seed, worker_stats[worker],
                       [&](const LocalCandidate& cand) {
                         FaultPairPair w = materialise(g, cand);
                         if (!best || witness_less(w, *best)) {
                           best = std::move(w);
                         }
                       });
    }
  });

  result.stats.seeds = seed_end;
  for (const auto& st : worker_stats) result.stats += st;
  for (auto& w : worker_best) {
    if (w && (!result.counterexample || witness_less(*w, *result.counterexample))) {
      result.counterexample = std::move(w);
    }
  }
  result.diagnosable = !result.counterexample.has_value();
  return result;
}

}  // namespace

TsQueryResult is_ts_diagnosable(const Graph& g, std::size_t t, std::size_t s,
                                const SearchOptions& options) {
  TsQueryResult result =
      options.strategy == SearchStrategy::kExhaustive
          ? exhaustive_query(g, t, s, options.jobs)
          : local_query(g, t, s, options);
  if (result.counterexample && !witness_is_valid(g, *result.counterexample, t, s)) {
    throw std::logic_error("search produced an invalid witness " +
                           to_string(result.counterexample->first) + " / " +
                           to_string(result.counterexample->second));
  }
  return result;
}

namespace {

DiagnosabilityReport make_report(const Graph& g, ParameterKind kind,
                                 std::size_t level,
                                 const SearchOptions& options) {
  DiagnosabilityReport report;
  report.graph = g.name();
  report.kind = kind;
  report.level = level;
  report.strategy = options.strategy;
  report.symmetry_used = options.strategy == SearchStrategy::kLocal &&
                         symmetric_seed(g, options);
  return report;
}

}  // namespace

DiagnosabilityReport edge_restricted_diagnosability(
    const Graph& g, std::size_t h, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DiagnosabilityReport report =
      make_report(g, ParameterKind::kEdgeRestricted, h, options);
  if (!g.empty()) {
    if (h <= g.min_degree()) {
      report.bounds = lemma2_upper_bounds(g, h);
    } else {
      report.outside_analyzed_range = true;
    }
  }
  std::size_t t = 0;
  while (t < g.vertex_count()) {
    TsQueryResult q = is_ts_diagnosable(g, t + 1, h, options);
    report.stats += q.stats;
    if (!q.diagnosable) {
      report.witness = std::move(q.counterexample);
      break;
    }
    ++t;
  }
  report.value = t;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

DiagnosabilityReport vertex_restricted_edge_diagnosability(
    const Graph& g, std::size_t r, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DiagnosabilityReport report =
      make_report(g, ParameterKind::kVertexRestricted, r, options);
  if (!g.empty()) report.bounds = lemma2_upper_bounds(g, 0);
  report.outside_analyzed_range = r >= 2;
  const std::size_t m = g.edge_count();
  if (r == 0) {
    report.value = m;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }
  TsQueryResult base = is_ts_diagnosable(g, r, 0, options);
  report.stats += base.stats;
  if (!base.diagnosable) {
    report.witness = std::move(base.counterexample);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }
  std::size_t s = 0;
  while (s < m) {
    TsQueryResult q = is_ts_diagnosable(g, r, s + 1, options);
    report.stats += q.stats;
    if (!q.diagnosable) {
      report.witness = std::move(q.counterexample);
      break;
    }
    ++s;
  }
  report.value = s;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::size_t pmc_diagnosability(const Graph& g, const SearchOptions& options) {
  return *edge_restricted_diagnosability(g, 0, options).value;
}

Lemma2Bounds lemma2_upper_bounds(const Graph& g, std::size_t h) {
  const std::size_t delta = g.min_degree();
  if (h > delta) {
    throw InputError("h = " + std::to_string(h) +
                     " exceeds the minimum degree " + std::to_string(delta));
  }
  return {delta - h, delta >= 2 ? delta - 2 : 0};
}

FaultPairPair construct_indistinguishable_witness(const Graph& g, VertexId u,
                                                  std::size_t h) {
  auto nbrs = g.neighbors(u);
  if (h > nbrs.size()) {
    throw InputError("h = " + std::to_string(h) + " exceeds degree " +
                     std::to_string(nbrs.size()) + " of vertex " +
                     std::to_string(u));
  }
  std::vector<VertexId> shared(nbrs.begin() + static_cast<std::ptrdiff_t>(h),
                               nbrs.end());
  std::vector<VertexId> with_u = shared;
  with_u.push_back(u);
  std::vector<Edge> blocked;
  for (std::size_t i = 0; i < h; ++i) blocked.push_back(Edge::of(u, nbrs[i]));
  return {make_fault_pair(g, std::move(with_u), {}),
          make_fault_pair(g, std::move(shared), std::move(blocked))};
}

FaultPairPair construct_edge_witness(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) {
    throw InputError(to_string(e) + " is not an edge of the graph");
  }
  const Edge edge = Edge::of(e.u, e.v);
  const std::size_t delta = g.min_degree();
  VertexId u = edge.u, v = edge.v;
  if (g.degree(u) != delta) {
    if (g.degree(v) != delta) {
      throw InputError("neither endpoint of " + to_string(edge) +
                       " has minimum degree " + std::to_string(delta));
    }
    std::swap(u, v);
  }
  auto others = [&](VertexId x) {
    std::vector<Edge> out;
    for (const Edge& f : g.incident_edges(x)) {
      if (f != edge) out.push_back(f);
    }
    return out;
  };
  return {make_fault_pair(g, {u}, others(v)),
          make_fault_pair(g, {v}, others(u))};
}

bool witness_is_valid(const Graph& g, const FaultPairPair& w, std::size_t t,
                      std::size_t s) {
  const auto& [a, b] = w;
  if (a.graph_fingerprint() != g.fingerprint() ||
      b.graph_fingerprint() != g.fingerprint() || a == b) {
    return false;
  }
  for (const FaultPair* p : {&a, &b}) {
    if (p->faulty_vertices().size() > t || p->faulty_edges().size() > s) {
      return false;
    }
  }
  return !distinguishable_lemma1(g, a, b).distinguishable;
}

}  // namespace gpmc
