#include "gpmc/fault_model.hpp"

#include <algorithm>
#include <random>

#include "gpmc/errors.hpp"

namespace gpmc {

bool FaultPair::is_faulty(VertexId u) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), u);
}

bool FaultPair::is_faulty(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool operator<(const FaultPair& a, const FaultPair& b) {
  if (a.vertices_.size() != b.vertices_.size()) {
    return a.vertices_.size() < b.vertices_.size();
  }
  if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
  if (a.edges_.size() != b.edges_.size()) {
    return a.edges_.size() < b.edges_.size();
  }
  return a.edges_ < b.edges_;
}

FaultPair make_fault_pair(const Graph& g, std::vector<VertexId> F,
                          std::vector<Edge> S) {
  for (VertexId u : F) g.check_vertex(u);
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  for (Edge& e : S) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("faulty edge " + to_string(Edge::of(e.u, e.v)) +
                       " is not an edge of the graph");
    }
    e = Edge::of(e.u, e.v);
  }
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (const Edge& e : S) {
    for (VertexId end : {e.u, e.v}) {
      if (std::binary_search(F.begin(), F.end(), end)) {
        throw ConsistencyError("faulty edge " + to_string(e) +
                               " is incident to faulty vertex " +
                               std::to_string(end));
      }
    }
  }
  FaultPair fp;
  fp.vertices_ = std::move(F);
  fp.edges_ = std::move(S);
  fp.fingerprint_ = g.fingerprint();
  return fp;
}

std::string to_string(const FaultPair& fp) {
  std::string out = "F={";
  for (std::size_t i = 0; i < fp.faulty_vertices().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(fp.faulty_vertices()[i]);
  }
  out += "} S={";
  for (std::size_t i = 0; i < fp.faulty_edges().size(); ++i) {
    if (i) out += ",";
    out += to_string(fp.faulty_edges()[i]);
  }
  return out + "}";
}

const char* to_string(ForcedOutcome f) {
  switch (f) {
    case ForcedOutcome::kForcedPass: return "forced-pass";
    case ForcedOutcome::kForcedFail: return "forced-fail";
    case ForcedOutcome::kArbitrary: return "arbitrary";
  }
  return "?";
}

std::vector<Test> enumerate_tests(const Graph& g) {
  std::vector<Test> tests;
  tests.reserve(2 * g.edge_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) tests.push_back({u, v});
  }
  return tests;
}

namespace {

void check_binding(const Graph& g, std::uint64_t fingerprint,
                   const char* what) {
  if (g.fingerprint() != fingerprint) {
    throw InputError(std::string(what) + " belongs to a different graph");
  }
}

}  // namespace

ForcedOutcome forced_outcome(const Graph& g, const Test& t,
                             const FaultPair& fp) {
  check_binding(g, fp.graph_fingerprint(), "fault pair");
  if (!g.has_edge(t.tester, t.testee)) {
    throw InputError("no test " + std::to_string(t.tester) + "->" +
                     std::to_string(t.testee) + ": vertices are not adjacent");
  }
  return forced_outcome_unchecked(t, fp);
}

Syndrome::Syndrome(const Graph& g, std::vector<TestOutcome> outcomes)
    : tests_(enumerate_tests(g)), outcomes_(std::move(outcomes)),
      fingerprint_(g.fingerprint()) {
  if (outcomes_.size() != tests_.size()) {
    throw InputError("syndrome has " + std::to_string(outcomes_.size()) +
                     " results but the graph has " +
                     std::to_string(tests_.size()) + " tests");
  }
}

Syndrome Syndrome::from_results(const Graph& g,
                                std::span<const TestResult> results) {
  std::vector<Test> tests = enumerate_tests(g);
  std::vector<TestOutcome> outcomes(tests.size(), TestOutcome::kPass);
  std::vector<bool> seen(tests.size(), false);
  for (const TestResult& r : results) {
    auto it = std::lower_bound(tests.begin(), tests.end(), r.test);
    if (it == tests.end() || *it != r.test) {
      throw InputError("syndrome entry " + std::to_string(r.test.tester) +
                       "->" + std::to_string(r.test.testee) +
                       " is not a test of the graph");
    }
    auto idx = static_cast<std::size_t>(it - tests.begin());
    if (seen[idx]) {
      throw InputError("syndrome lists test " + std::to_string(r.test.tester) +
                       "->" + std::to_string(r.test.testee) + " twice");
    }
    seen[idx] = true;
    outcomes[idx] = r.outcome;
  }
  auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    const Test& t = tests[static_cast<std::size_t>(missing - seen.begin())];
    throw InputError("incomplete syndrome: no result for test " +
                     std::to_string(t.tester) + "->" +
                     std::to_string(t.testee));
  }
  return Syndrome(g, std::move(outcomes));
}

TestOutcome Syndrome::outcome(VertexId tester, VertexId testee) const {
  Test key{tester, testee};
  auto it = std::lower_bound(tests_.begin(), tests_.end(), key);
  if (it == tests_.end() || *it != key) {
    throw InputError("no test " + std::to_string(tester) + "->" +
                     std::to_string(testee) + " in syndrome");
  }
  return outcomes_[static_cast<std::size_t>(it - tests_.begin())];
}

std::vector<TestResult> Syndrome::results() const {
  std::vector<TestResult> out;
  out.reserve(tests_.size());
  for (std::size_t i = 0; i < tests_.size(); ++i) {
    out.push_back({tests_[i], outcomes_[i]});
  }
  return out;
}

Syndrome generate_syndrome(const Graph& g, const FaultPair& fp,
                           const Adversary& adversary) {
  check_binding(g, fp.graph_fingerprint(), "fault pair");
  std::vector<Test> tests = enumerate_tests(g);
  std::vector<TestOutcome> outcomes;
  outcomes.reserve(tests.size());
  std::mt19937_64 rng(adversary.seed);
  for (const Test& t : tests) {
    switch (forced_outcome_unchecked(t, fp)) {
      case ForcedOutcome::kForcedPass:
        outcomes.push_back(TestOutcome::kPass);
        break;
      case ForcedOutcome::kForcedFail:
        outcomes.push_back(TestOutcome::kFail);
        break;
      case ForcedOutcome::kArbitrary:
        switch (adversary.kind) {
          case Adversary::Kind::kAllPass:
            outcomes.push_back(TestOutcome::kPass);
            break;
          case Adversary::Kind::kAllFail:
            outcomes.push_back(TestOutcome::kFail);
            break;
          case Adversary::Kind::kRandom:
            outcomes.push_back((rng() & 1U) ? TestOutcome::kFail
                                            : TestOutcome::kPass);
            break;
          case Adversary::Kind::kExplicit: {
            auto it = adversary.assignments.find({t.tester, t.testee});
            if (it == adversary.assignments.end()) {
              throw InputError("explicit adversary has no outcome for test " +
                               std::to_string(t.tester) + "->" +
                               std::to_string(t.testee));
            }
            outcomes.push_back(it->second);
            break;
          }
        }
        break;
    }
  }
  return Syndrome(g, std::move(outcomes));
}

bool is_consistent(const Graph& g, const Syndrome& sig, const FaultPair& fp) {
  check_binding(g, fp.graph_fingerprint(), "fault pair");
  check_binding(g, sig.graph_fingerprint(), "syndrome");
  const auto& tests = sig.tests();
  for (std::size_t i = 0; i < tests.size(); ++i) {
    ForcedOutcome f = forced_outcome_unchecked(tests[i], fp);
    TestOutcome got = sig.outcomes()[i];
    if (f == ForcedOutcome::kForcedPass && got != TestOutcome::kPass) {
      return false;
    }
    if (f == ForcedOutcome::kForcedFail && got != TestOutcome::kFail) {
      return false;
    }
  }
  return true;
}

namespace {

enum class Status : std::uint8_t { kUndecided, kGood, kFaulty };

class ConsistentPairSearch {
 public:
  ConsistentPairSearch(const Graph& g, const Syndrome& sig, std::size_t t,
                       std::size_t s, const ConsistentPairVisitor& visit)
      : g_(g), t_(t), s_(s), visit_(visit),
        status_(g.vertex_count(), Status::kUndecided) {
    // fails_[u][k]: outcome of u testing its k-th neighbour.
    fails_.resize(g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v : g.neighbors(u)) {
        fails_[u].push_back(sig.outcome(u, v) == TestOutcome::kFail);
      }
    }
  }

  void run() { descend(0); }

 private:
  bool fails(VertexId tester, VertexId testee) const {
    auto nbrs = g_.neighbors(tester);
    auto k = std::lower_bound(nbrs.begin(), nbrs.end(), testee) - nbrs.begin();
    return fails_[tester][static_cast<std::size_t>(k)];
  }

  // Which statuses v can still take given its decided neighbours.
  void options(VertexId v, bool& can_fault, bool& can_good) const {
    can_fault = true;
    can_good = true;
    for (VertexId w : g_.neighbors(v)) {
      switch (status_[w]) {
        case Status::kGood:
          // A good tester passes a good testee over a good edge and fails
          // a faulty testee; a faulty edge shows as failure both ways.
          if (!fails(w, v)) can_fault = false;
          if (fails(w, v) != fails(v, w)) can_good = false;
          break;
        case Status::kFaulty:
          if (!fails(v, w)) can_good = false;
          break;
        case Status::kUndecided:
          break;
      }
    }
  }

  // Forward check: every undecided neighbour of v keeps a legal status.
  bool neighbours_viable(VertexId v) const {
    for (VertexId w : g_.neighbors(v)) {
      if (status_[w] != Status::kUndecided) continue;
      bool can_fault = false, can_good = false;
      options(w, can_fault, can_good);
      if (!can_good && (!can_fault || faulty_.size() >= t_)) return false;
    }
    return true;
  }

  bool descend(VertexId v) {
    if (v == g_.vertex_count()) {
      std::vector<Edge> sorted = faulty_edges_;
      std::sort(sorted.begin(), sorted.end());
      return visit_(faulty_, sorted);
    }
    bool can_fault = false, can_good = false;
    options(v, can_fault, can_good);

    if (can_good) {
      std::size_t added = 0;
      for (VertexId w : g_.neighbors(v)) {
        if (status_[w] == Status::kGood && fails(w, v)) {
          faulty_edges_.push_back(Edge::of(v, w));
          ++added;
        }
      }
      status_[v] = Status::kGood;
      bool keep_going = true;
      if (faulty_edges_.size() <= s_ && neighbours_viable(v)) {
        keep_going = descend(v + 1);
      }
      status_[v] = Status::kUndecided;
      faulty_edges_.resize(faulty_edges_.size() - added);
      if (!keep_going) return false;
    }
    if (can_fault && faulty_.size() < t_) {
      status_[v] = Status::kFaulty;
      faulty_.push_back(v);
      bool keep_going = true;
      if (neighbours_viable(v)) keep_going = descend(v + 1);
      faulty_.pop_back();
      status_[v] = Status::kUndecided;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t t_;
  std::size_t s_;
  const ConsistentPairVisitor& visit_;
  std::vector<std::vector<bool>> fails_;
  std::vector<Status> status_;
  std::vector<VertexId> faulty_;
  std::vector<Edge> faulty_edges_;
};

}  // namespace

void for_each_consistent_pair(const Graph& g, const Syndrome& sig,
                              std::size_t t, std::size_t s,
                              const ConsistentPairVisitor& visit) {
  check_binding(g, sig.graph_fingerprint(), "syndrome");
  ConsistentPairSearch(g, sig, t, s, visit).run();
}

std::vector<FaultPair> enumerate_consistent_pairs(const Graph& g,
                                                  const Syndrome& sig,
                                                  std::size_t t,
                                                  std::size_t s) {
  std::vector<FaultPair> out;
  for_each_consistent_pair(g, sig, t, s,
                           [&](const std::vector<VertexId>& F,
                               const std::vector<Edge>& S) {
                             out.push_back(make_fault_pair(g, F, S));
                             return true;
                           });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gpmc
