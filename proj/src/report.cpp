#include "gpmc/report.hpp"

#include "gpmc/errors.hpp"

namespace gpmc {

namespace {

VertexId vertex_from_json(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError("expected a vertex id, got " + j.dump());
  }
  return j.get<VertexId>();
}

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError("expected an edge [u, v], got " + j.dump());
  }
  return Edge::of(vertex_from_json(j[0]), vertex_from_json(j[1]));
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

}  // namespace

Json to_json(const FaultPair& fp) {
  Json edges = Json::array();
  for (const Edge& e : fp.faulty_edges()) edges.push_back({e.u, e.v});
  return Json{{"F", fp.faulty_vertices()}, {"S", std::move(edges)}};
}

FaultPair fault_pair_from_json(const Graph& g, const Json& j) {
  const Json& jf = field(j, "F");
  const Json& js = field(j, "S");
  if (!jf.is_array() || !js.is_array()) {
    throw InputError("fault pair fields F and S must be arrays");
  }
  std::vector<VertexId> F;
  for (const Json& v : jf) F.push_back(vertex_from_json(v));
  std::vector<Edge> S;
  for (const Json& e : js) S.push_back(edge_from_json(e));
  return make_fault_pair(g, std::move(F), std::move(S));
}

Json to_json(const Syndrome& sig) {
  Json out = Json::array();
  for (const TestResult& r : sig.results()) {
    out.push_back({r.test.tester, r.test.testee,
                   static_cast<int>(r.outcome)});
  }
  return out;
}

Syndrome syndrome_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw InputError("syndrome must be an array of triples");
  std::vector<TestResult> results;
  for (const Json& triple : j) {
    if (!triple.is_array() || triple.size() != 3) {
      throw InputError("syndrome entry must be [tester, testee, outcome], got " +
                       triple.dump());
    }
    const Json& o = triple[2];
    if (!o.is_number_integer() || (o.get<int>() != 0 && o.get<int>() != 1)) {
      throw InputError("test outcome must be 0 or 1, got " + o.dump());
    }
    results.push_back({{vertex_from_json(triple[0]), vertex_from_json(triple[1])},
                       o.get<int>() ? TestOutcome::kFail : TestOutcome::kPass});
  }
  return Syndrome::from_results(g, results);
}

Json to_json(const FaultPairPair& w) {
  return Json{{"first", to_json(w.first)}, {"second", to_json(w.second)}};
}

FaultPairPair witness_from_json(const Graph& g, const Json& j) {
  return {fault_pair_from_json(g, field(j, "first")),
          fault_pair_from_json(g, field(j, "second"))};
}

Json to_json(const Verdict& v) {
  Json out{{"distinguishable", v.distinguishable}};
  if (v.witness) {
    const auto& w = *v.witness;
    out["witness"] = Json{{"condition", w.condition},
                          {"edge", {w.edge.u, w.edge.v}},
                          {"tester", w.tester},
                          {"testee", w.testee},
                          {"first_is_a", w.first_is_a}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json graph_summary(const Graph& g) {
  Json out{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  out["min_degree"] = g.empty() ? Json(nullptr) : Json(g.min_degree());
  out["max_degree"] = g.max_degree();
  auto gi = girth(g);
  out["girth"] = gi ? Json(*gi) : Json(nullptr);
  return out;
}

Json stats_to_json(const SearchStats& st) {
  return Json{{"candidates_examined", st.candidates_examined},
              {"regions_examined", st.regions_examined},
              {"pruned", st.pruned},
              {"seeds", st.seeds}};
}

Json to_json(const DiagnosabilityReport& r) {
  Json out{{"graph", r.graph},
           {"parameter", to_string(r.kind)},
           {"level", r.level}};
  out["value"] = r.value ? Json(*r.value) : Json(nullptr);
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  if (r.bounds) {
    out["lemma2_bounds"] = Json{{"t_h", r.bounds->t_h_bound},
                                {"s_1", r.bounds->s1_bound}};
  } else {
    out["lemma2_bounds"] = nullptr;
  }
  out["outside_analyzed_range"] = r.outside_analyzed_range;
  out["strategy"] =
      r.strategy == SearchStrategy::kExhaustive ? "exhaustive" : "local";
  out["symmetry_used"] = r.symmetry_used;
  return out;
}

Json to_json(const DiagnosisResult& r) {
  Json cands = Json::array();
  for (const FaultPair& fp : r.candidates) cands.push_back(to_json(fp));
  return Json{{"status", to_string(r.status)},
              {"candidate_count", r.candidate_count},
              {"candidates", std::move(cands)},
              {"truncated", r.truncated}};
}

Json make_envelope(const std::string& command, Json config, Json result,
                   Json stats) {
  return Json{{"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)},
              {"stats", std::move(stats)},
              {"version", kReportVersion}};
}

}  // namespace gpmc
