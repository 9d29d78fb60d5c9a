#include "gpmc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "gpmc/diagnosability.hpp"
#include "gpmc/diagnosis.hpp"
#include "gpmc/errors.hpp"
#include "gpmc/fault_model.hpp"
#include "gpmc/report.hpp"
#include "gpmc/topology.hpp"

namespace gpmc {

namespace {

struct RunConfig {

  std::string topology;
  std::optional<std::size_t> n;
  double p = 0.5;
  std::uint64_t graph_seed = 1;
  std::string edge_list;

  std::string faulty_vertices;
  std::string faulty_edges;
  std::optional<std::size_t> random_vertices;
  std::optional<std::size_t> random_edges;

  std::optional<std::size_t> t, s, h, r;
  bool edge_restricted = false;
  bool vertex_restricted = false;
  std::string strategy = "local";

  std::string adversary = "all-pass";
  std::uint64_t seed = 1;
  std::string syndrome_path;
  std::size_t cap = kDefaultCandidateCap;

  std::size_t n_min = 2;
  std::size_t n_max = 4;

  std::string format = "table";
  bool audit = false;
  bool timing = false;
  unsigned jobs = 1;
  std::string output;
  std::string export_dot;
  std::string export_edge_list;

  std::vector<std::string> positional;
};

std::size_t parse_size(const std::string& key, const std::string& text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(key + " expects a non-negative integer, got '" + text +
                     "'");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

// Positional tokens: "KIND N" for the topology, "key=value" for bounds.
void apply_positionals(RunConfig& cfg) {
  for (const std::string& tok : cfg.positional) {
    auto eq = tok.find('=');
    if (eq != std::string::npos) {
      std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
      if (key == "h") cfg.h = parse_size(key, value);
      else if (key == "r") cfg.r = parse_size(key, value);
      else if (key == "t") cfg.t = parse_size(key, value);
      else if (key == "s") cfg.s = parse_size(key, value);
      else if (key == "n") cfg.n = parse_size(key, value);
      else throw InputError("unknown parameter '" + key + "'");
      continue;
    }
    if (cfg.topology.empty() && cfg.edge_list.empty() &&
        tok.find_first_not_of("0123456789") != std::string::npos) {
      cfg.topology = tok;
    } else if (!cfg.n) {
      cfg.n = parse_size("size", tok);
    } else {
      throw InputError("unexpected argument '" + tok + "'");
    }
  }
  if (cfg.h) cfg.edge_restricted = cfg.edge_restricted || !cfg.vertex_restricted;
  if (cfg.r && !cfg.h) cfg.vertex_restricted = true;
}

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.edge_list.empty() && !cfg.topology.empty()) {
    throw InputError("give either --topology or --edge-list, not both");
  }
  if (!cfg.edge_list.empty()) return read_edge_list_file(cfg.edge_list);
  if (cfg.topology.empty()) {
    throw InputError("no topology: use --topology KIND --n N or --edge-list");
  }
  if (!cfg.n) throw InputError("topology '" + cfg.topology + "' needs --n");
  return build_named_topology(cfg.topology,
                              {*cfg.n, cfg.p, cfg.graph_seed});
}

Json topology_config(const RunConfig& cfg) {
  if (!cfg.edge_list.empty()) return Json{{"edge_list", cfg.edge_list}};
  Json j{{"kind", cfg.topology}, {"n", cfg.n ? Json(*cfg.n) : Json(nullptr)}};
  if (cfg.topology == "random") {
    j["p"] = cfg.p;
    j["graph_seed"] = cfg.graph_seed;
  }
  return j;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Uniform index in [0, bound) from raw draws; reproducible everywhere.
std::size_t draw_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

FaultPair random_fault_pair(const Graph& g, std::size_t kv, std::size_t ke,
                            std::uint64_t seed) {
  if (kv > g.vertex_count()) {
    throw InputError("cannot pick " + std::to_string(kv) +
                     " faulty vertices from " +
                     std::to_string(g.vertex_count()));
  }
  std::mt19937_64 rng(seed);
  std::vector<VertexId> order(g.vertex_count());
  for (VertexId i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[draw_index(rng, i)]);
  }
  std::vector<VertexId> F(order.begin(),
                          order.begin() + static_cast<std::ptrdiff_t>(kv));
  std::sort(F.begin(), F.end());
  std::vector<Edge> allowed;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(F.begin(), F.end(), e.u) &&
        !std::binary_search(F.begin(), F.end(), e.v)) {
      allowed.push_back(e);
    }
  }
  if (ke > allowed.size()) {
    throw InputError("only " + std::to_string(allowed.size()) +
                     " edges avoid the faulty vertices; cannot pick " +
                     std::to_string(ke));
  }
  for (std::size_t i = allowed.size(); i > 1; --i) {
    std::swap(allowed[i - 1], allowed[draw_index(rng, i)]);
  }
  allowed.resize(ke);
  return make_fault_pair(g, std::move(F), std::move(allowed));
}

bool has_fault_spec(const RunConfig& cfg) {
  return !cfg.faulty_vertices.empty() || !cfg.faulty_edges.empty() ||
         cfg.random_vertices || cfg.random_edges;
}

FaultPair load_fault_pair(const Graph& g, const RunConfig& cfg) {
  const bool explicit_spec =
      !cfg.faulty_vertices.empty() || !cfg.faulty_edges.empty();
  const bool random_spec = cfg.random_vertices || cfg.random_edges;
  if (explicit_spec && random_spec) {
    throw InputError("give explicit faults or random fault sizes, not both");
  }
  if (random_spec) {
    return random_fault_pair(g, cfg.random_vertices.value_or(0),
                             cfg.random_edges.value_or(0), cfg.seed);
  }
  std::vector<VertexId> F;
  for (const std::string& tok : split_list(cfg.faulty_vertices)) {
    std::size_t v = parse_size("--faulty-vertices", tok);
    if (v >= g.vertex_count()) {
      throw InputError("faulty vertex " + tok + " is not in the graph");
    }
    F.push_back(static_cast<VertexId>(v));
  }
  std::vector<Edge> S;
  for (const std::string& tok : split_list(cfg.faulty_edges)) {
    auto dash = tok.find_first_of("-:");
    if (dash == std::string::npos) {
      throw InputError("faulty edge '" + tok + "' must look like u-v");
    }
    std::size_t a = parse_size("--faulty-edges", tok.substr(0, dash));
    std::size_t b = parse_size("--faulty-edges", tok.substr(dash + 1));
    if (a >= g.vertex_count() || b >= g.vertex_count()) {
      throw InputError("faulty edge " + tok + " is not in the graph");
    }
    S.push_back(Edge::of(static_cast<VertexId>(a), static_cast<VertexId>(b)));
  }
  return make_fault_pair(g, std::move(F), std::move(S));
}

Json fault_config(const RunConfig& cfg) {
  if (cfg.random_vertices || cfg.random_edges) {
    return Json{{"random_vertices", cfg.random_vertices.value_or(0)},
                {"random_edges", cfg.random_edges.value_or(0)},
                {"seed", cfg.seed}};
  }
  return Json{{"faulty_vertices", cfg.faulty_vertices},
              {"faulty_edges", cfg.faulty_edges}};
}

Adversary load_adversary(const RunConfig& cfg) {
  if (cfg.adversary == "all-pass") return Adversary::all_pass();
  if (cfg.adversary == "all-fail") return Adversary::all_fail();
  if (cfg.adversary == "random") return Adversary::random(cfg.seed);
  throw InputError("unknown adversary '" + cfg.adversary +
                   "' (expected all-pass, all-fail or random)");
}

Json adversary_config(const RunConfig& cfg) {
  Json j{{"kind", cfg.adversary}};
  if (cfg.adversary == "random") j["seed"] = cfg.seed;
  return j;
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions opt;
  if (cfg.strategy == "exhaustive") {
    opt.strategy = SearchStrategy::kExhaustive;
  } else if (cfg.strategy != "local") {
    throw InputError("unknown strategy '" + cfg.strategy +
                     "' (expected local or exhaustive)");
  }
  opt.audit_full_enumeration = cfg.audit;
  opt.use_symmetry = !cfg.audit;
  opt.jobs = cfg.jobs;
  return opt;
}

std::string fault_pair_text(const Graph& g, const FaultPair& fp) {
  std::string out = "F={";
  bool first = true;
  for (VertexId v : fp.faulty_vertices()) {
    out += (first ? "" : ",") + g.label(v);
    first = false;
  }
  out += "} S={";
  first = true;
  for (const Edge& e : fp.faulty_edges()) {
    out += (first ? "" : ",") + g.label(e.u) + "-" + g.label(e.v);
    first = false;
  }
  return out + "}";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string json_or_null(const Json& j) {
  return j.is_null() ? std::string("inf") : j.dump();
}

// Output sink: --output PATH or the caller's stream.
struct Sink {
  std::ostream* stream = nullptr;
  std::ofstream file;
};

// ---------------------------------------------------------------------------

int cmd_topology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cfg);
  Json summary = graph_summary(g);
  if (!cfg.export_dot.empty()) {
    std::ofstream f(cfg.export_dot);
    if (!f) throw InputError("cannot write '" + cfg.export_dot + "'");
    write_dot(f, g);
  }
  if (!cfg.export_edge_list.empty()) {
    std::ofstream f(cfg.export_edge_list);
    if (!f) throw InputError("cannot write '" + cfg.export_edge_list + "'");
    write_edge_list(f, g);
  }
  if (cfg.format == "json") {
    Json config{{"topology", topology_config(cfg)}};
    out << make_envelope("topology", config, summary, Json::object()).dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "name,vertices,edges,min_degree,max_degree,girth\n"
        << csv_quote(g.name()) << "," << g.vertex_count() << ","
        << g.edge_count() << "," << json_or_null(summary["min_degree"]) << ","
        << g.max_degree() << "," << json_or_null(summary["girth"]) << "\n";
  } else {
    out << "graph       " << g.name() << "\n"
        << "vertices    " << g.vertex_count() << "\n"
        << "edges       " << g.edge_count() << "\n"
        << "min degree  " << json_or_null(summary["min_degree"]) << "\n"
        << "girth       " << json_or_null(summary["girth"]) << "\n";
  }
  (void)err;
  return kExitOk;
}

int cmd_inject(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Graph g = load_graph(cfg);
  FaultPair fp = load_fault_pair(g, cfg);
  Syndrome sig = generate_syndrome(g, fp, load_adversary(cfg));
  if (cfg.format == "json") {
    Json config{{"topology", topology_config(cfg)},
                {"faults", fault_config(cfg)},
                {"adversary", adversary_config(cfg)}};
    Json result{{"fault_pair", to_json(fp)}, {"syndrome", to_json(sig)}};
    out << make_envelope("inject", config, result, Json::object()).dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "tester,testee,outcome\n";
    for (const TestResult& r : sig.results()) {
      out << r.test.tester << "," << r.test.testee << ","
          << static_cast<int>(r.outcome) << "\n";
    }
  } else {
    out << "fault pair  " << fault_pair_text(g, fp) << "\n"
        << "tests       " << sig.size() << "\n";
    for (const TestResult& r : sig.results()) {
      out << "  " << g.label(r.test.tester) << " -> " << g.label(r.test.testee)
          << "  " << (r.outcome == TestOutcome::kFail ? "1" : "0") << "\n";
    }
  }
  return kExitOk;
}

Syndrome read_syndrome_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open syndrome file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("syndrome file '" + path + "': " + e.what());
  }
  if (j.is_object() && j.contains("result")) j = j["result"];
  if (j.is_object() && j.contains("syndrome")) j = j["syndrome"];
  return syndrome_from_json(g, j);
}

int cmd_diagnose(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Graph g = load_graph(cfg);
  if (!cfg.t || !cfg.s) throw InputError("diagnose needs --t and --s");
  std::optional<FaultPair> truth;
  std::optional<Syndrome> sig;
  if (!cfg.syndrome_path.empty()) {
    if (has_fault_spec(cfg)) {
      throw InputError("give either --syndrome or a fault spec, not both");
    }
    sig = read_syndrome_file(g, cfg.syndrome_path);
  } else {
    truth = load_fault_pair(g, cfg);
    sig = generate_syndrome(g, *truth, load_adversary(cfg));
  }
  DiagnosisResult res = diagnose(g, *sig, *cfg.t, *cfg.s, cfg.cap);
  std::optional<bool> recovered;
  if (truth) {
    recovered = res.status == DiagnosisStatus::kUnique &&
                res.candidates.front() == *truth;
  }
  if (cfg.format == "json") {
    Json config{{"topology", topology_config(cfg)},
                {"bounds", {{"t", *cfg.t}, {"s", *cfg.s}}},
                {"candidate_cap", cfg.cap}};
    if (truth) {
      config["faults"] = fault_config(cfg);
      config["adversary"] = adversary_config(cfg);
    } else {
      config["syndrome"] = cfg.syndrome_path;
    }
    Json result = to_json(res);
    result["true_pair"] = truth ? to_json(*truth) : Json(nullptr);
    result["recovered"] = recovered ? Json(*recovered) : Json(nullptr);
    out << make_envelope("diagnose", config, result, Json::object()).dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "status,candidate_count,recovered,candidate\n";
    for (const FaultPair& c : res.candidates) {
      out << to_string(res.status) << "," << res.candidate_count << ","
          << (recovered ? (*recovered ? "true" : "false") : "") << ","
          << csv_quote(fault_pair_text(g, c)) << "\n";
    }
    if (res.candidates.empty()) {
      out << to_string(res.status) << ",0,"
          << (recovered ? (*recovered ? "true" : "false") : "") << ",\n";
    }
  } else {
    out << "status      " << to_string(res.status) << "\n"
        << "candidates  " << res.candidate_count
        << (res.truncated ? " (list truncated)" : "") << "\n";
    for (const FaultPair& c : res.candidates) {
      out << "  " << fault_pair_text(g, c) << "\n";
    }
    if (truth) {
      out << "true pair   " << fault_pair_text(g, *truth) << "\n"
          << "recovered   " << (*recovered ? "yes" : "no") << "\n";
    }
  }
  return kExitOk;
}

double millis(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

int cmd_diagnosability(const RunConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  Graph g = load_graph(cfg);
  SearchOptions opt = search_options(cfg);
  Json config{{"topology", topology_config(cfg)},
              {"strategy", cfg.strategy},
              {"audit_full_enumeration", cfg.audit}};
  Json result;
  SearchStats stats;
  std::chrono::nanoseconds elapsed{0};
  std::string value_text;
  std::optional<FaultPairPair> witness;

  if (cfg.edge_restricted || cfg.vertex_restricted) {
    if (cfg.edge_restricted && cfg.vertex_restricted) {
      throw InputError("choose --edge-restricted or --vertex-restricted");
    }
    DiagnosabilityReport rep;
    if (cfg.edge_restricted) {
      if (!cfg.h) throw InputError("--edge-restricted needs --h");
      config["parameter"] = "edge-restricted";
      config["h"] = *cfg.h;
      rep = edge_restricted_diagnosability(g, *cfg.h, opt);
    } else {
      if (!cfg.r) throw InputError("--vertex-restricted needs --r");
      config["parameter"] = "vertex-restricted";
      config["r"] = *cfg.r;
      rep = vertex_restricted_edge_diagnosability(g, *cfg.r, opt);
    }
    result = to_json(rep);
    stats = rep.stats;
    elapsed = rep.elapsed;
    value_text = rep.value ? std::to_string(*rep.value) : "none";
    witness = rep.witness;
    if (rep.outside_analyzed_range) {
      err << "note: level " << rep.level
          << " lies outside the range covered by the analytic bounds\n";
    }
  } else {
    if (!cfg.t || !cfg.s) {
      throw InputError("diagnosability needs --edge-restricted --h H, "
                       "--vertex-restricted --r R, or --t T --s S");
    }
    config["parameter"] = "plain";
    config["t"] = *cfg.t;
    config["s"] = *cfg.s;
    const auto start = std::chrono::steady_clock::now();
    TsQueryResult q = is_ts_diagnosable(g, *cfg.t, *cfg.s, opt);
    elapsed = std::chrono::steady_clock::now() - start;
    result = Json{{"graph", g.name()},
                  {"parameter", "plain"},
                  {"t", *cfg.t},
                  {"s", *cfg.s},
                  {"diagnosable", q.diagnosable}};
    result["witness"] =
        q.counterexample ? to_json(*q.counterexample) : Json(nullptr);
    stats = q.stats;
    value_text = q.diagnosable ? "diagnosable" : "not diagnosable";
    witness = q.counterexample;
  }

  Json stats_json = stats_to_json(stats);
  if (cfg.timing) stats_json["elapsed_ms"] = millis(elapsed);

  if (cfg.format == "json") {
    out << make_envelope("diagnosability", config, result, stats_json).dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "graph,parameter,level,value,witness_first,witness_second,"
           "candidates_examined,regions_examined,pruned\n"
        << csv_quote(g.name()) << "," << result["parameter"].get<std::string>()
        << ","
        << (result.contains("level") ? result["level"].dump()
                                     : std::to_string(*cfg.t) + "/" +
                                           std::to_string(*cfg.s))
        << "," << value_text << ","
        << (witness ? csv_quote(fault_pair_text(g, witness->first)) : "")
        << ","
        << (witness ? csv_quote(fault_pair_text(g, witness->second)) : "")
        << "," << stats.candidates_examined << "," << stats.regions_examined
        << "," << stats.pruned << "\n";
  } else {
    out << "graph       " << g.name() << "\n"
        << "parameter   " << result["parameter"].get<std::string>() << "\n"
        << "value       " << value_text << "\n";
    if (witness) {
      out << "witness     " << fault_pair_text(g, witness->first) << "\n"
          << "            " << fault_pair_text(g, witness->second) << "\n";
    }
    if (result.contains("lemma2_bounds") && !result["lemma2_bounds"].is_null()) {
      out << "bounds      t_h <= " << result["lemma2_bounds"]["t_h"]
          << ", s_1 <= " << result["lemma2_bounds"]["s_1"] << "\n";
    }
    out << "examined    " << stats.candidates_examined << " candidates, "
        << stats.regions_examined << " regions, " << stats.pruned
        << " pruned\n"
        << "elapsed     " << std::fixed << std::setprecision(1)
        << millis(elapsed) << " ms\n";
  }
  return kExitOk;
}

struct TheoremRow {
  std::string claim;
  std::size_t n = 0;
  std::string level;
  std::optional<std::size_t> computed;
  std::size_t predicted = 0;
  std::string strategy;
  std::optional<FaultPairPair> witness;

  bool match() const { return computed && *computed == predicted; }
};

int cmd_verify_theorems(const RunConfig& cfg, std::ostream& out,
                        std::ostream&) {
  if (cfg.n_min < 2 || cfg.n_min > cfg.n_max) {
    throw InputError("need 2 <= --n-min <= --n-max");
  }
  if (cfg.n_max > 5) throw InputError("--n-max is capped at 5");
  if (cfg.n_max == 5 && !cfg.audit) {
    throw InputError("n = 5 requires --audit-full-enumeration");
  }
  std::vector<TheoremRow> rows;
  SearchStats total;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    Graph q = build_hypercube(static_cast<int>(n));
    SearchOptions opt;
    opt.strategy = n <= 3 ? SearchStrategy::kExhaustive : SearchStrategy::kLocal;
    opt.audit_full_enumeration = cfg.audit;
    opt.use_symmetry = !cfg.audit;
    opt.jobs = cfg.jobs;
    const std::string strategy = n <= 3 ? "exhaustive" : "local";

    DiagnosabilityReport pmc = edge_restricted_diagnosability(q, 0, opt);
    total += pmc.stats;
    rows.push_back({"pmc-diagnosability", n, "h=0", pmc.value, n, strategy,
                    pmc.witness});
    for (std::size_t h = 1; h <= n; ++h) {
      DiagnosabilityReport rep = edge_restricted_diagnosability(q, h, opt);
      total += rep.stats;
      rows.push_back({"edge-restricted", n, "h=" + std::to_string(h),
                      rep.value, n - h, strategy, rep.witness});
    }
    DiagnosabilityReport s1 = vertex_restricted_edge_diagnosability(q, 1, opt);
    total += s1.stats;
    rows.push_back({"vertex-restricted", n, "r=1", s1.value, n - 2, strategy,
                    s1.witness});
  }
  const bool all_match =
      std::all_of(rows.begin(), rows.end(),
                  [](const TheoremRow& r) { return r.match(); });

  if (cfg.format == "json") {
    Json config{{"n_min", cfg.n_min},
                {"n_max", cfg.n_max},
                {"audit_full_enumeration", cfg.audit}};
    Json jrows = Json::array();
    for (const TheoremRow& r : rows) {
      jrows.push_back(Json{
          {"claim", r.claim},
          {"n", r.n},
          {"level", r.level},
          {"computed", r.computed ? Json(*r.computed) : Json(nullptr)},
          {"predicted", r.predicted},
          {"match", r.match()},
          {"strategy", r.strategy},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}});
    }
    Json result{{"rows", std::move(jrows)}, {"all_match", all_match}};
    out << make_envelope("verify-theorems", config, result,
                         stats_to_json(total))
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "claim,n,level,computed,predicted,match,strategy\n";
    for (const TheoremRow& r : rows) {
      out << r.claim << "," << r.n << "," << r.level << ","
          << (r.computed ? std::to_string(*r.computed) : "none") << ","
          << r.predicted << "," << (r.match() ? "true" : "false") << ","
          << r.strategy << "\n";
    }
  } else {
    out << std::left << std::setw(20) << "claim" << std::setw(4) << "n"
        << std::setw(7) << "level" << std::setw(10) << "computed"
        << std::setw(11) << "predicted" << "result\n";
    for (const TheoremRow& r : rows) {
      out << std::setw(20) << r.claim << std::setw(4) << r.n << std::setw(7)
          << r.level << std::setw(10)
          << (r.computed ? std::to_string(*r.computed) : "none")
          << std::setw(11) << r.predicted << (r.match() ? "ok" : "MISMATCH")
          << "\n";
    }
    out << (all_match ? "all claims reproduced\n"
                      : "some claims not reproduced\n");
  }
  return all_match ? kExitOk : kExitMismatch;
}

unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnvVar)) {
    try {
      unsigned long v = std::stoul(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_topology_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--topology", cfg.topology,
                  "path | cycle | complete | random | hypercube");
  sub->add_option("--n", cfg.n, "vertex count, or dimension for hypercube");
  sub->add_option("--p", cfg.p, "edge probability for random graphs");
  sub->add_option("--graph-seed", cfg.graph_seed, "seed for random graphs");
  sub->add_option("--edge-list", cfg.edge_list, "read the graph from a file");
  sub->add_option("args", cfg.positional, "KIND N and key=value bounds");
}

void add_fault_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--faulty-vertices", cfg.faulty_vertices, "e.g. 0,5");
  sub->add_option("--faulty-edges", cfg.faulty_edges, "e.g. 3-7,1-2");
  sub->add_option("--random-vertices", cfg.random_vertices,
                  "number of random faulty vertices (uses --seed)");
  sub->add_option("--random-edges", cfg.random_edges,
                  "number of random faulty edges (uses --seed)");
  sub->add_option("--adversary", cfg.adversary, "all-pass | all-fail | random")
      ->check(CLI::IsMember({"all-pass", "all-fail", "random"}));
  sub->add_option("--seed", cfg.seed, "seed for random faults and adversary");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--output", cfg.output, "write the report to PATH");
  sub->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::Range(1U, 1024U));
  sub->add_flag("--audit-full-enumeration", cfg.audit,
                "disable symmetry reductions");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  cfg.jobs = default_jobs();

  CLI::App app{"Hybrid node/link fault diagnosis under the generalized PMC "
               "model"};
  app.require_subcommand(1);

  auto* topo = app.add_subcommand("topology", "summarise or export a graph");
  add_topology_options(topo, cfg);
  add_output_options(topo, cfg);
  topo->add_option("--export-dot", cfg.export_dot, "write Graphviz DOT");
  topo->add_option("--export-edge-list", cfg.export_edge_list,
                   "write the edge-list format");

  auto* inject = app.add_subcommand("inject", "generate a syndrome");
  add_topology_options(inject, cfg);
  add_fault_options(inject, cfg);
  add_output_options(inject, cfg);

  auto* diag = app.add_subcommand("diagnose", "decode a syndrome");
  add_topology_options(diag, cfg);
  add_fault_options(diag, cfg);
  add_output_options(diag, cfg);
  diag->add_option("--t", cfg.t, "bound on faulty vertices");
  diag->add_option("--s", cfg.s, "bound on faulty edges");
  diag->add_option("--syndrome", cfg.syndrome_path,
                   "decode a syndrome file written by inject");
  diag->add_option("--cap", cfg.cap, "candidates listed when ambiguous");

  auto* dgb = app.add_subcommand("diagnosability",
                                 "restricted diagnosability by search");
  dgb->set_help_flag("--help", "print this help message and exit");
  add_topology_options(dgb, cfg);
  add_output_options(dgb, cfg);
  dgb->add_flag("--edge-restricted", cfg.edge_restricted, "compute t_h^e");
  dgb->add_flag("--vertex-restricted", cfg.vertex_restricted,
                "compute s_r^v");
  dgb->add_option("--h", cfg.h, "faulty-edge bound for --edge-restricted");
  dgb->add_option("--r", cfg.r, "faulty-vertex bound for --vertex-restricted");
  dgb->add_option("--t", cfg.t, "plain (t, s) query");
  dgb->add_option("--s", cfg.s, "plain (t, s) query");
  dgb->add_option("--strategy", cfg.strategy, "local | exhaustive")
      ->check(CLI::IsMember({"local", "exhaustive"}));
  dgb->add_flag("--timing", cfg.timing, "include elapsed time in JSON stats");

  auto* verify = app.add_subcommand(
      "verify-theorems", "recompute the hypercube diagnosability claims");
  add_output_options(verify, cfg);
  verify->add_option("--n-min", cfg.n_min, "smallest dimension (>= 2)");
  verify->add_option("--n-max", cfg.n_max,
                     "largest dimension (5 needs --audit-full-enumeration)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    apply_positionals(cfg);
    Sink sink;
    sink.stream = &out;
    if (!cfg.output.empty()) {
      sink.file.open(cfg.output);
      if (!sink.file) throw InputError("cannot write '" + cfg.output + "'");
      sink.stream = &sink.file;
    }
    std::ostream& report = *sink.stream;
    if (topo->parsed()) return cmd_topology(cfg, report, err);
    if (inject->parsed()) return cmd_inject(cfg, report, err);
    if (diag->parsed()) return cmd_diagnose(cfg, report, err);
    if (dgb->parsed()) return cmd_diagnosability(cfg, report, err);
    if (verify->parsed()) return cmd_verify_theorems(cfg, report, err);
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gpmc
