#pragma once

#include <string>

#include "json.hpp"

#include "gpmc/diagnosability.hpp"
#include "gpmc/diagnosis.hpp"
#include "gpmc/distinguishability.hpp"
#include "gpmc/fault_model.hpp"
#include "gpmc/graph.hpp"

namespace gpmc {

using Json = nlohmann::ordered_json;

// Bumped whenever a field below is renamed, removed or changes meaning.
inline constexpr const char* kReportVersion = "gpmc-report/1";

// {"F": [ids], "S": [[u, v], ...]}
Json to_json(const FaultPair& fp);
// Validates against g; throws InputError / ConsistencyError.
FaultPair fault_pair_from_json(const Graph& g, const Json& j);

// [[tester, testee, outcome], ...] with outcome 0 = pass, 1 = fail.
Json to_json(const Syndrome& sig);
Syndrome syndrome_from_json(const Graph& g, const Json& j);

// {"first": pair, "second": pair}
Json to_json(const FaultPairPair& w);
FaultPairPair witness_from_json(const Graph& g, const Json& j);

Json to_json(const Verdict& v);

// {"vertices", "edges", "min_degree", "max_degree", "girth"} (girth null
// for forests).
Json graph_summary(const Graph& g);

Json stats_to_json(const SearchStats& st);

// Result block of a diagnosability report; timing is left out so reports
// are reproducible byte for byte.
Json to_json(const DiagnosabilityReport& r);

Json to_json(const DiagnosisResult& r);

// {"command", "config", "result", "stats", "version"}
Json make_envelope(const std::string& command, Json config, Json result,
                   Json stats);

}  // namespace gpmc
