#include "gpmc/diagnosis.hpp"

#include <algorithm>
#include <random>

#include "gpmc/errors.hpp"

namespace gpmc {

const char* to_string(DiagnosisStatus s) {
  switch (s) {
    case DiagnosisStatus::kUnique: return "unique";
    case DiagnosisStatus::kAmbiguous: return "ambiguous";
    case DiagnosisStatus::kNoCandidate: return "no-candidate";
  }
  return "?";
}

DiagnosisResult diagnose(const Graph& g, const Syndrome& sig, std::size_t t,
                         std::size_t s, std::size_t candidate_cap) {
  if (sig.graph_fingerprint() != g.fingerprint() ||
      sig.size() != 2 * g.edge_count()) {
    throw InputError("syndrome does not cover the tests of this graph");
  }
  DiagnosisResult result;
  // Max-heap on canonical order keeps the smallest `cap` candidates.
  std::vector<FaultPair> kept;
  auto heap_less = [](const FaultPair& a, const FaultPair& b) { return a < b; };
  for_each_consistent_pair(
      g, sig, t, s,
      [&](const std::vector<VertexId>& F, const std::vector<Edge>& S) {
        ++result.candidate_count;
        if (candidate_cap == 0) return true;
        FaultPair fp = make_fault_pair(g, F, S);
        if (kept.size() < candidate_cap) {
          kept.push_back(std::move(fp));
          std::push_heap(kept.begin(), kept.end(), heap_less);
        } else if (fp < kept.front()) {
          std::pop_heap(kept.begin(), kept.end(), heap_less);
          kept.back() = std::move(fp);
          std::push_heap(kept.begin(), kept.end(), heap_less);
        }
        return true;
      });
  std::sort_heap(kept.begin(), kept.end(), heap_less);
  result.candidates = std::move(kept);
  result.truncated = result.candidate_count > result.candidates.size();
  if (result.candidate_count == 0) {
    result.status = DiagnosisStatus::kNoCandidate;
  } else if (result.candidate_count == 1) {
    result.status = DiagnosisStatus::kUnique;
  } else {
    result.status = DiagnosisStatus::kAmbiguous;
  }
  return result;
}

bool adversarial_roundtrip(const Graph& g, const FaultPair& fp, std::size_t t,
                           std::size_t s, const RoundtripOptions& options) {
  if (fp.faulty_vertices().size() > t || fp.faulty_edges().size() > s) {
    throw InputError("fault pair " + to_string(fp) + " exceeds bounds (" +
                     std::to_string(t) + ", " + std::to_string(s) + ")");
  }
  if (fp.graph_fingerprint() != g.fingerprint()) {
    throw InputError("fault pair belongs to a different graph");
  }
  std::vector<Test> arbitrary;
  for (const Test& test : enumerate_tests(g)) {
    if (fp.is_faulty(test.tester)) arbitrary.push_back(test);
  }
  auto decodes = [&](const std::vector<bool>& fail) {
    std::map<std::pair<VertexId, VertexId>, TestOutcome> assignment;
    for (std::size_t k = 0; k < arbitrary.size(); ++k) {
      assignment[{arbitrary[k].tester, arbitrary[k].testee}] =
          fail[k] ? TestOutcome::kFail : TestOutcome::kPass;
    }
    Syndrome sig = generate_syndrome(
        g, fp, Adversary::explicit_assignment(std::move(assignment)));
    DiagnosisResult r = diagnose(g, sig, t, s, 1);
    return r.status == DiagnosisStatus::kUnique && r.candidates.front() == fp;
  };
  std::vector<bool> fail(arbitrary.size());
  if (arbitrary.size() <= options.exhaustive_limit) {
    const std::uint64_t total = std::uint64_t{1} << arbitrary.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      for (std::size_t k = 0; k < fail.size(); ++k) fail[k] = (bits >> k) & 1U;
      if (!decodes(fail)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    for (std::size_t k = 0; k < fail.size(); ++k) fail[k] = rng() & 1U;
    if (!decodes(fail)) return false;
  }
  return true;
}

}  // namespace gpmc
