#pragma once

#include <cstdint>
#include <vector>

#include "gpmc/fault_model.hpp"
#include "gpmc/graph.hpp"

namespace gpmc {

enum class DiagnosisStatus { kUnique, kAmbiguous, kNoCandidate };

const char* to_string(DiagnosisStatus s);

inline constexpr std::size_t kDefaultCandidateCap = 64;

struct DiagnosisResult {
  DiagnosisStatus status = DiagnosisStatus::kNoCandidate;
  std::uint64_t candidate_count = 0;  // always exact
  // The first min(count, cap) candidates in canonical order.
  std::vector<FaultPair> candidates;
  bool truncated = false;
};

// All fault pairs within (t, s) consistent with sig. Unique means the
// syndrome pins down the fault pair; ambiguity is reported, never resolved.
DiagnosisResult diagnose(const Graph& g, const Syndrome& sig, std::size_t t,
                         std::size_t s,
                         std::size_t candidate_cap = kDefaultCandidateCap);

struct RoundtripOptions {
  // Exhaustive over Arbitrary tests up to this many, sampled above it.
  std::size_t exhaustive_limit = 16;
  std::size_t samples = 256;
  std::uint64_t seed = 0x5eed;
};

// Replays fp under adversary assignments of its Arbitrary tests and checks
// that each syndrome decodes to exactly fp. Meaningful when g is (t, s)-
// diagnosable. Throws InputError when fp exceeds the bounds.
bool adversarial_roundtrip(const Graph& g, const FaultPair& fp, std::size_t t,
                           std::size_t s, const RoundtripOptions& options = {});

}  // namespace gpmc
