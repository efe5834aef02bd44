#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace circuitpack {

struct VerifyBounds {
  int max_vertices = 4;             // exhaustive digraphs
  int max_arcs = 12;
  int samples = 10000;              // random digraphs for T1.1
  int sample_vertices = 5;
  int sample_max_arcs = 12;
  int max_bipartite_vertices = 10;  // P5.2, C4.1, C5.11
  int max_brace_vertices = 12;      // T5.5-i-iv
  int random_instances = 200;       // T2.1, sums, decompose
  int max_planar_vertices = 8;      // T2.1
  int max_weight = 5;               // T2.1
  int pm_cap = 0;                   // perfect matchings per graph, 0: all
  std::uint64_t seed = 0;
  int threads = 1;
};

nlohmann::json bounds_to_json(const VerifyBounds& b);
// Missing keys keep their defaults; unknown keys throw PreconditionError.
VerifyBounds bounds_from_json(const nlohmann::json& j,
                              const VerifyBounds& base = {});

struct VerificationReport {
  std::string theorem;
  nlohmann::json bounds;
  std::int64_t instances = 0;
  std::vector<nlohmann::json> failures;  // {"instance": ..., "detail": ...}
  std::int64_t skipped = 0;              // instances that ran out of budget
  bool incomplete = false;
  double wall_ms = 0;
};

// Ids: T1.1, T2.1, T2.2, P5.2, T5.5-i-iv, C4.1, C5.11, sums, decompose.
std::vector<std::string> theorem_ids();

// Enumerates the instances for the id, checks each, and collects failures
// sorted by their serialization. Throws PreconditionError on unknown ids.
VerificationReport verify_theorem(const std::string& id,
                                  const VerifyBounds& bounds = {});

// Re-runs the check on a listed failure; true when it still fails.
bool replay_failure(const std::string& id, const nlohmann::json& failure);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace circuitpack
