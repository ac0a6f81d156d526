#pragma once

#include <string>

#include "rarecase/oracle/corrupt_oracle.hpp"

namespace rarecase {

struct AmplificationConfig {
  double epsilon = 0.25;
  double delta = 0.01;
  double alpha = 0.1;
  double threshold_constant = 100.0;

  // Throws UsageError on non-finite or out-of-range fields.
  void validate() const;
  // ceil(threshold_constant * n^2 / epsilon^2)
  u64 threshold(int n) const;
  // ceil(2 ln(1/delta) / epsilon^2)
  u64 majority_queries() const;
};

struct PipelineResult {
  u64 value = 0;
  std::string path;
  u64 oracle_queries = 0;
  u64 steps = 0;  // elementary graph operations, oracle time excluded
};

// Queries the oracle on a uniformly relabeled copy of g.
u64 amplify_query(const CorruptOracle& o, const SimpleGraph& g, RandomStream& rng);
// Majority of cfg.majority_queries() amplified queries; ties go to the least value.
u64 amplify_majority(const CorruptOracle& o, const SimpleGraph& g, const AmplificationConfig& cfg,
                     RandomStream& rng, u64* steps = nullptr);

// Automorphism-size test, then either symmetric counting or the amplifier.
PipelineResult theorem1_pipeline(const CorruptOracle& o, const SimpleGraph& g, int k,
                                 const AmplificationConfig& cfg, RandomStream& rng);
// Closed forms for highly symmetric graphs, otherwise the amplifier. Falls
// back to theorem1_pipeline below the classification floor.
PipelineResult theorem2_pipeline(const CorruptOracle& o, const SimpleGraph& g, int k,
                                 const AmplificationConfig& cfg, RandomStream& rng, int floor = 8);

}  // namespace rarecase
