#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rarecase/graphs/graph_types.hpp"
#include "rarecase/oracle/ground_truth.hpp"

namespace rarecase {

enum class OracleMode { exact_table, keyed_prf };
enum class CorruptionStrategy { flip, random_wrong, zero, class_targeted };

std::string to_string(OracleMode m);
std::string to_string(CorruptionStrategy s);
OracleMode parse_oracle_mode(const std::string& s);
CorruptionStrategy parse_strategy(const std::string& s);

// Immutable sample of the corrupt-oracle experiment.
class CorruptOracle {
 public:
  u64 query(const SimpleGraph& g) const;
  bool in_correct_set(const SimpleGraph& g) const;
  // Exact-table mode only; index as in SimpleGraph::to_index.
  bool index_in_correct_set(u64 index) const;

  const GroundTruthFunction& truth() const noexcept { return h_; }
  int n() const noexcept { return n_; }
  double c() const noexcept { return c_; }
  OracleMode mode() const noexcept { return mode_; }
  CorruptionStrategy strategy() const noexcept { return strategy_; }
  u64 seed() const noexcept { return seed_; }
  u64 stream_id() const noexcept { return stream_id_; }
  // Size of the correct set in exact-table mode.
  u64 correct_count() const noexcept { return correct_count_; }

 private:
  friend CorruptOracle sample_corrupt_oracle(GroundTruthFunction, int, double, OracleMode, CorruptionStrategy,
                                             u64, u64);
  CorruptOracle() = default;

  u64 wrong_answer(const SimpleGraph& g, u64 truth) const;
  u64 graph_key(const SimpleGraph& g) const;

  GroundTruthFunction h_;
  int n_ = 0;
  double c_ = 1.0;
  OracleMode mode_ = OracleMode::exact_table;
  CorruptionStrategy strategy_ = CorruptionStrategy::random_wrong;
  u64 seed_ = 0;
  u64 stream_id_ = 0;
  u64 key_ = 0;
  u64 correct_count_ = 0;
  std::shared_ptr<const std::vector<u64>> table_;  // bit set of correct indices
};

// Exact-table needs C(n,2) <= 28; class_targeted additionally n <= 7 and exact-table.
// The correct set is a function of (seed, stream_id) only.
CorruptOracle sample_corrupt_oracle(GroundTruthFunction h, int n, double c, OracleMode mode,
                                    CorruptionStrategy strategy, u64 seed, u64 stream_id);

// Fraction of the isomorphism class of g answered correctly. n <= 8.
double per_class_correctness(const CorruptOracle& o, const SimpleGraph& g);

std::string oracle_snapshot_json(const CorruptOracle& o);
CorruptOracle oracle_from_snapshot(const std::string& json_text);

}  // namespace rarecase
