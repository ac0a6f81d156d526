#pragma once

#include <functional>
#include <optional>
#include <string>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

struct GroundTruthFunction {
  std::string name;
  std::function<u64(const SimpleGraph&)> eval;
  bool isomorphism_invariant = false;
  // Number of possible values on n-vertex graphs; values lie in [0, size).
  std::function<u64(int)> codomain_size;
  // Set when the value is a function of the k-clique count.
  std::optional<int> clique_k;
  std::function<u64(u64)> finisher;
};

GroundTruthFunction kclique_parity(int k);
GroundTruthFunction kclique_count(int k);
// "kclique-parity:k", "kclique-count:k", "triangle-parity".
GroundTruthFunction ground_truth_by_name(const std::string& name);

}  // namespace rarecase
