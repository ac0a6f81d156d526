#include "rarecase/oracle/ground_truth.hpp"

#include "rarecase/counters/brute_force.hpp"

namespace rarecase {

GroundTruthFunction kclique_parity(int k) {
  if (k < 1) throw UsageError("clique size must be positive");
  GroundTruthFunction h;
  h.name = "kclique-parity:" + std::to_string(k);
  h.eval = [k](const SimpleGraph& g) { return count_kcliques(g, k) & 1U; };
  h.isomorphism_invariant = true;
  h.codomain_size = [](int) { return u64{2}; };
  h.clique_k = k;
  h.finisher = [](u64 count) { return count & 1U; };
  return h;
}

GroundTruthFunction kclique_count(int k) {
  if (k < 1) throw UsageError("clique size must be positive");
  GroundTruthFunction h;
  h.name = "kclique-count:" + std::to_string(k);
  h.eval = [k](const SimpleGraph& g) { return count_kcliques(g, k); };
  h.isomorphism_invariant = true;
  h.codomain_size = [k](int n) { return binomial(static_cast<u64>(n), static_cast<u64>(k)) + 1; };
  h.clique_k = k;
  h.finisher = [](u64 count) { return count; };
  return h;
}

GroundTruthFunction ground_truth_by_name(const std::string& name) {
  if (name == "triangle-parity") return kclique_parity(3);
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    int k = 0;
    try {
      k = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad clique size in '" + name + "'");
    }
    if (head == "kclique-parity") return kclique_parity(k);
    if (head == "kclique-count") return kclique_count(k);
  }
  throw UsageError("unknown ground-truth function: " + name);
}

}  // namespace rarecase
