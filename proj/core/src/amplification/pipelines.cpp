#include "rarecase/amplification/pipelines.hpp"

#include <cmath>
#include <map>

#include "rarecase/counters/symmetric_cliques.hpp"
#include "rarecase/graphs/symmetry.hpp"

namespace rarecase {

namespace {

constexpr double kMaxThreshold = 0x1.0p40;

u64 ceil_to_u64(double x) {
  if (!(x < kMaxThreshold)) return static_cast<u64>(kMaxThreshold);
  return std::max<u64>(1, static_cast<u64>(std::ceil(x)));
}

void check_clique_truth(const CorruptOracle& o, const SimpleGraph& g, int k) {
  if (g.n() != o.n()) throw UsageError("input graph size does not match the oracle");
  const auto& h = o.truth();
  if (!h.clique_k || !h.finisher) throw UsageError(h.name + " is not a function of a clique count");
  if (*h.clique_k != k) {
    throw UsageError("k=" + std::to_string(k) + " does not match " + h.name);
  }
}

}  // namespace

void AmplificationConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) throw UsageError("epsilon must lie in (0, 1/2]");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
  if (!(alpha > 0.0 && std::isfinite(alpha))) throw UsageError("alpha must be positive");
  if (!(threshold_constant > 0.0 && std::isfinite(threshold_constant))) {
    throw UsageError("threshold constant must be positive");
  }
}

u64 AmplificationConfig::threshold(int n) const {
  validate();
  const double nn = static_cast<double>(n);
  return ceil_to_u64(threshold_constant * nn * nn / (epsilon * epsilon));
}

u64 AmplificationConfig::majority_queries() const {
  validate();
  return ceil_to_u64(2.0 * std::log(1.0 / delta) / (epsilon * epsilon));
}

u64 amplify_query(const CorruptOracle& o, const SimpleGraph& g, RandomStream& rng) {
  return o.query(permute(random_permutation(g.n(), rng), g));
}

u64 amplify_majority(const CorruptOracle& o, const SimpleGraph& g, const AmplificationConfig& cfg,
                     RandomStream& rng, u64* steps) {
  const u64 m = cfg.majority_queries();
  std::map<u64, u64> votes;
  for (u64 q = 0; q < m; ++q) ++votes[amplify_query(o, g, rng)];
  if (steps) *steps += m * (static_cast<u64>(g.n()) + g.bit_count()) + votes.size();
  u64 best = 0;
  u64 best_count = 0;
  for (const auto& [value, count] : votes) {
    if (count > best_count) {
      best = value;
      best_count = count;
    }
  }
  return best;
}

PipelineResult theorem1_pipeline(const CorruptOracle& o, const SimpleGraph& g, int k,
                                 const AmplificationConfig& cfg, RandomStream& rng) {
  cfg.validate();
  check_clique_truth(o, g, k);
  const auto& h = o.truth();
  const u64 t = cfg.threshold(g.n());
  PipelineResult r;
  r.steps += t * static_cast<u64>(g.n()) * (static_cast<u64>(g.n()) + g.bit_count());
  if (aut_size_test(g, t, rng) == Verdict::accept) {
    const u64 t_sym = ceil_to_u64(std::pow(static_cast<double>(t), 1.0 + cfg.alpha));
    try {
      const auto sym = sym_clique_count(g, t_sym, k, rng);
      r.value = h.finisher(sym.count);
      r.path = "symmetric";
      r.steps += sym.samples * (static_cast<u64>(g.n()) + g.bit_count());
      return r;
    } catch (const InternalAssertion&) {
      r.path = "amplifier-after-assertion";
    }
  } else {
    r.path = "amplifier";
  }
  r.value = amplify_majority(o, g, cfg, rng, &r.steps);
  r.oracle_queries = cfg.majority_queries();
  return r;
}

PipelineResult theorem2_pipeline(const CorruptOracle& o, const SimpleGraph& g, int k,
                                 const AmplificationConfig& cfg, RandomStream& rng, int floor) {
  cfg.validate();
  check_clique_truth(o, g, k);
  const auto cls = classify_highly_symmetric(g, k, floor);
  if (cls.below_floor) {
    auto r = theorem1_pipeline(o, g, k, cfg, rng);
    r.path = "theorem1:" + r.path;
    return r;
  }
  PipelineResult r;
  r.steps = cls.steps;
  if (cls.family != Family::none) {
    r.value = o.truth().finisher(*cls.count);
    r.path = "closed-form";
    return r;
  }
  r.value = amplify_majority(o, g, cfg, rng, &r.steps);
  r.path = "amplifier";
  r.oracle_queries = cfg.majority_queries();
  return r;
}

}  // namespace rarecase
