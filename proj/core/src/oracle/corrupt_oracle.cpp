#include "rarecase/oracle/corrupt_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numeric>

#include "rarecase/graphs/graph_universe.hpp"
#include "rarecase/graphs/symmetry.hpp"

namespace rarecase {

namespace {

constexpr std::size_t kMaxTableBits = 28;

bool table_bit(const std::vector<u64>& t, u64 i) { return (t[i >> 6] >> (i & 63)) & 1U; }
void set_table_bit(std::vector<u64>& t, u64 i, bool on) {
  if (on) {
    t[i >> 6] |= u64{1} << (i & 63);
  } else {
    t[i >> 6] &= ~(u64{1} << (i & 63));
  }
}

// Selection sampling: marks exactly `want` of the indices where eligible(i) holds.
template <typename Eligible, typename Mark>
void select_exact(u64 universe, u64 eligible_count, u64 want, RandomStream& rng, Eligible eligible, Mark mark) {
  u64 remaining = eligible_count;
  for (u64 i = 0; i < universe && want > 0; ++i) {
    if (!eligible(i)) continue;
    if (rng.uniform_below(remaining) < want) {
      mark(i);
      --want;
    }
    --remaining;
  }
}

}  // namespace

std::string to_string(OracleMode m) { return m == OracleMode::exact_table ? "exact-table" : "keyed-prf"; }

std::string to_string(CorruptionStrategy s) {
  switch (s) {
    case CorruptionStrategy::flip: return "flip";
    case CorruptionStrategy::random_wrong: return "random-wrong";
    case CorruptionStrategy::zero: return "zero";
    case CorruptionStrategy::class_targeted: return "class-targeted";
  }
  return "random-wrong";
}

OracleMode parse_oracle_mode(const std::string& s) {
  if (s == "exact-table") return OracleMode::exact_table;
  if (s == "keyed-prf") return OracleMode::keyed_prf;
  throw UsageError("unknown oracle mode: " + s);
}

CorruptionStrategy parse_strategy(const std::string& s) {
  if (s == "flip") return CorruptionStrategy::flip;
  if (s == "random-wrong") return CorruptionStrategy::random_wrong;
  if (s == "zero") return CorruptionStrategy::zero;
  if (s == "class-targeted") return CorruptionStrategy::class_targeted;
  throw UsageError("unknown corruption strategy: " + s);
}

u64 CorruptOracle::graph_key(const SimpleGraph& g) const {
  if (g.bit_count() <= 63) return g.to_index();
  return static_cast<u64>(SimpleGraphHash{}(g));
}

bool CorruptOracle::in_correct_set(const SimpleGraph& g) const {
  if (g.n() != n_) throw UsageError("oracle on " + std::to_string(n_) + " vertices queried with " + std::to_string(g.n()));
  if (mode_ == OracleMode::exact_table) return table_bit(*table_, g.to_index());
  const double u = static_cast<double>(keyed_hash(key_, graph_key(g), 0xc0) >> 11) * 0x1.0p-53;
  return u < c_;
}

bool CorruptOracle::index_in_correct_set(u64 index) const {
  if (mode_ != OracleMode::exact_table) throw UsageError("index lookup needs an exact-table oracle");
  if (index >> pair_count(n_) != 0) throw UsageError("graph index out of range");
  return table_bit(*table_, index);
}

u64 CorruptOracle::wrong_answer(const SimpleGraph& g, u64 truth) const {
  switch (strategy_) {
    case CorruptionStrategy::flip:
      return truth ^ 1U;
    case CorruptionStrategy::zero:
      return 0;
    case CorruptionStrategy::random_wrong:
    case CorruptionStrategy::class_targeted: {
      const u64 m = h_.codomain_size(n_);
      if (m < 2) return truth;
      return (truth + 1 + keyed_hash(key_, graph_key(g), 0xa7) % (m - 1)) % m;
    }
  }
  return truth;
}

u64 CorruptOracle::query(const SimpleGraph& g) const {
  const u64 truth = h_.eval(g);
  return in_correct_set(g) ? truth : wrong_answer(g, truth);
}

CorruptOracle sample_corrupt_oracle(GroundTruthFunction h, int n, double c, OracleMode mode,
                                    CorruptionStrategy strategy, u64 seed, u64 stream_id) {
  if (!(c > 0.0 && c <= 1.0)) throw UsageError("correctness fraction must lie in (0, 1]");
  if (n < 1) throw UsageError("oracle needs n >= 1");
  if (!h.eval) throw UsageError("ground-truth function has no evaluator");
  if (strategy == CorruptionStrategy::flip && h.codomain_size(n) != 2) {
    throw UsageError("flip strategy needs a boolean ground truth, got " + h.name);
  }
  if (strategy == CorruptionStrategy::class_targeted) {
    if (mode != OracleMode::exact_table) throw UsageError("class-targeted corruption needs exact-table mode");
    if (n > GraphUniverse::kMaxN) throw CapabilityError("class-targeted corruption is limited to n <= 7");
  }
  CorruptOracle o;
  o.h_ = std::move(h);
  o.n_ = n;
  o.c_ = c;
  o.mode_ = mode;
  o.strategy_ = strategy;
  o.seed_ = seed;
  o.stream_id_ = stream_id;
  RandomStream rng(seed, stream_id);
  o.key_ = rng.next_u64();
  if (mode == OracleMode::keyed_prf) return o;

  const std::size_t bits = pair_count(n);
  if (bits > kMaxTableBits) throw CapabilityError("exact-table mode needs C(n,2) <= 28");
  const u64 total = u64{1} << bits;
  const u64 correct = static_cast<u64>(std::llround(c * static_cast<double>(total)));
  auto table = std::make_shared<std::vector<u64>>((total + 63) / 64, 0);
  o.correct_count_ = correct;

  if (strategy != CorruptionStrategy::class_targeted) {
    select_exact(
        total, total, correct, rng, [](u64) { return true; }, [&](u64 i) { set_table_bit(*table, i, true); });
  } else {
    // Corrupt whole classes smallest first, then a uniform leftover set.
    const auto& uni = shared_universe(n);
    std::vector<std::uint32_t> order(uni.class_count());
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return uni.class_size(a) < uni.class_size(b); });
    u64 budget = total - correct;
    std::vector<char> doomed(uni.class_count(), 0);
    for (auto id : order) {
      if (uni.class_size(id) > budget) break;
      doomed[id] = 1;
      budget -= uni.class_size(id);
    }
    u64 open = 0;
    for (u64 i = 0; i < total; ++i) {
      if (!doomed[uni.class_of(i)]) {
        set_table_bit(*table, i, true);
        ++open;
      }
    }
    select_exact(
        total, open, budget, rng, [&](u64 i) { return table_bit(*table, i); },
        [&](u64 i) { set_table_bit(*table, i, false); });
  }
  o.table_ = std::move(table);
  return o;
}

double per_class_correctness(const CorruptOracle& o, const SimpleGraph& g) {
  const auto cls = isomorphism_class(g);
  std::size_t right = 0;
  for (const auto& u : cls) right += o.query(u) == o.truth().eval(u) ? 1 : 0;
  return static_cast<double>(right) / static_cast<double>(cls.size());
}

std::string oracle_snapshot_json(const CorruptOracle& o) {
  nlohmann::json j;
  j["mode"] = to_string(o.mode());
  j["strategy"] = to_string(o.strategy());
  j["c"] = o.c();
  j["n"] = o.n();
  j["seed"] = o.seed();
  j["stream_id"] = o.stream_id();
  j["H"] = o.truth().name;
  return j.dump();
}

CorruptOracle oracle_from_snapshot(const std::string& json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    return sample_corrupt_oracle(ground_truth_by_name(j.at("H").get<std::string>()), j.at("n").get<int>(),
                                 j.at("c").get<double>(), parse_oracle_mode(j.at("mode").get<std::string>()),
                                 parse_strategy(j.at("strategy").get<std::string>()), j.at("seed").get<u64>(),
                                 j.at("stream_id").get<u64>());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid oracle snapshot: ") + e.what());
  }
}

}  // namespace rarecase
