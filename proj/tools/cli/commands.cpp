#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>

#include "rarecase/amplification/class_survey.hpp"
#include "rarecase/amplification/pipelines.hpp"
#include "rarecase/amplification/reductions.hpp"
#include "rarecase/amplification/zero_baseline.hpp"
#include "rarecase/counters/brute_force.hpp"
#include "rarecase/counters/clique_fast.hpp"
#include "rarecase/counters/symmetric_cliques.hpp"
#include "rarecase/graphs/graph_io.hpp"
#include "rarecase/graphs/symmetry.hpp"
#include "rarecase/identity/hcl_tests.hpp"
#include "rarecase/identity/hcy_tests.hpp"
#include "rarecase/oracle/catalog.hpp"

namespace rarecase::cli {

namespace {

using Clock = std::chrono::steady_clock;

const u64 kMersenne31 = 2147483647;

u64 elapsed_ms(Clock::time_point start) {
  return static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

Row head(const char* command) {
  Row r;
  r["command"] = command;
  return r;
}

PrimeModulus file_modulus(const AnyGraph& g, const CommonOptions& c) {
  auto check = [&](const PrimeModulus& p) {
    if ((c.p || c.p_bits) && resolve_modulus(c, 2) != p) throw UsageError("modulus conflicts with the graph file");
    return p;
  };
  if (const auto* d = std::get_if<DirectedMultigraph>(&g)) return check(d->modulus());
  if (const auto* u = std::get_if<UndirectedMultigraph>(&g)) return check(u->modulus());
  return resolve_modulus(c, kMersenne31);
}

UndirectedMultigraph as_undirected(const AnyGraph& g, const PrimeModulus& p) {
  if (const auto* s = std::get_if<SimpleGraph>(&g)) return UndirectedMultigraph::unit(*s, p);
  if (const auto* u = std::get_if<UndirectedMultigraph>(&g)) return *u;
  throw UsageError("this count needs an undirected graph");
}

DirectedMultigraph as_directed(const AnyGraph& g, const PrimeModulus& p) {
  if (const auto* d = std::get_if<DirectedMultigraph>(&g)) return *d;
  if (const auto* s = std::get_if<SimpleGraph>(&g)) {
    DirectedMultigraph e(s->n(), p);
    for (int i = 0; i < s->n(); ++i) {
      for (int j = 0; j < s->n(); ++j) {
        if (i != j && s->has_edge(i, j)) e.set(i, j, 1);
      }
    }
    return e;
  }
  throw UsageError("this count needs a directed graph");
}

const SimpleGraph& as_simple(const AnyGraph& g, const char* what) {
  if (const auto* s = std::get_if<SimpleGraph>(&g)) return *s;
  throw UsageError(std::string(what) + " needs a simple graph file");
}

SimpleDigraph as_digraph(const AnyGraph& g) {
  if (const auto* d = std::get_if<DirectedMultigraph>(&g)) {
    SimpleDigraph out(d->n());
    for (int i = 0; i < d->n(); ++i) {
      for (int j = 0; j < d->n(); ++j) {
        if (i != j) out.set_arc(i, j, d->at(i, j) != 0);
      }
    }
    return out;
  }
  const auto& s = as_simple(g, "hamcycle reduction");
  SimpleDigraph out(s.n());
  for (int i = 0; i < s.n(); ++i) {
    for (int j = 0; j < s.n(); ++j) {
      if (i != j) out.set_arc(i, j, s.has_edge(i, j));
    }
  }
  return out;
}

int required_k(const std::optional<int>& k, const char* what) {
  if (!k) throw UsageError(std::string(what) + " needs --k");
  return *k;
}

}  // namespace

void run_count(const CommonOptions& c, const CountOptions& o, ReportWriter& w) {
  const auto g = read_graph_file(o.graph);
  const auto p = file_modulus(g, c);
  RandomStream rng(c.seed, 0);
  Row row = head("count");
  row["quantity"] = o.quantity;
  row["alg"] = o.alg;
  if (o.alg != "brute" && o.alg != "fast" && o.alg != "sym") throw UsageError("unknown --alg: " + o.alg);
  u64 value = 0;
  if (o.quantity == "kclique") {
    const int k = required_k(o.k, "kclique count");
    if (o.alg == "sym") {
      const auto& s = as_simple(g, "the symmetric counter");
      u64 t = 0;
      if (o.t) {
        t = *o.t;
      } else if (s.n() <= 20) {
        t = factorial(static_cast<u64>(s.n()));
      } else {
        throw UsageError("--t is required above 20 vertices");
      }
      const auto r = sym_clique_count(s, t, k, rng);
      value = r.count;
      row["n"] = s.n();
      row["k"] = k;
      row["t"] = t;
      row["collected"] = r.collected;
      row["samples"] = r.samples;
    } else {
      const auto f = as_undirected(g, p);
      value = (o.alg == "brute" ? kclique_bruteforce(f, k) : kclique_fast(f, k)).value();
      row["n"] = f.n();
      row["k"] = k;
      row["p"] = p.value();
    }
  } else if (o.quantity == "hcy" || o.quantity == "permanent") {
    if (o.alg == "sym") throw UsageError("--alg sym only counts cliques");
    const auto e = as_directed(g, p);
    const bool hcy = o.quantity == "hcy";
    if (o.alg == "brute") {
      value = (hcy ? hcy_bruteforce(e) : permanent_bruteforce(e)).value();
    } else {
      value = (hcy ? exact_hcy_machine(e.n(), p) : exact_permanent_machine(e.n(), p))(e).value();
    }
    row["n"] = e.n();
    row["p"] = p.value();
  } else if (o.quantity == "hcl") {
    if (o.alg == "sym") throw UsageError("--alg sym only counts cliques");
    const auto f = as_undirected(g, p);
    value = (o.alg == "brute" ? hcl_bruteforce(f) : kclique_fast(f, f.n() / 2)).value();
    row["n"] = f.n();
    row["p"] = p.value();
  } else {
    throw UsageError("unknown --quantity: " + o.quantity);
  }
  row["count"] = value;
  row["seed"] = c.seed;
  row["stream_id"] = 0;
  w.write(row);
}

void run_identify(const CommonOptions& c, const IdentifyOptions& o, ReportWriter& w) {
  const auto start = Clock::now();
  const auto p = resolve_modulus(c, prime_from_bits(20).value());
  const auto m = machine_catalog(o.machine, o.n, p);
  const bool hcy = m.domain_kind() == DomainKind::directed;
  const char* pipeline = hcy ? "is_hcy" : "is_hcl";
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  u64 accepted = 0;
  u64 queries = 0;
  for (u64 t = 0; t < o.trials; ++t) {
    const u64 stream = c.first_stream + t;
    RandomStream rng(c.seed, stream);
    IdentityOptions io;
    io.nocycle_k_min = o.k_min;
    io.record_transcript = !o.transcript.empty() && t == 0;
    const auto v = hcy ? is_hcy_pipeline(m, o.repetitions, rng, io) : is_hcl_pipeline(m, o.repetitions, rng, io);
    if (v.transcript) {
      std::ofstream f(o.transcript);
      if (!f) throw UsageError("cannot write transcript file " + o.transcript);
      write_transcript_jsonl(f, *v.transcript);
    }
    accepted += v.accepted() ? 1 : 0;
    queries += v.queries;
    Row row = head("identify");
    row["pipeline"] = pipeline;
    row["machine"] = o.machine;
    row["n"] = o.n;
    row["p"] = p.value();
    row["trial"] = t;
    row["verdict"] = to_string(v.verdict);
    row["rounds_run"] = v.rounds_run;
    row["queries"] = v.queries;
    row["failing_round"] = v.first_failure ? Row(v.first_failure->round) : Row(nullptr);
    row["seed"] = c.seed;
    row["stream_id"] = stream;
    w.write(row);
  }
  Row s = head("identify");
  s["summary"] = true;
  s["pipeline"] = pipeline;
  s["machine"] = o.machine;
  s["n"] = o.n;
  s["p"] = p.value();
  s["repetitions"] = o.repetitions;
  s["trials"] = o.trials;
  s["accepted"] = accepted;
  s["rejected"] = o.trials - accepted;
  s["wall_ms"] = elapsed_ms(start);
  s["oracle_queries"] = queries;
  s["seed"] = c.seed;
  w.write(s);
}

void run_reduce(const CommonOptions& c, const ReduceOptions& o, ReportWriter& w) {
  const auto g = read_graph_file(o.graph);
  RandomStream rng(c.seed, 0);
  Row row = head("reduce");
  row["reduction"] = o.reduction;
  AnyGraph out;
  if (o.reduction == "hamcycle") {
    const auto d = as_digraph(g);
    const auto p = resolve_modulus(c, prime_from_bits(20).value());
    auto e = reduce_hamcycle_to_counting(d, p, rng);
    row["n"] = d.n();
    row["p"] = p.value();
    if (o.evaluate) {
      const u64 v = exact_hcy_machine(e.n(), p)(e).value();
      row["value"] = v;
      row["decision"] = v != 0;
    }
    out = std::move(e);
  } else if (o.reduction == "half") {
    const auto& u = as_simple(g, "half reduction");
    const auto p = resolve_modulus(c, prime_from_bits(20).value());
    auto f = reduce_half_to_counting(u, p, rng);
    row["n"] = u.n();
    row["p"] = p.value();
    if (o.evaluate) {
      const u64 v = kclique_fast(f, f.n() / 2).value();
      row["value"] = v;
      row["decision"] = v != 0;
    }
    out = std::move(f);
  } else if (o.reduction == "clique") {
    const auto& u = as_simple(g, "clique reduction");
    const int k = required_k(o.k, "clique reduction");
    auto v = reduce_clique_to_half(u, k);
    row["n"] = u.n();
    row["k"] = k;
    row["n_out"] = v.n();
    if (o.evaluate) row["decision"] = count_kcliques(v, v.n() / 2) > 0;
    out = std::move(v);
  } else {
    throw UsageError("unknown --reduction: " + o.reduction);
  }
  if (!o.out.empty()) write_graph_file(o.out, out);
  row["graph"] = Row::parse(to_graph_json(out));
  row["seed"] = c.seed;
  row["stream_id"] = 0;
  w.write(row);
}

void run_amplify(const CommonOptions& c, const AmplifyOptions& o, ReportWriter& w) {
  const auto start = Clock::now();
  if (o.pipeline != "theorem1" && o.pipeline != "theorem2") throw UsageError("unknown --pipeline: " + o.pipeline);
  if (o.truth != "parity" && o.truth != "count") throw UsageError("--truth must be parity or count");
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  auto h = o.truth == "parity" ? kclique_parity(o.k) : kclique_count(o.k);
  OracleMode mode = OracleMode::keyed_prf;
  if (o.mode == "auto") {
    mode = pair_count(o.n) <= 28 ? OracleMode::exact_table : OracleMode::keyed_prf;
  } else {
    mode = parse_oracle_mode(o.mode);
  }
  const auto strategy = parse_strategy(o.strategy);
  AmplificationConfig cfg;
  cfg.epsilon = o.epsilon;
  cfg.delta = o.delta;
  cfg.alpha = o.alpha;
  cfg.threshold_constant = o.threshold_constant;
  cfg.validate();
  std::optional<SimpleGraph> fixed;
  if (!o.graph.empty()) {
    fixed = as_simple(read_graph_file(o.graph), "amplify");
    if (fixed->n() != o.n) throw UsageError("input graph size differs from --n");
  }
  const auto oracle = sample_corrupt_oracle(h, o.n, o.c, mode, strategy, c.seed, 0);
  u64 correct = 0;
  u64 queries = 0;
  for (u64 t = 0; t < o.trials; ++t) {
    const u64 stream = c.first_stream + t;
    RandomStream rng(c.seed, stream);
    const SimpleGraph g = fixed ? *fixed : random_graph(o.n, rng);
    const auto r = o.pipeline == "theorem1" ? theorem1_pipeline(oracle, g, o.k, cfg, rng)
                                            : theorem2_pipeline(oracle, g, o.k, cfg, rng, o.floor);
    const u64 truth = h.eval(g);
    correct += r.value == truth ? 1 : 0;
    queries += r.oracle_queries;
    Row row = head("amplify");
    row["pipeline"] = o.pipeline;
    row["n"] = o.n;
    row["trial"] = t;
    row["value"] = r.value;
    row["truth"] = truth;
    row["correct"] = r.value == truth;
    row["path"] = r.path;
    row["oracle_queries"] = r.oracle_queries;
    row["steps"] = r.steps;
    row["seed"] = c.seed;
    row["stream_id"] = stream;
    w.write(row);
  }
  Row s = head("amplify");
  s["summary"] = true;
  s["pipeline"] = o.pipeline;
  s["n"] = o.n;
  s["k"] = o.k;
  s["epsilon"] = o.epsilon;
  s["c"] = o.c;
  s["strategy"] = o.strategy;
  s["mode"] = to_string(mode);
  s["trials"] = o.trials;
  s["correct"] = correct;
  s["wall_ms"] = elapsed_ms(start);
  s["oracle_queries"] = queries;
  s["seed"] = c.seed;
  w.write(s);
}

namespace {

std::vector<std::string> default_impostors(const std::string& family) {
  if (family == "hcy") return {"permanent", "conj_class", "single_cover_monomial", "row_monomial", "scaled_hcy"};
  if (family == "hcl") return {"scaled_hcl", "edge_sum", "square_variable"};
  throw UsageError("--family must be hcy or hcl");
}

void soundness(const CommonOptions& c, const ExperimentOptions& o, ReportWriter& w) {
  const auto p = resolve_modulus(c, prime_from_bits(20).value());
  const bool defaults = o.machines.empty();
  const auto ids = defaults ? default_impostors(o.family) : o.machines;
  for (const auto& id : ids) {
    Row row = head("experiment");
    row["kind"] = "soundness";
    row["machine"] = id;
    row["n"] = o.n;
    row["p"] = p.value();
    row["repetitions"] = o.repetitions;
    row["trials"] = o.trials;
    try {
      const auto m = machine_catalog(id, o.n, p);
      const bool hcy = m.domain_kind() == DomainKind::directed;
      u64 rejected = 0;
      u64 queries = 0;
      for (u64 t = 0; t < o.trials; ++t) {
        RandomStream rng(c.seed, c.first_stream + t);
        const auto v = hcy ? is_hcy_pipeline(m, o.repetitions, rng) : is_hcl_pipeline(m, o.repetitions, rng);
        rejected += v.accepted() ? 0 : 1;
        queries += v.queries;
      }
      row["rejected"] = rejected;
      row["rejection_rate"] = static_cast<double>(rejected) / static_cast<double>(o.trials);
      row["oracle_queries"] = queries;
    } catch (const UsageError& e) {
      if (!defaults) throw;
      row["skipped"] = e.what();
    }
    row["seed"] = c.seed;
    row["stream_id"] = c.first_stream;
    w.write(row);
  }
}

void large_class(const CommonOptions& c, const ExperimentOptions& o, ReportWriter& w) {
  const auto start = Clock::now();
  const double threshold = large_class_threshold(o.n, o.epsilon, o.oracles);
  const double floor = 0.5 + o.epsilon / 2;
  const auto strategy = parse_strategy(o.strategy);
  u64 bad_oracles = 0;
  u64 bad_classes = 0;
  for (u64 i = 0; i < o.oracles; ++i) {
    const u64 stream = c.first_stream + i;
    const auto oracle = sample_corrupt_oracle(kclique_parity(3), o.n, o.c, OracleMode::exact_table, strategy, c.seed, stream);
    const auto s = survey_large_classes(oracle, threshold, floor);
    bad_oracles += s.classes_below > 0 ? 1 : 0;
    bad_classes += s.classes_below;
    Row row = head("experiment");
    row["kind"] = "large-class";
    row["oracle"] = i;
    row["n"] = o.n;
    row["c"] = o.c;
    row["epsilon"] = o.epsilon;
    row["threshold"] = threshold;
    row["classes_checked"] = s.classes_checked;
    row["classes_below"] = s.classes_below;
    row["min_correctness"] = s.min_correctness;
    row["seed"] = c.seed;
    row["stream_id"] = stream;
    w.write(row);
  }
  Row s = head("experiment");
  s["kind"] = "large-class";
  s["summary"] = true;
  s["n"] = o.n;
  s["c"] = o.c;
  s["epsilon"] = o.epsilon;
  s["strategy"] = o.strategy;
  s["oracles"] = o.oracles;
  s["oracles_with_low_class"] = bad_oracles;
  s["low_classes"] = bad_classes;
  s["wall_ms"] = elapsed_ms(start);
  s["seed"] = c.seed;
  w.write(s);
}

void rigidity(const CommonOptions& c, const ExperimentOptions& o, ReportWriter& w) {
  RandomStream rng(c.seed, c.first_stream);
  Row row = head("experiment");
  row["kind"] = "rigidity";
  row["n"] = o.n;
  row["samples"] = o.samples;
  row["rigid_fraction"] = empirical_rigidity(o.n, o.samples, rng);
  row["seed"] = c.seed;
  row["stream_id"] = c.first_stream;
  w.write(row);
}

void zero_fraction(const CommonOptions& c, const ExperimentOptions& o, ReportWriter& w) {
  const auto p = resolve_modulus(c, 1009);
  const auto id = o.machine.empty() ? std::string("hcy") : o.machine;
  const auto m = machine_catalog(id, o.n, p);
  RandomStream rng(c.seed, c.first_stream);
  const auto z = measure_zero_fraction(m, o.samples, rng);
  const double expected = 1.0 / static_cast<double>(p.value());
  const double se = std::sqrt(expected * (1 - expected) / static_cast<double>(o.samples));
  Row row = head("experiment");
  row["kind"] = "zero-fraction";
  row["machine"] = id;
  row["n"] = o.n;
  row["p"] = p.value();
  row["samples"] = o.samples;
  row["zeros"] = z.zeros;
  row["fraction"] = z.fraction;
  row["standard_error"] = z.standard_error;
  row["expected"] = expected;
  row["z_score"] = (z.fraction - expected) / se;
  row["seed"] = c.seed;
  row["stream_id"] = c.first_stream;
  w.write(row);
}

}  // namespace

void run_experiment(const CommonOptions& c, const ExperimentOptions& o, ReportWriter& w) {
  if (o.kind == "soundness") return soundness(c, o, w);
  if (o.kind == "large-class") return large_class(c, o, w);
  if (o.kind == "rigidity") return rigidity(c, o, w);
  if (o.kind == "zero-fraction") return zero_fraction(c, o, w);
  throw UsageError("unknown --kind: " + o.kind);
}

int run_selftest(const CommonOptions& c, const SelftestOptions& o, ReportWriter& w) {
  const PrimeModulus p31(kMersenne31);
  const PrimeModulus p20 = prime_from_bits(20);
  const int trials = o.quick ? 5 : 50;
  struct Check {
    const char* name;
    std::function<bool(RandomStream&)> run;
  };
  const std::vector<Check> checks = {
      {"clique-fast-matches-brute",
       [&](RandomStream& rng) {
         for (int n = 3; n <= 9; ++n) {
           for (int k = 3; k <= 6; ++k) {
             auto f = UndirectedMultigraph::random(n, p31, rng);
             if (kclique_fast(f, k) != kclique_bruteforce(f, k)) return false;
           }
         }
         return true;
       }},
      {"hcy-unit-complete-closed-form",
       [&](RandomStream&) {
         for (int n = 3; n <= 8; ++n) {
           const u64 want = factorial(static_cast<u64>(n - 1)) % p31.value();
           if (hcy_bruteforce(DirectedMultigraph::unit_complete(n, p31)).value() != want) return false;
         }
         return true;
       }},
      {"hcl-unit-complete-closed-form",
       [&](RandomStream&) {
         for (int n = 4; n <= 12; ++n) {
           const u64 want = binomial(static_cast<u64>(n), static_cast<u64>(n / 2)) % p31.value();
           if (hcl_bruteforce(UndirectedMultigraph::unit_complete(n, p31)).value() != want) return false;
         }
         return true;
       }},
      {"orbit-stabilizer",
       [&](RandomStream&) {
         for (u64 idx = 0; idx < 64; ++idx) {
           const auto g = SimpleGraph::from_index(4, idx);
           if (automorphism_order(g) * isomorphism_class(g).size() != 24) return false;
         }
         return true;
       }},
      {"clique-to-half-equivalence",
       [&](RandomStream&) {
         for (int n = 1; n <= 5; ++n) {
           for (u64 idx = 0; idx < (u64{1} << pair_count(n)); ++idx) {
             const auto u = SimpleGraph::from_index(n, idx);
             for (int k = 1; k <= n; ++k) {
               const auto v = reduce_clique_to_half(u, k);
               if ((count_kcliques(v, v.n() / 2) > 0) != (count_kcliques(u, k) > 0)) return false;
             }
           }
         }
         return true;
       }},
      {"hcy-pipeline-completeness",
       [&](RandomStream& rng) {
         const auto m = exact_hcy_machine(6, p20);
         for (int t = 0; t < trials; ++t) {
           if (!is_hcy_pipeline(m, 20, rng).accepted()) return false;
         }
         return true;
       }},
      {"hcl-pipeline-completeness",
       [&](RandomStream& rng) {
         const auto m = exact_hcl_machine(6, p20);
         for (int t = 0; t < trials; ++t) {
           if (!is_hcl_pipeline(m, 20, rng).accepted()) return false;
         }
         return true;
       }},
      {"permanent-rejected",
       [&](RandomStream& rng) {
         const auto m = exact_permanent_machine(6, p20);
         for (int t = 0; t < trials; ++t) {
           if (is_hcy_pipeline(m, 20, rng).accepted()) return false;
         }
         return true;
       }},
      {"complement-two-isolated-count",
       [&](RandomStream&) {
         for (int n = 8; n <= 10; ++n) {
           const auto g = complement(construct_family(Family::clique_plus_two_isolated, n));
           const auto cls = classify_highly_symmetric(g, 3);
           if (!cls.count || *cls.count != static_cast<u64>(n - 2) || count_kcliques(g, 3) != *cls.count) return false;
         }
         return true;
       }},
  };
  int failed = 0;
  u64 stream = c.first_stream;
  for (const auto& check : checks) {
    RandomStream rng(c.seed, stream);
    bool ok = false;
    std::string detail;
    try {
      ok = check.run(rng);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    failed += ok ? 0 : 1;
    Row row = head("selftest");
    row["check"] = check.name;
    row["passed"] = ok;
    if (!detail.empty()) row["detail"] = detail;
    row["seed"] = c.seed;
    row["stream_id"] = stream++;
    w.write(row);
  }
  Row s = head("selftest");
  s["summary"] = true;
  s["checks"] = checks.size();
  s["failed"] = failed;
  s["seed"] = c.seed;
  w.write(s);
  return failed;
}

}  // namespace rarecase::cli
