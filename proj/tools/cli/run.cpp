#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/cli.hpp"
#include "cli/commands.hpp"

namespace rarecase::cli {

namespace {

void report_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  err << j.dump() << '\n';
}

void add_common(CLI::App* app, CommonOptions& c, bool modulus) {
  app->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  app->add_option("--format", c.format, "jsonl or csv")->capture_default_str();
  app->add_option("--first-stream", c.first_stream, "Stream id of the first trial")->capture_default_str();
  if (modulus) {
    auto* p = app->add_option("--p", c.p, "Prime modulus");
    app->add_option("--p-bits", c.p_bits, "Use the least prime >= 2^bits")->excludes(p);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting polynomials, identity tests and worst-case to rare-case reductions"};
  app.require_subcommand(1);
  CommonOptions common;

  CountOptions count;
  auto* c = app.add_subcommand("count", "Count cliques, Hamiltonian cycles or the permanent of a graph file");
  add_common(c, common, true);
  c->add_option("--graph", count.graph, "Graph JSON file")->required();
  c->add_option("--alg", count.alg, "brute, fast or sym")->capture_default_str();
  c->add_option("--quantity", count.quantity, "kclique, hcy, hcl or permanent")->capture_default_str();
  c->add_option("--k", count.k, "Clique size");
  c->add_option("--t", count.t, "Symmetry parameter of the sym counter");

  IdentifyOptions identify;
  auto* i = app.add_subcommand("identify", "Run the identity-test pipeline on a catalog machine");
  add_common(i, common, true);
  i->add_option("--machine", identify.machine, "Catalog id")->required();
  i->add_option("--n", identify.n, "Vertices")->required();
  i->add_option("--repetitions", identify.repetitions)->capture_default_str();
  i->add_option("--trials", identify.trials)->capture_default_str();
  i->add_option("--k-min", identify.k_min, "Smallest planted cycle length")->capture_default_str();
  i->add_option("--transcript", identify.transcript, "Write the first trial's queries as JSON lines");

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "Apply a decision-to-counting or clique-to-half reduction");
  add_common(r, common, true);
  r->add_option("--reduction", reduce.reduction, "hamcycle, half or clique")->required();
  r->add_option("--graph", reduce.graph, "Graph JSON file")->required();
  r->add_option("--k", reduce.k, "Clique size for --reduction clique");
  r->add_option("--out", reduce.out, "Write the reduced graph here");
  r->add_flag("--evaluate", reduce.evaluate, "Also decide the reduced instance");

  AmplifyOptions amplify;
  auto* a = app.add_subcommand("amplify", "Run a reduction pipeline against a sampled corrupt oracle");
  add_common(a, common, false);
  a->add_option("--pipeline", amplify.pipeline, "theorem1 or theorem2")->required();
  a->add_option("--n", amplify.n, "Vertices")->required();
  a->add_option("--k", amplify.k)->capture_default_str();
  a->add_option("--truth", amplify.truth, "parity or count of k-cliques")->capture_default_str();
  a->add_option("--epsilon", amplify.epsilon)->capture_default_str();
  a->add_option("--delta", amplify.delta)->capture_default_str();
  a->add_option("--alpha", amplify.alpha)->capture_default_str();
  a->add_option("--threshold-constant", amplify.threshold_constant)->capture_default_str();
  a->add_option("--c", amplify.c, "Correct fraction of the oracle")->capture_default_str();
  a->add_option("--strategy", amplify.strategy, "flip, random-wrong, zero or class-targeted")->capture_default_str();
  a->add_option("--mode", amplify.mode, "auto, exact-table or keyed-prf")->capture_default_str();
  a->add_option("--trials", amplify.trials)->capture_default_str();
  a->add_option("--floor", amplify.floor, "Classification floor")->capture_default_str();
  a->add_option("--graph", amplify.graph, "Fixed input graph instead of random inputs");

  ExperimentOptions experiment;
  auto* e = app.add_subcommand("experiment", "Batched Monte-Carlo surveys");
  add_common(e, common, true);
  e->add_option("--kind", experiment.kind, "soundness, large-class, rigidity or zero-fraction")->required();
  e->add_option("--n", experiment.n, "Vertices")->required();
  e->add_option("--machines", experiment.machines, "Catalog ids (soundness)");
  e->add_option("--family", experiment.family, "hcy or hcl default impostors")->capture_default_str();
  e->add_option("--machine", experiment.machine, "Catalog id (zero-fraction)");
  e->add_option("--repetitions", experiment.repetitions)->capture_default_str();
  e->add_option("--trials", experiment.trials)->capture_default_str();
  e->add_option("--c", experiment.c)->capture_default_str();
  e->add_option("--epsilon", experiment.epsilon)->capture_default_str();
  e->add_option("--strategy", experiment.strategy)->capture_default_str();
  e->add_option("--oracles", experiment.oracles)->capture_default_str();
  e->add_option("--samples", experiment.samples)->capture_default_str();

  SelftestOptions selftest;
  auto* s = app.add_subcommand("selftest", "Run the built-in invariant checks");
  add_common(s, common, false);
  s->add_flag("--quick", selftest.quick, "Fewer randomized trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    report_error(err, "usage", ex.what(), 2);
    return 2;
  }

  try {
    ReportWriter w(out, parse_format(common.format));
    if (*c) run_count(common, count, w);
    if (*i) run_identify(common, identify, w);
    if (*r) run_reduce(common, reduce, w);
    if (*a) run_amplify(common, amplify, w);
    if (*e) run_experiment(common, experiment, w);
    if (*s && run_selftest(common, selftest, w) > 0) {
      report_error(err, "internal-assertion", "selftest checks failed", 4);
      return 4;
    }
    out.flush();
    return 0;
  } catch (const Error& ex) {
    report_error(err, ex.kind(), ex.what(), ex.exit_code());
    return ex.exit_code();
  } catch (const std::exception& ex) {
    report_error(err, "internal", ex.what(), 4);
    return 4;
  }
}

}  // namespace rarecase::cli
