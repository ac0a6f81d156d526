#pragma once

#include "cli/options.hpp"
#include "cli/report.hpp"

namespace rarecase::cli {

void run_count(const CommonOptions& c, const CountOptions& o, ReportWriter& w);
void run_identify(const CommonOptions& c, const IdentifyOptions& o, ReportWriter& w);
void run_reduce(const CommonOptions& c, const ReduceOptions& o, ReportWriter& w);
void run_amplify(const CommonOptions& c, const AmplifyOptions& o, ReportWriter& w);
void run_experiment(const CommonOptions& c, const ExperimentOptions& o, ReportWriter& w);
// Returns the number of failed checks.
int run_selftest(const CommonOptions& c, const SelftestOptions& o, ReportWriter& w);

}  // namespace rarecase::cli
