#pragma once

#include <ostream>

namespace rarecase::cli {

// Parses argv, runs one subcommand, returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rarecase::cli
