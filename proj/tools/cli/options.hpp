#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rarecase/algebra/prime_field.hpp"

namespace rarecase::cli {

struct CommonOptions {
  u64 seed = 1;
  std::string format = "jsonl";
  std::optional<u64> p;
  std::optional<int> p_bits;
  u64 first_stream = 1;
};

// --p if given, else next prime >= 2^(--p-bits), else the fallback.
PrimeModulus resolve_modulus(const CommonOptions& c, u64 fallback);
PrimeModulus prime_from_bits(int bits);

struct CountOptions {
  std::string graph;
  std::string alg = "fast";
  std::string quantity = "kclique";
  std::optional<int> k;
  std::optional<u64> t;
};

struct IdentifyOptions {
  std::string machine;
  int n = 0;
  u64 repetitions = 20;
  u64 trials = 1;
  int k_min = 1;
  std::string transcript;
};

struct ReduceOptions {
  std::string reduction;
  std::string graph;
  std::optional<int> k;
  std::string out;
  bool evaluate = false;
};

struct AmplifyOptions {
  std::string pipeline;
  int n = 0;
  int k = 3;
  std::string truth = "parity";
  double epsilon = 0.25;
  double delta = 0.01;
  double alpha = 0.1;
  double threshold_constant = 100.0;
  double c = 0.75;
  std::string strategy = "random-wrong";
  std::string mode = "auto";
  u64 trials = 1;
  int floor = 8;
  std::string graph;
};

struct ExperimentOptions {
  std::string kind;
  int n = 0;
  std::vector<std::string> machines;
  std::string family = "hcy";
  u64 repetitions = 20;
  u64 trials = 100;
  double c = 0.75;
  double epsilon = 0.25;
  std::string strategy = "random-wrong";
  u64 oracles = 200;
  u64 samples = 10000;
  std::string machine;
};

struct SelftestOptions {
  bool quick = false;
};

}  // namespace rarecase::cli
