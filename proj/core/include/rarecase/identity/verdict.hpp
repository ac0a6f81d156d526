#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rarecase/oracle/machine.hpp"

namespace rarecase {

struct QueryRecord {
  std::string round;
  std::vector<u64> input;
  u64 answer;
};

// The queries of the failing round and why they disagree.
struct FailureWitness {
  std::string round;
  std::vector<QueryRecord> queries;
  std::string reason;
};

struct TestVerdict {
  Verdict verdict = Verdict::accept;
  u64 rounds_run = 0;
  std::optional<FailureWitness> first_failure;
  std::optional<std::vector<QueryRecord>> transcript;
  u64 queries = 0;

  bool accepted() const noexcept { return verdict == Verdict::accept; }
};

// Counts and optionally records queries; rejects inputs outside the domain.
class QuerySession {
 public:
  QuerySession(const PolynomialMachine& m, bool record);

  u64 ask(std::span<const u64> input, const std::string& round);
  const PolynomialMachine& machine() const noexcept { return m_; }
  u64 queries() const noexcept { return queries_; }
  const std::vector<QueryRecord>& recent() const noexcept { return recent_; }
  void begin_round() { recent_.clear(); }

  TestVerdict accept(u64 rounds) const;
  TestVerdict reject(u64 rounds, std::string round, std::string reason) const;

 private:
  const PolynomialMachine& m_;
  bool record_;
  u64 queries_ = 0;
  std::vector<QueryRecord> recent_;
  std::vector<QueryRecord> log_;
};

// Repetitions r with (1/2 + degree/p)^r <= 2^-target_bits.
u64 recommended_repetitions(double target_bits, u64 degree, u64 p);

// One JSON object per line: {"round", "input", "answer"}.
void write_transcript_jsonl(std::ostream& out, std::span<const QueryRecord> transcript);

}  // namespace rarecase
