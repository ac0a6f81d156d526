#include "rarecase/identity/verdict.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace rarecase {

QuerySession::QuerySession(const PolynomialMachine& m, bool record) : m_(m), record_(record) {}

u64 QuerySession::ask(std::span<const u64> input, const std::string& round) {
  const u64 answer = m_.evaluate(input).value();
  ++queries_;
  QueryRecord rec{round, std::vector<u64>(input.begin(), input.end()), answer};
  if (record_) log_.push_back(rec);
  recent_.push_back(std::move(rec));
  return answer;
}

TestVerdict QuerySession::accept(u64 rounds) const {
  TestVerdict v;
  v.verdict = Verdict::accept;
  v.rounds_run = rounds;
  v.queries = queries_;
  if (record_) v.transcript = log_;
  return v;
}

TestVerdict QuerySession::reject(u64 rounds, std::string round, std::string reason) const {
  TestVerdict v = accept(rounds);
  v.verdict = Verdict::reject;
  v.first_failure = FailureWitness{std::move(round), recent_, std::move(reason)};
  return v;
}

u64 recommended_repetitions(double target_bits, u64 degree, u64 p) {
  if (!(target_bits > 0)) throw UsageError("target error exponent must be positive");
  const double per_round = 0.5 + static_cast<double>(degree) / static_cast<double>(p);
  if (per_round >= 1.0) throw UsageError("p too small for a useful soundness bound");
  return static_cast<u64>(std::ceil(target_bits / -std::log2(per_round)));
}

void write_transcript_jsonl(std::ostream& out, std::span<const QueryRecord> transcript) {
  for (const auto& r : transcript) {
    nlohmann::json j;
    j["round"] = r.round;
    j["input"] = r.input;
    j["answer"] = r.answer;
    out << j.dump() << '\n';
  }
}

}  // namespace rarecase
