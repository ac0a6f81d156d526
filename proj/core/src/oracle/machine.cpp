#include "rarecase/oracle/machine.hpp"

#include <string>

namespace rarecase {

PolynomialMachine::PolynomialMachine(DomainKind kind, int n, PrimeModulus p, int degree_bound, std::string label,
                                     Evaluator evaluator, std::optional<SparseMonomialPoly> symbolic)
    : kind_(kind),
      n_(n),
      p_(p),
      degree_bound_(degree_bound),
      label_(std::move(label)),
      eval_(std::move(evaluator)),
      symbolic_(std::move(symbolic)) {
  if (n < 1) throw UsageError("machine needs n >= 1");
  if (!eval_) throw UsageError("machine needs an evaluator");
}

std::size_t PolynomialMachine::input_size() const noexcept {
  return kind_ == DomainKind::directed ? static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)
                                       : pair_count(n_);
}

FieldElement PolynomialMachine::evaluate(std::span<const u64> entries) const {
  if (entries.size() != input_size()) {
    throw UsageError(label_ + ": expected " + std::to_string(input_size()) + " entries, got " +
                     std::to_string(entries.size()));
  }
  for (u64 v : entries) {
    if (v >= p_.value()) throw UsageError(label_ + ": entry outside [0, p)");
  }
  return {eval_(entries), p_};
}

FieldElement PolynomialMachine::operator()(const DirectedMultigraph& e) const {
  if (kind_ != DomainKind::directed) throw UsageError(label_ + " takes undirected multigraphs");
  if (e.n() != n_ || !(e.modulus() == p_)) throw UsageError(label_ + ": graph size or modulus mismatch");
  return evaluate(e.entries());
}

FieldElement PolynomialMachine::operator()(const UndirectedMultigraph& f) const {
  if (kind_ != DomainKind::undirected) throw UsageError(label_ + " takes directed multigraphs");
  if (f.n() != n_ || !(f.modulus() == p_)) throw UsageError(label_ + ": graph size or modulus mismatch");
  return evaluate(f.entries());
}

}  // namespace rarecase
