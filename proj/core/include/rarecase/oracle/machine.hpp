#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "rarecase/counters/generalized_permanent.hpp"
#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

enum class DomainKind { directed, undirected };

// Black box from an edge sequence to Z_p with a promised total degree.
class PolynomialMachine {
 public:
  using Evaluator = std::function<u64(std::span<const u64>)>;

  PolynomialMachine(DomainKind kind, int n, PrimeModulus p, int degree_bound, std::string label,
                    Evaluator evaluator, std::optional<SparseMonomialPoly> symbolic = std::nullopt);

  DomainKind domain_kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  const PrimeModulus& modulus() const noexcept { return p_; }
  int degree_bound() const noexcept { return degree_bound_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t input_size() const noexcept;
  const std::optional<SparseMonomialPoly>& symbolic() const noexcept { return symbolic_; }

  // Throws UsageError on wrong length or entries outside [0, p).
  FieldElement evaluate(std::span<const u64> entries) const;
  FieldElement operator()(const DirectedMultigraph& e) const;
  FieldElement operator()(const UndirectedMultigraph& f) const;

 private:
  DomainKind kind_;
  int n_;
  PrimeModulus p_;
  int degree_bound_;
  std::string label_;
  Evaluator eval_;
  std::optional<SparseMonomialPoly> symbolic_;
};

}  // namespace rarecase
