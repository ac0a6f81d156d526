#pragma once

#include "rarecase/identity/verdict.hpp"

namespace rarecase::detail {

inline void require_kind(const PolynomialMachine& m, DomainKind kind) {
  if (m.domain_kind() != kind) {
    throw UsageError(m.label() + (kind == DomainKind::directed ? " is not a directed-multigraph machine"
                                                               : " is not an undirected-multigraph machine"));
  }
}

inline void require_prime_above(const PolynomialMachine& m, u64 bound) {
  if (m.modulus().value() <= bound) {
    throw UsageError(m.label() + ": test needs p > " + std::to_string(bound));
  }
}

inline void require_degree_at_most(const PolynomialMachine& m, u64 bound) {
  if (m.degree_bound() < 0 || static_cast<u64>(m.degree_bound()) > bound) {
    throw UsageError(m.label() + ": degree promise " + std::to_string(m.degree_bound()) + " exceeds " +
                     std::to_string(bound));
  }
}

}  // namespace rarecase::detail
