#pragma once

#include <map>
#include <span>
#include <vector>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

enum class VariableKind { directed, undirected };

// Coefficient per permutation; absent entries are 0.
class GprCoefficients {
 public:
  GprCoefficients(int n, PrimeModulus p);

  static GprCoefficients all_ones(int n, PrimeModulus p);
  // 1 on every permutation with the cycle type of gamma.
  static GprCoefficients class_indicator(const Permutation& gamma, PrimeModulus p);

  int n() const noexcept { return n_; }
  const PrimeModulus& modulus() const noexcept { return p_; }
  void set(const Permutation& sigma, u64 coefficient);
  u64 get(const Permutation& sigma) const;
  const std::map<Permutation, u64>& entries() const noexcept { return a_; }

 private:
  int n_;
  PrimeModulus p_;
  std::map<Permutation, u64> a_;
};

// n <= 8 for the three evaluators below.
FieldElement gpr_evaluate(const GprCoefficients& a, const DirectedMultigraph& e);
FieldElement conjugacy_class_poly(const Permutation& gamma, const DirectedMultigraph& e);
// Sum over distinct images of the edge set s under S_n.
FieldElement iso_subgraph_poly(const std::vector<VertexPair>& s, const UndirectedMultigraph& f);

// Sum of coefficient * product of variables. A monomial is a sorted list of
// variable indices; repeats are powers.
class SparseMonomialPoly {
 public:
  struct Term {
    std::vector<int> vars;
    u64 coefficient;
  };

  SparseMonomialPoly(VariableKind kind, int n, PrimeModulus p);

  // Merges equal monomials and drops zero coefficients.
  void add_term(std::vector<int> vars, u64 coefficient);

  VariableKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  std::size_t variable_count() const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  int total_degree() const noexcept;
  bool is_multilinear() const noexcept;
  u64 evaluate(std::span<const u64> x) const;

 private:
  VariableKind kind_;
  int n_;
  PrimeModulus p_;
  std::vector<Term> terms_;
};

}  // namespace rarecase
