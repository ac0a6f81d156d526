#pragma once

#include <string>
#include <vector>

#include "rarecase/oracle/machine.hpp"

namespace rarecase {

PolynomialMachine exact_hcy_machine(int n, PrimeModulus p);
PolynomialMachine exact_hcl_machine(int n, PrimeModulus p);
PolynomialMachine exact_permanent_machine(int n, PrimeModulus p);
PolynomialMachine scaled_machine(const PolynomialMachine& inner, u64 alpha);
// Sum over the conjugacy class with the given cycle type. n <= 8.
PolynomialMachine conj_class_machine(const std::vector<int>& parts, int n, PrimeModulus p);
// Monomial of the cycle cover 1 -> 2 -> ... -> n -> 1.
PolynomialMachine single_cover_monomial_machine(int n, PrimeModulus p);
// prod_{j >= 2} e_(1,j)
PolynomialMachine row_monomial_machine(int n, PrimeModulus p);
PolynomialMachine edge_sum_machine(int n, PrimeModulus p);
// e_{1,2}^2
PolynomialMachine square_variable_machine(int n, PrimeModulus p);
// e_{1,2}
PolynomialMachine single_edge_machine(int n, PrimeModulus p);
// Wrong on a keyed pseudorandom epsilon-fraction of inputs.
PolynomialMachine noisy_machine(const PolynomialMachine& inner, double epsilon, u64 seed);

// Ids: exact_hcy|hcy, exact_hcl|hcl, exact_permanent|permanent,
// scaled_hcy[:alpha], scaled_hcl[:alpha], conj_class[:a,b,...],
// single_cover_monomial, row_monomial, edge_sum, square_variable,
// single_edge_monomial, noisy:eps:seed:inner_id.
PolynomialMachine machine_catalog(const std::string& id, int n, PrimeModulus p);
std::vector<std::string> catalog_ids();

}  // namespace rarecase
