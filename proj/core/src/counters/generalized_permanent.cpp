#include "rarecase/counters/generalized_permanent.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace rarecase {

namespace {

constexpr int kMaxN = 8;

void check_n(int n, const char* what) {
  if (n > kMaxN) throw CapabilityError(std::string(what) + " is limited to n <= 8");
}

u64 cover_product(const Permutation& sigma, const DirectedMultigraph& e) {
  const auto& p = e.modulus();
  u64 r = 1;
  for (int i = 0; i < e.n() && r != 0; ++i) r = p.mul(r, e.at(i, sigma(i)));
  return r;
}

template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  do {
    f(Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));
}

}  // namespace

GprCoefficients::GprCoefficients(int n, PrimeModulus p) : n_(n), p_(p) {
  if (n < 1) throw UsageError("GprCoefficients needs n >= 1");
}

GprCoefficients GprCoefficients::all_ones(int n, PrimeModulus p) {
  check_n(n, "GprCoefficients::all_ones");
  GprCoefficients a(n, p);
  for_each_permutation(n, [&](const Permutation& s) { a.set(s, 1); });
  return a;
}

GprCoefficients GprCoefficients::class_indicator(const Permutation& gamma, PrimeModulus p) {
  check_n(gamma.size(), "GprCoefficients::class_indicator");
  GprCoefficients a(gamma.size(), p);
  const auto type = cycle_type(gamma);
  for_each_permutation(gamma.size(), [&](const Permutation& s) {
    if (cycle_type(s) == type) a.set(s, 1);
  });
  return a;
}

void GprCoefficients::set(const Permutation& sigma, u64 coefficient) {
  if (sigma.size() != n_) throw UsageError("coefficient permutation has wrong size");
  coefficient = p_.reduce(coefficient);
  if (coefficient == 0) {
    a_.erase(sigma);
  } else {
    a_[sigma] = coefficient;
  }
}

u64 GprCoefficients::get(const Permutation& sigma) const {
  auto it = a_.find(sigma);
  return it == a_.end() ? 0 : it->second;
}

FieldElement gpr_evaluate(const GprCoefficients& a, const DirectedMultigraph& e) {
  check_n(e.n(), "gpr_evaluate");
  if (a.n() != e.n()) throw UsageError("gpr_evaluate: size mismatch");
  if (!(a.modulus() == e.modulus())) throw UsageError("gpr_evaluate: modulus mismatch");
  const auto& p = e.modulus();
  u64 total = 0;
  for (const auto& [sigma, coef] : a.entries()) total = p.add(total, p.mul(coef, cover_product(sigma, e)));
  return {total, p};
}

FieldElement conjugacy_class_poly(const Permutation& gamma, const DirectedMultigraph& e) {
  check_n(e.n(), "conjugacy_class_poly");
  if (gamma.size() != e.n()) throw UsageError("conjugacy_class_poly: size mismatch");
  const auto& p = e.modulus();
  const auto type = cycle_type(gamma);
  u64 total = 0;
  for_each_permutation(e.n(), [&](const Permutation& s) {
    if (cycle_type(s) == type) total = p.add(total, cover_product(s, e));
  });
  return {total, p};
}

FieldElement iso_subgraph_poly(const std::vector<VertexPair>& s, const UndirectedMultigraph& f) {
  const int n = f.n();
  check_n(n, "iso_subgraph_poly");
  for (auto [i, j] : s) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw UsageError("iso_subgraph_poly: bad edge");
  }
  const auto& p = f.modulus();
  std::unordered_set<u64> images;
  u64 total = 0;
  for_each_permutation(n, [&](const Permutation& sigma) {
    u64 mask = 0;
    for (auto [i, j] : s) mask |= u64{1} << pair_index(n, sigma(i), sigma(j));
    if (!images.insert(mask).second) return;
    u64 prod = 1;
    for (std::size_t q = 0; q < pair_count(n) && prod != 0; ++q) {
      if ((mask >> q) & 1U) prod = p.mul(prod, f.entries()[q]);
    }
    total = p.add(total, prod);
  });
  return {total, p};
}

SparseMonomialPoly::SparseMonomialPoly(VariableKind kind, int n, PrimeModulus p) : kind_(kind), n_(n), p_(p) {}

std::size_t SparseMonomialPoly::variable_count() const noexcept {
  return kind_ == VariableKind::directed ? static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)
                                         : pair_count(n_);
}

void SparseMonomialPoly::add_term(std::vector<int> vars, u64 coefficient) {
  for (int v : vars) {
    if (v < 0 || static_cast<std::size_t>(v) >= variable_count()) throw UsageError("variable index out of range");
  }
  std::sort(vars.begin(), vars.end());
  coefficient = p_.reduce(coefficient);
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.vars == vars; });
  if (it == terms_.end()) {
    if (coefficient != 0) terms_.push_back({std::move(vars), coefficient});
    return;
  }
  it->coefficient = p_.add(it->coefficient, coefficient);
  if (it->coefficient == 0) terms_.erase(it);
}

int SparseMonomialPoly::total_degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.vars.size()));
  return d;
}

bool SparseMonomialPoly::is_multilinear() const noexcept {
  for (const auto& t : terms_) {
    if (std::adjacent_find(t.vars.begin(), t.vars.end()) != t.vars.end()) return false;
  }
  return true;
}

u64 SparseMonomialPoly::evaluate(std::span<const u64> x) const {
  if (x.size() != variable_count()) throw UsageError("SparseMonomialPoly: wrong input length");
  u64 total = 0;
  for (const auto& t : terms_) {
    u64 prod = t.coefficient;
    for (int v : t.vars) prod = p_.mul(prod, x[static_cast<std::size_t>(v)]);
    total = p_.add(total, prod);
  }
  return total;
}

}  // namespace rarecase
