#include "rarecase/counters/clique_fast.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rarecase {

namespace {

constexpr std::size_t kStrassenCutoff = 64;

std::size_t reduction_batch(const PrimeModulus& p) {
  int shift = 127 - 2 * p.bit_width();
  return std::size_t{1} << std::clamp(shift, 0, 20);
}

ModMatrix schoolbook(const ModMatrix& a, const ModMatrix& b, std::size_t dim, const PrimeModulus& p) {
  ModMatrix c(dim * dim, 0);
  const std::size_t batch = reduction_batch(p);
  std::vector<u128> acc(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t l = 0; l < dim; ++l) {
      const u64 x = a[i * dim + l];
      if (x != 0) {
        const u64* brow = &b[l * dim];
        for (std::size_t j = 0; j < dim; ++j) acc[j] += static_cast<u128>(x) * brow[j];
      }
      if ((l + 1) % batch == 0) {
        for (auto& v : acc) v %= p.value();
      }
    }
    for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] = p.reduce(acc[j]);
  }
  return c;
}

ModMatrix block(const ModMatrix& m, std::size_t dim, std::size_t r, std::size_t c) {
  const std::size_t h = dim / 2;
  ModMatrix out(h * h);
  for (std::size_t i = 0; i < h; ++i) {
    std::copy_n(&m[(r + i) * dim + c], h, &out[i * h]);
  }
  return out;
}

ModMatrix combine(const ModMatrix& x, const ModMatrix& y, const PrimeModulus& p, bool subtract) {
  ModMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = subtract ? p.sub(x[i], y[i]) : p.add(x[i], y[i]);
  return out;
}

ModMatrix strassen(const ModMatrix& a, const ModMatrix& b, std::size_t dim, const PrimeModulus& p) {
  if (dim <= kStrassenCutoff) return schoolbook(a, b, dim, p);
  const std::size_t h = dim / 2;
  auto a11 = block(a, dim, 0, 0), a12 = block(a, dim, 0, h), a21 = block(a, dim, h, 0), a22 = block(a, dim, h, h);
  auto b11 = block(b, dim, 0, 0), b12 = block(b, dim, 0, h), b21 = block(b, dim, h, 0), b22 = block(b, dim, h, h);
  auto add = [&](const ModMatrix& x, const ModMatrix& y) { return combine(x, y, p, false); };
  auto sub = [&](const ModMatrix& x, const ModMatrix& y) { return combine(x, y, p, true); };
  auto m1 = strassen(add(a11, a22), add(b11, b22), h, p);
  auto m2 = strassen(add(a21, a22), b11, h, p);
  auto m3 = strassen(a11, sub(b12, b22), h, p);
  auto m4 = strassen(a22, sub(b21, b11), h, p);
  auto m5 = strassen(add(a11, a12), b22, h, p);
  auto m6 = strassen(sub(a21, a11), add(b11, b12), h, p);
  auto m7 = strassen(sub(a12, a22), add(b21, b22), h, p);
  auto c11 = add(sub(add(m1, m4), m5), m7);
  auto c12 = add(m3, m5);
  auto c21 = add(m2, m4);
  auto c22 = add(add(sub(m1, m2), m3), m6);
  ModMatrix c(dim * dim);
  for (std::size_t i = 0; i < h; ++i) {
    std::copy_n(&c11[i * h], h, &c[i * dim]);
    std::copy_n(&c12[i * h], h, &c[i * dim + h]);
    std::copy_n(&c21[i * h], h, &c[(i + h) * dim]);
    std::copy_n(&c22[i * h], h, &c[(i + h) * dim + h]);
  }
  return c;
}

std::vector<u64> subsets_of_size(int n, int s) {
  std::vector<u64> out;
  if (s > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    u64 m = 0;
    for (int v : idx) m |= u64{1} << v;
    out.push_back(m);
    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

u64 subset_weight(const UndirectedMultigraph& f, u64 s) {
  const auto& p = f.modulus();
  u64 w = 1;
  for (u64 a = s; a && w; a &= a - 1) {
    int u = std::countr_zero(a);
    for (u64 b = a & (a - 1); b && w; b &= b - 1) w = p.mul(w, f.at(u, std::countr_zero(b)));
  }
  return w;
}

u64 cross_weight(const UndirectedMultigraph& f, u64 s, u64 t) {
  if (s & t) return 0;
  const auto& p = f.modulus();
  u64 w = 1;
  for (u64 a = s; a && w; a &= a - 1) {
    int u = std::countr_zero(a);
    for (u64 b = t; b && w; b &= b - 1) w = p.mul(w, f.at(u, std::countr_zero(b)));
  }
  return w;
}

// k divisible by 3.
u64 count_multiple_of_three(const UndirectedMultigraph& f, int k, const KCliqueFastOptions& opt) {
  const auto& p = f.modulus();
  const int s = k / 3;
  const u64 dim64 = binomial(static_cast<u64>(f.n()), static_cast<u64>(s));
  if (dim64 > opt.max_dim) {
    throw CapabilityError("kclique_fast: block matrix dimension " + std::to_string(dim64) + " exceeds " +
                          std::to_string(opt.max_dim));
  }
  const auto blocks = subsets_of_size(f.n(), s);
  const std::size_t dim = blocks.size();
  if (dim == 0) return 0;

  // Each k-clique appears once per ordered split into three blocks.
  const u64 denom = p.mul(p.reduce(binomial(static_cast<u64>(k), static_cast<u64>(s))),
                          p.reduce(binomial(static_cast<u64>(k - s), static_cast<u64>(s))));
  if (denom == 0) {
    throw UsageError("kclique_fast: split multiplicity vanishes mod " + std::to_string(p.value()));
  }

  std::size_t padded = dim;
  if (opt.algorithm == MatMulAlgorithm::strassen) padded = std::bit_ceil(dim);
  ModMatrix x(padded * padded, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    const u64 wa = subset_weight(f, blocks[a]);
    if (wa == 0) continue;
    for (std::size_t b = 0; b < dim; ++b) x[a * padded + b] = p.mul(wa, cross_weight(f, blocks[a], blocks[b]));
  }
  const ModMatrix x2 = matmul(x, x, padded, p, opt.algorithm);
  u128 acc = 0;
  const std::size_t batch = reduction_batch(p);
  std::size_t terms = 0;
  for (std::size_t a = 0; a < padded; ++a) {
    for (std::size_t b = 0; b < padded; ++b) {
      acc += static_cast<u128>(x2[a * padded + b]) * x[b * padded + a];
      if (++terms % batch == 0) acc %= p.value();
    }
  }
  return p.mul(p.reduce(acc), p.inv(denom));
}

UndirectedMultigraph extend(const UndirectedMultigraph& f, const std::vector<u64>& joins) {
  const int n = f.n();
  const int m = n + static_cast<int>(joins.size());
  UndirectedMultigraph g(m, f.modulus());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.set(i, j, f.at(i, j));
  }
  for (std::size_t d = 0; d < joins.size(); ++d) {
    const int x = n + static_cast<int>(d);
    for (int v = 0; v < n; ++v) g.set(v, x, joins[d]);
    for (int y = n; y < x; ++y) g.set(y, x, 1);
  }
  return g;
}

}  // namespace

ModMatrix matmul(const ModMatrix& a, const ModMatrix& b, std::size_t dim, const PrimeModulus& p,
                 MatMulAlgorithm algorithm) {
  if (a.size() != dim * dim || b.size() != dim * dim) throw UsageError("matmul: dimension mismatch");
  if (algorithm == MatMulAlgorithm::schoolbook || !std::has_single_bit(dim)) return schoolbook(a, b, dim, p);
  return strassen(a, b, dim, p);
}

FieldElement kclique_fast(const UndirectedMultigraph& f, int k, KCliqueFastOptions options) {
  const auto& p = f.modulus();
  if (k < 0) throw UsageError("clique size must be non-negative");
  if (k == 0) return {1, p};
  if (k > f.n()) return {0, p};
  const int pad = (3 - k % 3) % 3;
  if (f.n() + pad > 64) throw CapabilityError("kclique_fast is limited to n <= 62");
  const int kk = k + pad;
  if (pad == 0) return {count_multiple_of_three(f, k, options), p};
  if (pad == 1) {
    u64 with = count_multiple_of_three(extend(f, {1}), kk, options);
    u64 without = count_multiple_of_three(extend(f, {0}), kk, options);
    return {p.sub(with, without), p};
  }
  u64 g11 = count_multiple_of_three(extend(f, {1, 1}), kk, options);
  u64 g10 = count_multiple_of_three(extend(f, {1, 0}), kk, options);
  u64 g01 = count_multiple_of_three(extend(f, {0, 1}), kk, options);
  u64 g00 = count_multiple_of_three(extend(f, {0, 0}), kk, options);
  return {p.add(p.sub(p.sub(g11, g10), g01), g00), p};
}

}  // namespace rarecase
