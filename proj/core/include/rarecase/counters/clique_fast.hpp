#pragma once

#include <cstddef>
#include <vector>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

enum class MatMulAlgorithm { schoolbook, strassen };

struct KCliqueFastOptions {
  MatMulAlgorithm algorithm = MatMulAlgorithm::schoolbook;
  std::size_t max_dim = 2048;
};

// Weighted k-clique sum via the trace of a cubed block matrix. Values of k
// not divisible by 3 are padded with dummy vertices and combined by
// inclusion-exclusion. Throws UsageError when k!/((k'/3)!)^3 vanishes mod p.
FieldElement kclique_fast(const UndirectedMultigraph& f, int k, KCliqueFastOptions options = {});

// Dense square matrices over Z_p, row-major.
using ModMatrix = std::vector<u64>;
ModMatrix matmul(const ModMatrix& a, const ModMatrix& b, std::size_t dim, const PrimeModulus& p,
                 MatMulAlgorithm algorithm);

}  // namespace rarecase
