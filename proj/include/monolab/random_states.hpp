#pragma once

#include <cstdint>
#include <string>

#include "monolab/quantum_state.hpp"
#include "monolab/system_dims.hpp"

namespace monolab {

// Deterministic description of one random state draw. The same spec always
// reproduces the same state, independent of how draws are batched or ordered.
struct RandomSpec {
  enum class Kind { haar_pure, induced_mixed };

  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
  Kind kind = Kind::haar_pure;
  int rank = 1;  // environment rank for induced_mixed; ignored for haar_pure

  std::uint64_t stream_seed(const SystemDims& dims) const;
};

// Global-unitary-invariant pure state: i.i.d. complex normals, normalized.
QuantumState haar_pure_state(const SystemDims& dims, std::uint64_t stream_seed);

// rho = G G^dag / tr(G G^dag) with G a d x rank complex Gaussian matrix.
QuantumState induced_mixed_state(const SystemDims& dims, int rank,
                                 std::uint64_t stream_seed);

QuantumState sample_state(const SystemDims& dims, const RandomSpec& spec);

// Tensor product of independent single-subsystem pure draws.
QuantumState random_product_state(const SystemDims& dims,
                                  std::uint64_t stream_seed);

}  // namespace monolab
