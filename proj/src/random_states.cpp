#include "monolab/random_states.hpp"

#include "monolab/errors.hpp"
#include "monolab/rng.hpp"
#include "monolab/state_ops.hpp"

namespace monolab {

namespace {

Vec gaussian_vector(SplitMix64& rng, int d) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.next_complex_normal();
  return v;
}

}  // namespace

std::uint64_t RandomSpec::stream_seed(const SystemDims& dims) const {
  std::uint64_t h = derive_seed(
      master_seed,
      {sample_index, static_cast<std::uint64_t>(kind),
       static_cast<std::uint64_t>(kind == Kind::induced_mixed ? rank : 0)});
  for (int k = 0; k < dims.count(); ++k)
    h = mix_u64(h, static_cast<std::uint64_t>(dims.dim(k)));
  return h;
}

QuantumState haar_pure_state(const SystemDims& dims,
                             std::uint64_t stream_seed) {
  SplitMix64 rng(stream_seed);
  Vec v = gaussian_vector(rng, dims.total());
  double n = v.norm();
  if (n <= 0.0)
    throw InternalConsistencyError("degenerate gaussian draw");
  return QuantumState::pure(dims, v / n);
}

QuantumState induced_mixed_state(const SystemDims& dims, int rank,
                                 std::uint64_t stream_seed) {
  if (rank < 1) throw DomainError("induced_mixed rank must be >= 1");
  SplitMix64 rng(stream_seed);
  const int d = dims.total();
  Mat g(d, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.next_complex_normal();
  Mat rho = g * g.adjoint();
  double tr = rho.trace().real();
  if (tr <= 0.0)
    throw InternalConsistencyError("degenerate gaussian draw");
  rho /= tr;
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return QuantumState::mixed_trusted(dims, rho);
}

QuantumState sample_state(const SystemDims& dims, const RandomSpec& spec) {
  const std::uint64_t s = spec.stream_seed(dims);
  switch (spec.kind) {
    case RandomSpec::Kind::haar_pure:
      return haar_pure_state(dims, s);
    case RandomSpec::Kind::induced_mixed:
      return induced_mixed_state(dims, spec.rank, s);
  }
  throw InternalConsistencyError("unknown RandomSpec kind");
}

QuantumState random_product_state(const SystemDims& dims,
                                  std::uint64_t stream_seed) {
  SplitMix64 rng(stream_seed);
  Vec v = Vec::Ones(1);
  for (int k = 0; k < dims.count(); ++k) {
    Vec f = gaussian_vector(rng, dims.dim(k));
    f /= f.norm();
    v = kron_vec(v, f).eval();
  }
  return QuantumState::pure(dims, v);
}

}  // namespace monolab
