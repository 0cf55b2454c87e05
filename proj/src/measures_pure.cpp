#include "monolab/measures_pure.hpp"

#include <algorithm>
#include <cmath>

#include "monolab/errors.hpp"
#include "monolab/state_ops.hpp"

namespace monolab {

namespace {

void require_2q(const QuantumState& state, const char* what) {
  const auto& d = state.dims();
  if (d.count() != 2 || d.dim(0) != 2 || d.dim(1) != 2)
    throw DomainError(std::string(what) + " needs a 2,2 system, got " +
                      d.to_string());
}

// Eigenvalues of the reduced state on the cut's first side, clamped.
Eigen::VectorXd schmidt_spectrum(const QuantumState& state,
                                 const Bipartition& cut) {
  if (!state.is_pure())
    throw DomainError("pure-state formula applied to a mixed state");
  cut.validate(state.dims());
  auto ra = reduced_state(state, cut.side_a);
  return clamped_spectrum(ra.matrix());
}

Mat hermitian_sqrt(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  Eigen::VectorXd vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) vals(i) = std::sqrt(std::max(0.0, vals(i)));
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

QuantumState bipartite_view(const QuantumState& state, const Bipartition& cut) {
  cut.validate(state.dims());
  std::vector<int> perm = cut.side_a;
  perm.insert(perm.end(), cut.side_b.begin(), cut.side_b.end());
  auto moved = permute_subsystems(state, perm);
  int da = 1, db = 1;
  for (int k : cut.side_a) da *= state.dims().dim(k);
  for (int k : cut.side_b) db *= state.dims().dim(k);
  return moved.with_dims(SystemDims({da, db}));
}

double concurrence_pure(const QuantumState& state, const Bipartition& cut) {
  auto spectrum = schmidt_spectrum(state, cut);
  const double p = spectrum.squaredNorm();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

Eigen::Vector4d spin_flip_lambdas(const QuantumState& rho2q) {
  require_2q(rho2q, "spin_flip_lambdas");
  Mat rho = rho2q.density();

  // (sy x sy) rho^* (sy x sy) expanded in the computational basis:
  // entry (i,j) picks rho^*(3-i, 3-j) with sign (-1)^{popcount(i)+popcount(j)}.
  Mat flipped(4, 4);
  auto sign = [](int k) { return ((k == 0 || k == 3) ? 1.0 : -1.0); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      flipped(i, j) = sign(i) * sign(j) * std::conj(rho(3 - i, 3 - j));

  Mat sq = hermitian_sqrt(rho);
  Mat inner = sq * flipped * sq;
  inner = ((inner + inner.adjoint()) / 2.0).eval();
  Eigen::VectorXd vals = hermitian_eigenvalues(inner);
  Eigen::Vector4d lambdas;
  for (int i = 0; i < 4; ++i)
    lambdas(i) = std::sqrt(std::max(0.0, vals(3 - i)));
  return lambdas;  // descending
}

double concurrence_2q(const QuantumState& rho2q) {
  auto l = spin_flip_lambdas(rho2q);
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double concurrence_assistance_2q(const QuantumState& rho2q) {
  return spin_flip_lambdas(rho2q).sum();
}

double negativity(const QuantumState& state, const Bipartition& cut) {
  cut.validate(state.dims());
  auto bi = bipartite_view(state, cut);
  if (bi.is_pure()) {
    // For a pure state the partial-transpose trace norm is (sum_i sqrt(l_i))^2
    // over the Schmidt spectrum; cheaper than an eigensolve of the d^2 matrix.
    auto spectrum = schmidt_spectrum(bi, Bipartition{{0}, {1}});
    double s = 0.0;
    for (int i = 0; i < spectrum.size(); ++i) s += std::sqrt(spectrum(i));
    return std::max(0.0, s * s - 1.0);
  }
  return std::max(0.0, trace_norm(partial_transpose(bi, 0)) - 1.0);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (c < 0.0 || c > 1.0 + 1e-12)
    throw DomainError("concurrence outside [0,1]");
  c = std::min(c, 1.0);
  return binary_entropy((1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0);
}

double eof_2q(const QuantumState& rho2q) {
  return eof_from_concurrence(concurrence_2q(rho2q));
}

double entropy_pure(const QuantumState& state, const Bipartition& cut,
                    EntropyFamily family, double parameter) {
  auto spectrum = schmidt_spectrum(state, cut);
  if (family != EntropyFamily::von_neumann) {
    if (!(parameter > 0.0))
      throw DomainError("entropy order must be positive");
    if (parameter == 1.0) family = EntropyFamily::von_neumann;
  }
  switch (family) {
    case EntropyFamily::von_neumann: {
      double s = 0.0;
      for (int i = 0; i < spectrum.size(); ++i)
        if (spectrum(i) > 0.0) s -= spectrum(i) * std::log2(spectrum(i));
      return std::max(0.0, s);
    }
    case EntropyFamily::renyi: {
      double acc = 0.0;
      for (int i = 0; i < spectrum.size(); ++i)
        acc += std::pow(spectrum(i), parameter);
      return std::max(0.0, std::log2(acc) / (1.0 - parameter));
    }
    case EntropyFamily::tsallis: {
      double acc = 0.0;
      for (int i = 0; i < spectrum.size(); ++i)
        acc += std::pow(spectrum(i), parameter);
      return std::max(0.0, (1.0 - acc) / (parameter - 1.0));
    }
  }
  throw InternalConsistencyError("unknown entropy family");
}

double pure_base_value(const MeasureSpec& measure, const QuantumState& state,
                       const Bipartition& cut) {
  switch (measure.kind) {
    case MeasureKind::concurrence:
      return concurrence_pure(state, cut);
    case MeasureKind::tangle: {
      const double c = concurrence_pure(state, cut);
      return c * c;
    }
    case MeasureKind::negativity:
    case MeasureKind::convex_roof_negativity:
      return negativity(state, cut);
    case MeasureKind::eof:
      return entropy_pure(state, cut, EntropyFamily::von_neumann);
    case MeasureKind::renyi:
      return entropy_pure(state, cut, EntropyFamily::renyi, measure.param);
    case MeasureKind::tsallis:
      return entropy_pure(state, cut, EntropyFamily::tsallis, measure.param);
  }
  throw InternalConsistencyError("unknown measure kind");
}

}  // namespace monolab
