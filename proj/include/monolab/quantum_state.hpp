#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "monolab/system_dims.hpp"

namespace monolab {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-12;
// Eigenvalues this close to zero are clamped before measure evaluation.
inline constexpr double kEigClampTol = 1e-10;

// A pure state vector or density matrix over a tensor factorization.
// Immutable after construction; construction validates the invariants
// (unit norm for pure; Hermitian, PSD and unit trace for mixed).
class QuantumState {
 public:
  static QuantumState pure(SystemDims dims, Vec amplitudes);
  static QuantumState mixed(SystemDims dims, Mat rho);
  // Skips validation; for operation outputs that are valid by construction.
  static QuantumState mixed_trusted(SystemDims dims, Mat rho);

  bool is_pure() const { return pure_; }
  const SystemDims& dims() const { return dims_; }

  // Pure amplitudes; only valid when is_pure().
  const Vec& vector() const;
  // Density matrix (projector for pure states).
  Mat density() const;
  // Stored matrix; only valid when !is_pure().
  const Mat& matrix() const;

  // Same body reinterpreted over a coarser/finer factorization of equal
  // total dimension.
  QuantumState with_dims(SystemDims new_dims) const;

  // FNV-1a over the raw amplitude/matrix bytes; stable state identity.
  std::uint64_t byte_hash() const;
  std::string hash_hex() const;

 private:
  QuantumState(SystemDims dims, Vec v) : dims_(std::move(dims)), pure_(true), vec_(std::move(v)) {}
  QuantumState(SystemDims dims, Mat m) : dims_(std::move(dims)), pure_(false), mat_(std::move(m)) {}

  SystemDims dims_;
  bool pure_ = true;
  Vec vec_;
  Mat mat_;
};

}  // namespace monolab
