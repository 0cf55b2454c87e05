#include "monolab/quantum_state.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "monolab/errors.hpp"
#include "monolab/rng.hpp"

namespace monolab {

QuantumState QuantumState::pure(SystemDims dims, Vec amplitudes) {
  if (amplitudes.size() != dims.total())
    throw DomainError("QuantumState: amplitude vector has size " +
                      std::to_string(amplitudes.size()) + ", expected " +
                      std::to_string(dims.total()));
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kNormTol)
    throw DomainError("QuantumState: pure state norm deviates from 1 by " +
                      std::to_string(std::abs(norm - 1.0)));
  return QuantumState(std::move(dims), std::move(amplitudes));
}

QuantumState QuantumState::mixed(SystemDims dims, Mat rho) {
  const int d = dims.total();
  if (rho.rows() != d || rho.cols() != d)
    throw DomainError("QuantumState: density matrix must be " + std::to_string(d) +
                      "x" + std::to_string(d));
  const double herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermTol)
    throw DomainError("QuantumState: density matrix not Hermitian (deviation " +
                      std::to_string(herm_dev) + ")");
  const double trace_dev = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  if (trace_dev > kTraceTol)
    throw DomainError("QuantumState: density matrix trace deviates from 1 by " +
                      std::to_string(trace_dev));
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw DomainError("QuantumState: density matrix has eigenvalue " +
                      std::to_string(es.eigenvalues().minCoeff()));
  return QuantumState(std::move(dims), std::move(rho));
}

QuantumState QuantumState::mixed_trusted(SystemDims dims, Mat rho) {
  return QuantumState(std::move(dims), std::move(rho));
}

const Vec& QuantumState::vector() const {
  if (!pure_) throw DomainError("QuantumState: mixed state has no amplitude vector");
  return vec_;
}

Mat QuantumState::density() const {
  if (pure_) return vec_ * vec_.adjoint();
  return mat_;
}

const Mat& QuantumState::matrix() const {
  if (pure_) throw DomainError("QuantumState: pure state stores no density matrix");
  return mat_;
}

QuantumState QuantumState::with_dims(SystemDims new_dims) const {
  if (new_dims.total() != dims_.total())
    throw DomainError("QuantumState: cannot reinterpret dims of different total");
  if (pure_) return QuantumState(std::move(new_dims), vec_);
  return QuantumState(std::move(new_dims), mat_);
}

std::uint64_t QuantumState::byte_hash() const {
  std::uint64_t h = fnv1a_bytes("pure", pure_ ? 4 : 0);
  for (int d : dims_.dims()) {
    std::int64_t v = d;
    h = fnv1a_bytes(&v, sizeof(v), h);
  }
  if (pure_) return fnv1a_bytes(vec_.data(), sizeof(Complex) * static_cast<std::size_t>(vec_.size()), h);
  return fnv1a_bytes(mat_.data(), sizeof(Complex) * static_cast<std::size_t>(mat_.size()), h);
}

std::string QuantumState::hash_hex() const {
  std::ostringstream out;
  out << std::hex << byte_hash();
  return out.str();
}

}  // namespace monolab
