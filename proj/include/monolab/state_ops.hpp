#pragma once

#include <Eigen/Dense>
#include <vector>

#include "monolab/quantum_state.hpp"

namespace monolab {

Mat kron(const Mat& a, const Mat& b);
Vec kron_vec(const Vec& a, const Vec& b);

// Partial trace over the complement of `keep` (subsystem indices, any order;
// duplicates rejected). Output factors are the kept ones in ascending order.
QuantumState reduced_state(const QuantumState& state, const std::vector<int>& keep);

// Transpose on one tensor factor. Pure inputs are promoted to projectors.
// The result is Hermitian but generally not positive, so it is returned as a
// plain matrix.
Mat partial_transpose(const QuantumState& state, int subsystem);

// Sum of absolute eigenvalues. Requires Hermitian input (tolerance 1e-10).
double trace_norm(const Mat& m);

// Reorders tensor factors; perm[k] = original index placed at position k.
QuantumState permute_subsystems(const QuantumState& state, const std::vector<int>& perm);

double purity(const Mat& rho);

// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Mat& m);

// Eigenvalues of a density matrix with |x| <= kEigClampTol snapped to zero;
// keeps downstream sqrt/log calls off tiny negatives.
Eigen::VectorXd clamped_spectrum(const Mat& rho);

}  // namespace monolab
