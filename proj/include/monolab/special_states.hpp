#pragma once

#include <vector>

#include "monolab/quantum_state.hpp"
#include "monolab/system_dims.hpp"

namespace monolab {

// |b> of an n-party register, b given per subsystem.
QuantumState basis_state(const SystemDims& dims, const std::vector<int>& b);

// (|00> + |11>)/sqrt(2) on 2x2.
QuantumState bell_state();

// (|0...0> + |1...1>)/sqrt(2) on n qubits.
QuantumState ghz_state(int n);

// (|10...0> + |01...0> + ... + |0...01>)/sqrt(n) on n qubits.
QuantumState w_state(int n);

// sum_i sqrt(lambda_i) |i...i> over k levels of n parties (n >= 3).
// Coefficients must be positive and sum to one; k must fit every local
// dimension.
QuantumState ghz_class_state(const SystemDims& dims,
                             const std::vector<double>& lambda);

}  // namespace monolab
