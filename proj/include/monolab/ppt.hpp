#pragma once

#include "monolab/quantum_state.hpp"

namespace monolab {

inline constexpr double kPptTol = 1e-9;

// Smallest eigenvalue of the partial transpose over the first subsystem of a
// two-party state.
double partial_transpose_min_eig(const QuantumState& state);

// Positive-partial-transpose separability test. Decisive only on 2x2 and
// 2x3 / 3x2 systems; anything else raises UnsupportedDimsError.
bool is_ppt_separable(const QuantumState& state, double tol = kPptTol);

}  // namespace monolab
