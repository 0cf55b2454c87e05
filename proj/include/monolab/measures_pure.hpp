#pragma once

#include "monolab/measure_spec.hpp"
#include "monolab/quantum_state.hpp"
#include "monolab/split_spec.hpp"

namespace monolab {

// Closed-form measure evaluation: pure-state formulas for arbitrary cuts and
// the two-qubit mixed-state formulas. The uniform dispatcher that also covers
// numeric roofs lives in measures.hpp.

// View a multi-party state as a two-party one: the cut's first side becomes
// factor 0, the second side factor 1.
QuantumState bipartite_view(const QuantumState& state, const Bipartition& cut);

// sqrt(2 (1 - tr rho_a^2)) across the cut; pure input only.
double concurrence_pure(const QuantumState& state, const Bipartition& cut);

// Square roots of the eigenvalues of rho * (sy x sy) rho^* (sy x sy),
// descending. Computed through the Hermitian form
// sqrt(rho) * rho~ * sqrt(rho) for numerical stability.
Eigen::Vector4d spin_flip_lambdas(const QuantumState& rho2q);

// Wootters formula max{0, l1 - l2 - l3 - l4} on a 4-dim two-qubit state.
double concurrence_2q(const QuantumState& rho2q);

// l1 + l2 + l3 + l4: the ensemble-average supremum of two-qubit concurrence.
double concurrence_assistance_2q(const QuantumState& rho2q);

// Trace-norm negativity |rho^{T_a}|_1 - 1 across the cut; pure or mixed.
// Normalized so that it equals concurrence on two-qubit pure states.
double negativity(const QuantumState& state, const Bipartition& cut);

double binary_entropy(double x);  // base 2; 0 at the endpoints

// h((1 + sqrt(1 - c^2)) / 2) for c in [0, 1].
double eof_from_concurrence(double c);

// Formation entanglement of a two-qubit state via the concurrence formula.
double eof_2q(const QuantumState& rho2q);

enum class EntropyFamily { von_neumann, renyi, tsallis };

// Entanglement entropy of a pure state across the cut.
// renyi: log2(sum l^a) / (1 - a); tsallis: (1 - sum l^q) / (q - 1);
// parameter 1 routes both to von Neumann.
double entropy_pure(const QuantumState& state, const Bipartition& cut,
                    EntropyFamily family, double parameter = 1.0);

// Unpowered base value of a measure on a pure state across the cut.
// This is the roof objective: roofs average this (or its powers) over
// ensemble members.
double pure_base_value(const MeasureSpec& measure, const QuantumState& state,
                       const Bipartition& cut);

}  // namespace monolab
