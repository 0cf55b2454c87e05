#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "monolab/parallel.hpp"
#include "monolab/quantum_state.hpp"

namespace monolab {

inline constexpr double kEnsembleWeightTol = 1e-10;
inline constexpr double kEnsembleDropTol = 1e-14;
inline constexpr double kEnsembleReconstructTol = 1e-8;
inline constexpr double kIsometryTol = 1e-10;
inline constexpr double kRoofBracketTol = 1e-9;

struct EnsembleMember {
  double weight = 0.0;
  QuantumState state;  // pure
};

// A pure-state ensemble of a density matrix: weights sum to one and the
// weighted projectors reconstruct the target.
struct Ensemble {
  std::vector<EnsembleMember> members;

  double average(const std::function<double(const QuantumState&)>& f) const;
  Mat reconstruct() const;
  void check_reconstructs(const Mat& rho,
                          double tol = kEnsembleReconstructTol) const;
};

// All ensembles of fixed rho arise from an isometric mixing of its
// eigendecomposition: |psi~_j> = sum_i mixing(j,i) sqrt(l_i) |v_i>.
// mixing is m x r with orthonormal columns, r = rank(rho); weights are the
// squared norms; members below kEnsembleDropTol are dropped.
Ensemble ensemble_from_mixing(const QuantumState& rho, const Mat& mixing);

enum class RoofMode { infimum, supremum };

struct RoofBudget {
  int restarts = 8;
  int iterations = 400;  // simplex iterations per refinement round
  int rounds = 3;        // refinement rounds with shrinking initial step
};

struct RoofProblem {
  RoofMode mode = RoofMode::infimum;
  std::function<double(const QuantumState&)> objective;  // on pure states
  int cardinality = 0;  // ensemble size m; 0 means default rank^2
  RoofBudget budget;
  std::uint64_t seed = 0;
  // Restarts are independent; results merge by a deterministic reduction,
  // so the parallel and serial paths return identical values.
  Exec exec = default_exec();
};

struct RoofResult {
  double value = 0.0;
  Ensemble ensemble;
  int restarts_converged = 0;
  double spread = 0.0;  // max - min over restart optima
  int best_restart = 0;
};

// Optimize the ensemble average of the objective over all decompositions of
// rho: infimum for convex-roof values, supremum for assisted values.
// The search runs a downhill simplex over a real chart of the isometry
// (a Hermitian generator exponentiated, first r columns) from seeded random
// starts; restart 0 always starts at the eigendecomposition. Deterministic
// for fixed seed and budget.
RoofResult roof_optimize(const QuantumState& rho, const RoofProblem& problem);

}  // namespace monolab
