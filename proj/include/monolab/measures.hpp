#pragma once

#include <optional>

#include "monolab/convex_roof.hpp"
#include "monolab/measure_spec.hpp"
#include "monolab/measures_pure.hpp"
#include "monolab/quantum_state.hpp"
#include "monolab/split_spec.hpp"

namespace monolab {

enum class EvalMethod { closed_form, pure_state_formula, convex_roof_numeric };

struct RoofSummary {
  double spread = 0.0;
  int restarts_converged = 0;
  int cardinality = 0;
  int best_restart = 0;
};

struct MeasureValue {
  double value = 0.0;
  EvalMethod method = EvalMethod::closed_form;
  std::optional<RoofSummary> roof;
};

struct EvalOptions {
  RoofBudget budget{};
  int cardinality = 0;  // 0 selects the rank^2 default
  std::uint64_t seed = 0;
  Exec exec = default_exec();
};

const char* eval_method_name(EvalMethod method);

// Uniform measure evaluation across a cut of a pure or mixed state.
//
// Routing: pure states use the pure-state formulas; mixed two-qubit states
// use closed forms where they exist (Wootters concurrence and its square,
// sum-of-lambdas assisted concurrence, formation entanglement, trace-norm
// negativity); every other mixed case runs the numeric roof (infimum, or
// supremum when assisted).
//
// Exponent semantics: the plain form powers the evaluated measure,
// value = E(rho)^exponent. The tilde form instead averages powered
// pure-state values inside the roof. The two agree on pure states and
// differ on mixed ones.
MeasureValue evaluate(const MeasureSpec& measure, const QuantumState& state,
                      const Bipartition& cut, const EvalOptions& options = {});

// True when evaluate() would need the numeric roof for this combination.
bool needs_roof(const MeasureSpec& measure, const QuantumState& state,
                const Bipartition& cut);

}  // namespace monolab
