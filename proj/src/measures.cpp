#include "monolab/measures.hpp"

#include <cmath>

#include "monolab/errors.hpp"
#include "monolab/state_ops.hpp"

namespace monolab {

namespace {

const Bipartition kCut01{{0}, {1}};

bool is_two_qubit(const QuantumState& state) {
  const auto& d = state.dims();
  return d.count() == 2 && d.dim(0) == 2 && d.dim(1) == 2;
}

// Closed forms for the mixed bipartite view, if one exists for this
// measure/flag combination. Returns nullopt when the numeric roof is needed.
std::optional<double> mixed_closed_form(const MeasureSpec& m,
                                        const QuantumState& bi) {
  const bool two_qubit = is_two_qubit(bi);
  if (!m.assisted && !m.tilde) {
    if (m.kind == MeasureKind::negativity)
      return std::pow(negativity(bi, kCut01), m.exponent);
    if (two_qubit) {
      switch (m.kind) {
        case MeasureKind::concurrence:
          return std::pow(concurrence_2q(bi), m.exponent);
        case MeasureKind::tangle: {
          const double c = concurrence_2q(bi);
          return std::pow(c * c, m.exponent);
        }
        case MeasureKind::eof:
          return std::pow(eof_2q(bi), m.exponent);
        default:
          break;
      }
    }
    return std::nullopt;
  }

  if (m.tilde && !m.assisted && two_qubit) {
    // Two-qubit roofs of powered concurrence are known exactly for powers
    // 1 and 2: both are achieved by the spin-flip-optimal decomposition.
    if (m.kind == MeasureKind::concurrence && m.exponent == 1.0)
      return concurrence_2q(bi);
    if (m.kind == MeasureKind::concurrence && m.exponent == 2.0) {
      const double c = concurrence_2q(bi);
      return c * c;
    }
    if (m.kind == MeasureKind::tangle && m.exponent == 1.0) {
      const double c = concurrence_2q(bi);
      return c * c;
    }
    if (m.kind == MeasureKind::eof && m.exponent == 1.0) return eof_2q(bi);
    return std::nullopt;
  }

  if (m.assisted && two_qubit && m.kind == MeasureKind::concurrence) {
    if (!m.tilde)  // (sup roof of C)^exponent
      return std::pow(concurrence_assistance_2q(bi), m.exponent);
    if (m.exponent == 1.0)  // sup roof of C^1
      return concurrence_assistance_2q(bi);
  }
  return std::nullopt;
}

}  // namespace

const char* eval_method_name(EvalMethod method) {
  switch (method) {
    case EvalMethod::closed_form: return "closed_form";
    case EvalMethod::pure_state_formula: return "pure_state_formula";
    case EvalMethod::convex_roof_numeric: return "convex_roof_numeric";
  }
  throw InternalConsistencyError("unknown eval method");
}

MeasureValue evaluate(const MeasureSpec& measure, const QuantumState& state,
                      const Bipartition& cut, const EvalOptions& options) {
  measure.validate();
  QuantumState bi = bipartite_view(state, cut);

  MeasureValue out;
  if (bi.is_pure()) {
    // Tilde and assisted both collapse to the plain value on a pure state:
    // the only ensemble is the singleton.
    const double base = pure_base_value(measure, bi, kCut01);
    out.value = std::pow(base, measure.exponent);
    out.method = EvalMethod::pure_state_formula;
    return out;
  }

  if (auto closed = mixed_closed_form(measure, bi)) {
    out.value = std::max(0.0, *closed);
    out.method = EvalMethod::closed_form;
    return out;
  }

  if (options.budget.restarts <= 0 || options.budget.iterations <= 0 ||
      options.budget.rounds <= 0)
    throw CapabilityError("evaluating '" + measure.to_string() +
                          "' on this mixed state has no closed form and the "
                          "roof budget is zero");

  RoofProblem problem;
  problem.mode = measure.assisted ? RoofMode::supremum : RoofMode::infimum;
  const double inner_power = measure.tilde ? measure.exponent : 1.0;
  problem.objective = [&measure, inner_power](const QuantumState& psi) {
    const double base = pure_base_value(measure, psi, kCut01);
    return inner_power == 1.0 ? base : std::pow(base, inner_power);
  };
  problem.cardinality = options.cardinality;
  problem.budget = options.budget;
  problem.seed = options.seed;
  problem.exec = options.exec;

  RoofResult roof = roof_optimize(bi, problem);
  const double outer_power = measure.tilde ? 1.0 : measure.exponent;
  out.value = std::max(
      0.0, outer_power == 1.0 ? roof.value : std::pow(roof.value, outer_power));
  out.method = EvalMethod::convex_roof_numeric;
  RoofSummary summary;
  summary.spread = roof.spread;
  summary.restarts_converged = roof.restarts_converged;
  summary.cardinality = static_cast<int>(roof.ensemble.members.size());
  summary.best_restart = roof.best_restart;
  out.roof = summary;
  return out;
}

bool needs_roof(const MeasureSpec& measure, const QuantumState& state,
                const Bipartition& cut) {
  QuantumState bi = bipartite_view(state, cut);
  if (bi.is_pure()) return false;
  return !mixed_closed_form(measure, bi).has_value();
}

}  // namespace monolab
