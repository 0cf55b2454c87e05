#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolab/measures.hpp"
#include "monolab/random_states.hpp"
#include "monolab/split_spec.hpp"

namespace monolab {

// Identity of the state a report was computed from: content hash plus, for
// sampled states, the draw that regenerates it.
struct StateRef {
  std::string hash;
  std::optional<RandomSpec> draw;
};

// One evaluation of the powered sharing inequality
//   E^a(focus | all partners)  vs  sum_i E^a(focus | partner_i):
// residual = lhs - sum(rhs). Nonnegative residual means the monogamy
// direction holds; nonpositive means the polygamy direction holds.
struct ResidualReport {
  MeasureSpec measure;
  double exponent = 1.0;
  SplitSpec split;
  double lhs = 0.0;
  std::vector<double> rhs_terms;
  double residual = 0.0;
  StateRef state_ref;
};

// lhs/rhs terms are pow(evaluate(measure, ...), exponent): the outer
// exponent composes with whatever power the measure itself carries.
ResidualReport residual(const MeasureSpec& measure, double exponent,
                        const QuantumState& state, const SplitSpec& split,
                        const EvalOptions& options = {});

// Same construction; requires measure.assisted and reads the result against
// the polygamy direction (holds iff residual <= 0).
ResidualReport polygamy_residual(const MeasureSpec& measure, double exponent,
                                 const QuantumState& state,
                                 const SplitSpec& split,
                                 const EvalOptions& options = {});

enum class Direction { monogamy, polygamy };

enum class StateFamily { haar_pure, induced_mixed, product_pure };

struct SamplingConfig {
  SystemDims dims;
  int n_samples = 5000;
  std::uint64_t master_seed = 0;
  int adversarial_iterations = 300;
  StateFamily family = StateFamily::haar_pure;
  int mixed_rank = 2;            // used by induced_mixed only
  SplitSpec split;               // empty partners = focus 0 vs each other party
  Exec exec = default_exec();
};

// Worst-case residual over a seeded sample sweep, then sharpened by a
// derivative-free search over pure states from the worst sample (pure
// families only). Deterministic for fixed seed.
ResidualReport check_inequality(const MeasureSpec& measure, double exponent,
                                const SamplingConfig& sampling, Direction dir,
                                const EvalOptions& options = {});

struct PowerConfig {
  double bracket_lo = 0.25;
  double bracket_hi = 8.0;
  double bisect_tol = 0.02;
  SamplingConfig sampling;
  // Residuals within fail_tol of zero count as passing. Zero selects
  // automatically: 1e-6 when every term is closed-form, 5e-3 when any term
  // is roof-backed.
  double fail_tol = 0.0;
};

struct PowerEstimate {
  Direction kind = Direction::monogamy;
  double estimate = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  ResidualReport worst_witness;  // from the failing side of the bracket
  int samples_used = 0;
  int adversarial_iterations = 0;
  std::uint64_t seed = 0;
  double fail_tol = 0.0;
};

// Bisection for the smallest exponent a making E^a monogamous over the
// sampled family: an exponent fails when some state (sampled or refined)
// has residual < -fail_tol. Estimate is upper-bound biased: sampling can
// only certify failures, never passes.
PowerEstimate estimate_monogamy_power(const MeasureSpec& measure,
                                      const SystemDims& dims,
                                      const PowerConfig& config,
                                      const EvalOptions& options = {});

// Dual bisection for the largest exponent b keeping the assisted measure
// polygamous (residual <= fail_tol everywhere).
PowerEstimate estimate_polygamy_power(const MeasureSpec& measure,
                                      const SystemDims& dims,
                                      const PowerConfig& config,
                                      const EvalOptions& options = {});

struct ScanBudget {
  int restarts = 8;
  int iterations = 400;
};

struct DisturbanceScanResult {
  MeasureSpec measure;
  double epsilon = 0.0;
  double best_violation = 0.0;  // max E(focus|partner2) under the constraint
  double constraint_gap = 0.0;  // |E(focus|both) - E(focus|partner1)| found
  StateRef witness;
  ScanBudget budget;
  std::uint64_t seed = 0;
};

// Searches tripartite pure states maximizing E(focus|partner2) subject to
// E(focus|both partners) = E(focus|partner1) within epsilon, via escalating
// quadratic penalties. A large best_violation would witness that saturating
// the inequality on one partner can still leave entanglement with the other.
DisturbanceScanResult disturbance_scan(const MeasureSpec& measure,
                                       const SystemDims& dims, double epsilon,
                                       const ScanBudget& budget,
                                       std::uint64_t seed,
                                       const EvalOptions& options = {});

struct SharedBasisWitnessRow {
  double exponent = 0.0;
  double lhs = 0.0;
  std::vector<double> rhs_terms;
  double rhs_sum = 0.0;
  std::vector<bool> rhs_ppt_separable;
  double residual = 0.0;
};

// The flat shared-Schmidt-basis state on n qubits: every two-party marginal
// is a diagonal separable mixture (value 0 for every implemented measure),
// yet the one-vs-rest value is 1, so no exponent makes the polygamy-direction
// bound hold. One row per grid exponent.
std::vector<SharedBasisWitnessRow> shared_basis_witness_table(
    const MeasureSpec& measure, const std::vector<double>& exponent_grid,
    int n_parties = 4, const EvalOptions& options = {});

struct PropertyCheckConfig {
  int n_samples = 100;
  std::uint64_t master_seed = 0;
  std::vector<double> exponent_grid;  // used by the sign-transfer checks
  Exec exec = default_exec();
};

struct PropertyReport {
  std::string check_id;
  int samples_total = 0;
  int samples_checked = 0;  // subset passing the per-state guard
  int violations = 0;
  double worst_margin = 0.0;  // most adverse signed slack observed
  bool pass = false;
  std::string detail;
  std::uint64_t seed = 0;
};

// Named property suites over seeded random states:
//   P1: monogamy sign transfer to larger exponents (pure tripartite).
//   P3: roof-backed squared-concurrence monogamy on mixed tripartite states.
//   P4: plain square dominated by the roof of squares (mixed two-qubit).
//   P5: polygamy sign transfer to smaller exponents (pure tripartite).
//   P7: assisted roof-backed polygamy on mixed tripartite states.
//   P8: assisted square dominated by the assisted roof of squares.
PropertyReport property_check(const std::string& check_id,
                              const PropertyCheckConfig& config,
                              const EvalOptions& options = {});

}  // namespace monolab
