#include "monolab/reproduce.hpp"

#include <cmath>
#include <cstdio>

#include "monolab/errors.hpp"
#include "monolab/measures_pure.hpp"
#include "monolab/monogamy.hpp"
#include "monolab/ppt.hpp"
#include "monolab/reports.hpp"
#include "monolab/rng.hpp"
#include "monolab/state_ops.hpp"

namespace monolab {

namespace {

using nlohmann::ordered_json;

// Reference values recorded alongside the example state: one-vs-rest
// concurrence 0.9798, one pair concurrence 0.5656, other pair separable.
constexpr double kReferenceFull = 0.9798;
constexpr double kReferencePair = 0.5656;
constexpr double kReferenceMatchTol = 5e-4;

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

struct SpotRowSpec {
  const char* measure;
  double exponent;
  bool roof_backed;
  double tol;
};

ordered_json run_spot_rows(const std::vector<SpotRowSpec>& specs,
                           Direction dir, std::uint64_t seed,
                           const ReproduceBudget& budget, bool* all_passed,
                           std::string* text) {
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& spec = specs[k];
    const MeasureSpec measure = MeasureSpec::parse(spec.measure);
    SamplingConfig sampling;
    sampling.dims = SystemDims({2, 2, 2});
    sampling.n_samples =
        spec.roof_backed ? budget.roof_samples : budget.closed_samples;
    sampling.master_seed = derive_seed(seed, {static_cast<std::uint64_t>(k)});
    // Refinement evaluates the objective thousands of times; with roofs in
    // the loop that is hours, so roof-backed rows are sweep-only.
    sampling.adversarial_iterations =
        spec.roof_backed ? 0 : budget.adversarial_iterations;
    sampling.exec = budget.eval.exec;
    auto report = check_inequality(measure, spec.exponent, sampling, dir,
                                   budget.eval);
    const bool pass = dir == Direction::monogamy
                          ? report.residual >= -spec.tol
                          : report.residual <= spec.tol;
    if (!pass) *all_passed = false;

    ordered_json row;
    row["measure"] = measure.to_string();
    row["exponent"] = spec.exponent;
    row["samples"] = sampling.n_samples;
    row["adversarial_iterations"] = sampling.adversarial_iterations;
    row["seed"] = sampling.master_seed;
    row["tolerance"] = spec.tol;
    row["worst_residual"] = report.residual;
    row["witness_id"] = report.state_ref.hash;
    row["pass"] = pass;
    rows.push_back(std::move(row));

    *text += "  ";
    *text += measure.to_string();
    *text += fmt(" at exponent %g: worst residual %.3e ", spec.exponent,
                 report.residual);
    *text += pass ? "[pass]\n" : "[FAIL]\n";
  }
  return rows;
}

ReproduceOutcome reproduce_examples() {
  ReproduceOutcome out;
  out.target = "examples";
  auto psi = recorded_example_state();

  ordered_json orientations = ordered_json::array();
  bool any_match = false;
  out.text =
      "recorded example state on three qubits, every focus orientation\n"
      "reference triple: one-vs-rest C = 0.9798, first-pair C = 0.5656, "
      "other pair separable\n";

  for (int focus = 0; focus < 3; ++focus) {
    std::vector<int> others;
    for (int k = 0; k < 3; ++k)
      if (k != focus) others.push_back(k);
    const double c_full =
        concurrence_pure(psi, Bipartition{{focus}, others});

    struct Pair {
      int partner;
      double c;
      bool ppt;
    };
    std::vector<Pair> pairs;
    for (int partner : others) {
      std::vector<int> keep{focus, partner};
      std::sort(keep.begin(), keep.end());
      auto marginal = reduced_state(psi, keep);
      pairs.push_back(
          {partner, concurrence_2q(marginal), is_ppt_separable(marginal)});
    }

    // Both partner orderings: which pair plays the "0.5656" role.
    for (int first : {0, 1}) {
      const Pair& b1 = pairs[static_cast<std::size_t>(first)];
      const Pair& b2 = pairs[static_cast<std::size_t>(1 - first)];
      const bool b2_separable = b2.c <= 1e-9 && b2.ppt;
      const bool matches =
          std::abs(c_full - kReferenceFull) <= kReferenceMatchTol &&
          std::abs(b1.c - kReferencePair) <= kReferenceMatchTol &&
          b2_separable;
      any_match = any_match || matches;

      ordered_json row;
      row["focus"] = focus;
      row["b1"] = b1.partner;
      row["b2"] = b2.partner;
      row["c_one_vs_rest"] = c_full;
      row["c_pair_b1"] = b1.c;
      row["c_pair_b2"] = b2.c;
      row["b2_ppt_separable"] = b2.ppt;
      row["matches_reference"] = matches;
      orientations.push_back(std::move(row));

      out.text += fmt("  focus %g", static_cast<double>(focus));
      out.text += fmt(" (b1=%g, b2=%g):", static_cast<double>(b1.partner),
                      static_cast<double>(b2.partner));
      out.text += fmt(" C(full) = %.6f, C(b1 pair) = %.6f, C(b2 pair) = %.6f",
                      c_full, b1.c, b2.c);
      out.text += b2_separable ? ", b2 pair separable" : "";
      out.text += matches ? " -> matches reference\n" : "\n";
    }
  }

  out.payload["state"] = ordered_json{
      {"dims", psi.dims().dims()}, {"hash", psi.hash_hex()}};
  out.payload["reference"] =
      ordered_json{{"c_one_vs_rest", kReferenceFull},
                   {"c_pair", kReferencePair},
                   {"other_pair", "separable"},
                   {"match_tolerance", kReferenceMatchTol}};
  out.payload["orientations"] = std::move(orientations);
  out.payload["discrepancy_flagged"] = !any_match;
  out.all_passed = true;  // informational: the discrepancy is the finding
  out.text += any_match
                  ? "at least one orientation matches the reference triple\n"
                  : "discrepancy: no orientation reproduces the full "
                    "reference triple; values above are the brute-force "
                    "results per orientation\n";
  return out;
}

ReproduceOutcome reproduce_table(const std::string& target, Direction dir,
                                 const std::vector<SpotRowSpec>& specs,
                                 std::uint64_t seed,
                                 const ReproduceBudget& budget) {
  ReproduceOutcome out;
  out.target = target;
  out.text = target + " spot checks (" +
             (dir == Direction::monogamy ? std::string("monogamy")
                                         : std::string("polygamy")) +
             " direction, three qubits):\n";
  out.payload["direction"] = direction_name(dir);
  out.payload["rows"] =
      run_spot_rows(specs, dir, seed, budget, &out.all_passed, &out.text);
  out.payload["all_passed"] = out.all_passed;
  return out;
}

ReproduceOutcome reproduce_theorem2(std::uint64_t /*seed*/,
                                    const ReproduceBudget& budget) {
  ReproduceOutcome out;
  out.target = "theorem2";
  const std::vector<double> grid{0.5, 1.0, 2.0, 4.0};
  const int n_parties = 4;
  out.text =
      "shared-basis witness: flat 4-qubit state, one-vs-rest value 1 with "
      "separable two-qubit marginals at every exponent\n";

  ordered_json tables = ordered_json::array();
  for (const char* text_form : {"C", "N", "Ef"}) {
    const MeasureSpec measure = MeasureSpec::parse(text_form);
    auto rows =
        shared_basis_witness_table(measure, grid, n_parties, budget.eval);
    bool pass = true;
    for (const auto& row : rows) {
      if (std::abs(row.lhs - 1.0) > 1e-9) pass = false;
      for (double t : row.rhs_terms)
        if (std::abs(t) > 1e-9) pass = false;
      for (bool flag : row.rhs_ppt_separable)
        if (!flag) pass = false;
    }
    if (!pass) out.all_passed = false;
    ordered_json entry = witness_table_json(measure, n_parties, rows);
    entry["pass"] = pass;
    tables.push_back(std::move(entry));
    out.text += "  ";
    out.text += measure.to_string();
    out.text += pass ? ": lhs 1, all marginal terms 0 and PPT-separable "
                       "[pass]\n"
                     : ": unexpected values [FAIL]\n";
  }
  out.payload["grid"] = grid;
  out.payload["tables"] = std::move(tables);
  out.payload["all_passed"] = out.all_passed;
  return out;
}

ReproduceOutcome reproduce_conjecture(std::uint64_t seed,
                                      const ReproduceBudget& budget) {
  ReproduceOutcome out;
  out.target = "conjecture";
  const double epsilon = 1e-3;
  const double ceiling = 0.05;
  out.text = fmt(
      "constrained disturbance scan (epsilon %.0e): saturating the "
      "first-pair term should leave nothing for the second pair\n", epsilon);

  ordered_json scans = ordered_json::array();
  std::uint64_t tag = 0;
  for (const char* text_form : {"C", "N"}) {
    const MeasureSpec measure = MeasureSpec::parse(text_form);
    ScanBudget scan_budget;  // defaults
    auto result = disturbance_scan(measure, SystemDims({2, 2, 2}), epsilon,
                                   scan_budget, derive_seed(seed, {tag++}),
                                   budget.eval);
    const bool pass = result.best_violation <= ceiling;
    if (!pass) out.all_passed = false;
    ordered_json entry = disturbance_scan_json(result);
    entry["ceiling"] = ceiling;
    entry["pass"] = pass;
    scans.push_back(std::move(entry));
    out.text += "  ";
    out.text += measure.to_string();
    out.text += fmt(": best constrained violation %.3e (gap %.3e) ",
                    result.best_violation, result.constraint_gap);
    out.text += pass ? "[pass]\n" : "[FAIL]\n";
  }
  out.payload["epsilon"] = epsilon;
  out.payload["ceiling"] = ceiling;
  out.payload["scans"] = std::move(scans);
  out.payload["all_passed"] = out.all_passed;
  return out;
}

}  // namespace

QuantumState recorded_example_state() {
  Vec amp = Vec::Zero(8);
  amp(4) = std::sqrt(0.4);  // |100>
  amp(6) = std::sqrt(0.4);  // |110>
  amp(7) = std::sqrt(0.2);  // |111>
  return QuantumState::pure(SystemDims({2, 2, 2}), amp);
}

ReproduceOutcome reproduce_target(const std::string& target,
                                  std::uint64_t seed,
                                  const ReproduceBudget& budget) {
  if (budget.closed_samples < 1 || budget.roof_samples < 1)
    throw DomainError("reproduce budgets must be positive");
  if (target == "examples") return reproduce_examples();
  if (target == "table1") {
    const std::vector<SpotRowSpec> rows{
        {"C", 2.0, false, 1e-9},     {"N", 2.0, false, 1e-9},
        {"Ef", std::sqrt(2.0), false, 1e-6}, {"Ef", 2.0, false, 1e-6},
        {"tangle", 1.0, false, 1e-9}, {"Ncr", 2.0, true, 5e-3},
        {"renyi:2", 1.0, true, 5e-3}, {"tsallis:2", 1.0, true, 5e-3},
    };
    return reproduce_table(target, Direction::monogamy, rows, seed, budget);
  }
  if (target == "table2") {
    const std::vector<SpotRowSpec> rows{
        {"a:C", 2.0, false, 5e-3},   {"a:N", 2.0, true, 5e-3},
        {"a:Ef", 1.0, true, 5e-3},   {"a:tangle", 1.0, true, 5e-3},
        {"a:tsallis:2", 1.0, true, 5e-3},
    };
    return reproduce_table(target, Direction::polygamy, rows, seed, budget);
  }
  if (target == "theorem2") return reproduce_theorem2(seed, budget);
  if (target == "conjecture") return reproduce_conjecture(seed, budget);
  throw DomainError("unknown reproduce target '" + target +
                    "'; expected examples, table1, table2, theorem2 or "
                    "conjecture");
}

}  // namespace monolab
