// Command-line surface: measure evaluation, exponent scans, power
// estimation, and recorded reference experiments, all emitting
// deterministic JSON reports (and CSV for scan tables).
//
// Exit codes: 0 success, 2 usage/parse, 3 capability, 4 I/O, 5 exponent
// bracket does not straddle the transition.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monolab/errors.hpp"
#include "monolab/io.hpp"
#include "monolab/measures.hpp"
#include "monolab/monogamy.hpp"
#include "monolab/reports.hpp"
#include "monolab/reproduce.hpp"
#include "monolab/special_states.hpp"
#include "monolab/state_ops.hpp"
#include "monolab/version.hpp"

namespace {

using monolab::Bipartition;
using monolab::Direction;
using monolab::DomainError;
using monolab::MeasureSpec;
using monolab::QuantumState;
using monolab::RandomSpec;
using monolab::RunReport;
using monolab::SamplingConfig;
using monolab::SplitSpec;
using monolab::SystemDims;

struct CommonArgs {
  std::uint64_t seed = 1;
  std::uint64_t index = 0;
  int samples = 0;       // 0 = auto (5000 closed-form, 200 roof-backed)
  int budget = -1;       // -1 = command default; explicit 0 is passed through
  double tol = 0.0;      // 0 = command default
  std::string out_path;
  bool json = false;
};

struct StateArgs {
  std::string state_path;
  int ghz = 0;
  int w = 0;
  std::string haar_dims;
};

std::string join_command(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

QuantumState resolve_state(const StateArgs& s, const CommonArgs& common,
                           std::optional<RandomSpec>* draw) {
  const int sources = (!s.state_path.empty() ? 1 : 0) + (s.ghz > 0 ? 1 : 0) +
                      (s.w > 0 ? 1 : 0) + (!s.haar_dims.empty() ? 1 : 0);
  if (sources != 1)
    throw DomainError(
        "need exactly one state source: --state, --ghz, --w or --haar");
  if (draw) draw->reset();
  if (!s.state_path.empty()) return monolab::load_state_file(s.state_path);
  if (s.ghz > 0) return monolab::ghz_state(s.ghz);
  if (s.w > 0) return monolab::w_state(s.w);
  SystemDims dims = SystemDims::parse(s.haar_dims);
  RandomSpec spec;
  spec.master_seed = common.seed;
  spec.sample_index = common.index;
  spec.kind = RandomSpec::Kind::haar_pure;
  if (draw) *draw = spec;
  return monolab::sample_state(dims, spec);
}

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos
                                          ? std::string::npos
                                          : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw DomainError("bad --grid '" + text + "': expected lo:hi:step");
  double lo = 0, hi = 0, step = 0;
  try {
    lo = std::stod(text.substr(0, first));
    hi = std::stod(text.substr(first + 1, second - first - 1));
    step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw DomainError("bad --grid '" + text + "': non-numeric field");
  }
  if (!(step > 0.0)) throw DomainError("bad --grid: step must be positive");
  if (hi < lo) throw DomainError("bad --grid: empty range (hi < lo)");
  std::vector<double> grid;
  for (double x = lo; x <= hi + 1e-12; x += step) grid.push_back(x);
  if (grid.empty()) throw DomainError("bad --grid: no exponents in range");
  return grid;
}

// Measures whose sharing terms need the numeric roof on one-vs-rest
// three-qubit geometry get the smaller default sample budget.
bool roof_backed_on(const MeasureSpec& measure, const SystemDims& dims,
                    std::uint64_t seed) {
  RandomSpec spec;
  spec.master_seed = seed;
  auto probe = monolab::sample_state(dims, spec);
  std::vector<int> rest;
  for (int k = 1; k < dims.count(); ++k) rest.push_back(k);
  if (monolab::needs_roof(measure, probe, Bipartition{{0}, rest})) return true;
  auto marginal = monolab::reduced_state(probe, {0, 1});
  return monolab::needs_roof(measure, marginal, Bipartition{{0}, {1}});
}

void emit(RunReport report, const CommonArgs& common,
          const std::string& human_text, const std::string& csv = "") {
  report.tool = monolab::kToolName;
  report.version = monolab::kToolVersion;
  const auto j = monolab::run_report_to_json(report);
  if (!common.out_path.empty()) {
    const bool want_csv = !csv.empty();
    monolab::write_text_file_atomic(common.out_path,
                                    want_csv ? csv : j.dump(2) + "\n");
  }
  if (common.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human_text;
}

int run_measure(const StateArgs& state_args, const CommonArgs& common,
                const std::string& measure_text, const std::string& cut_text,
                const std::string& split_text, double alpha,
                const std::string& command) {
  const MeasureSpec measure = MeasureSpec::parse(measure_text);
  std::optional<RandomSpec> draw;
  QuantumState state = resolve_state(state_args, common, &draw);
  monolab::EvalOptions eval;
  eval.seed = common.seed;
  if (common.budget >= 0) eval.budget.restarts = common.budget;

  RunReport report;
  report.command = command;
  report.master_seed = common.seed;
  const auto t0 = std::chrono::steady_clock::now();
  std::string text;

  if (!split_text.empty()) {
    auto split = SplitSpec::parse(split_text);
    auto res = monolab::residual(measure, alpha, state, split, eval);
    if (draw) res.state_ref.draw = draw;
    report.payload_kind = "residual_report";
    report.payload = monolab::residual_report_json(res);
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "residual = %.12g (lhs %.12g, rhs sum %.12g) for %s at "
                  "exponent %g over split %s\n",
                  res.residual, res.lhs, res.lhs - res.residual,
                  measure.to_string().c_str(), alpha,
                  split.to_string().c_str());
    text = buf;
  } else {
    if (cut_text.empty())
      throw DomainError("measure needs --cut (value) or --split (residual)");
    auto cut = Bipartition::parse(cut_text);
    auto value = monolab::evaluate(measure, state, cut, eval);
    report.payload_kind = "measure_value";
    report.payload = monolab::measure_value_json(measure, value);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s = %.12g  [%s]\n",
                  measure.to_string().c_str(), value.value,
                  monolab::eval_method_name(value.method));
    text = buf;
    if (value.roof) {
      std::snprintf(buf, sizeof(buf),
                    "roof: spread %.3e, %d restarts converged, cardinality "
                    "%d\n",
                    value.roof->spread, value.roof->restarts_converged,
                    value.roof->cardinality);
      text += buf;
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  emit(std::move(report), common, text);
  return 0;
}

int run_scan(const CommonArgs& common, const std::string& measure_text,
             const std::string& dims_text, const std::string& grid_text,
             const std::string& command) {
  const MeasureSpec measure = MeasureSpec::parse(measure_text);
  if (grid_text.empty()) throw DomainError("scan needs a --grid lo:hi:step");
  const auto grid = parse_grid(grid_text);
  const SystemDims dims = SystemDims::parse(dims_text);
  const Direction dir =
      measure.assisted ? Direction::polygamy : Direction::monogamy;

  monolab::EvalOptions eval;
  eval.seed = common.seed;
  SamplingConfig sampling;
  sampling.dims = dims;
  sampling.master_seed = common.seed;
  sampling.n_samples = common.samples > 0
                           ? common.samples
                           : (roof_backed_on(measure, dims, common.seed)
                                  ? 200
                                  : 5000);
  sampling.adversarial_iterations = common.budget >= 0 ? common.budget : 300;

  RunReport report;
  report.command = command;
  report.master_seed = common.seed;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<monolab::ScanRow> rows;
  for (double exponent : grid) {
    auto worst = monolab::check_inequality(measure, exponent, sampling, dir,
                                           eval);
    rows.push_back({exponent, worst.residual, worst.state_ref.hash});
  }
  report.payload_kind = "scan_table";
  report.payload = monolab::scan_table_json(measure, dir, rows);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const std::string csv = monolab::scan_table_csv(rows);
  emit(std::move(report), common, csv, csv);
  return 0;
}

int run_estimate(const CommonArgs& common, const std::string& measure_text,
                 const std::string& dims_text, const std::string& command) {
  const MeasureSpec measure = MeasureSpec::parse(measure_text);
  const SystemDims dims = SystemDims::parse(dims_text);
  const Direction dir =
      measure.assisted ? Direction::polygamy : Direction::monogamy;

  monolab::EvalOptions eval;
  eval.seed = common.seed;
  monolab::PowerConfig config;
  config.sampling.dims = dims;
  config.sampling.master_seed = common.seed;
  config.sampling.n_samples =
      common.samples > 0 ? common.samples
                         : (roof_backed_on(measure, dims, common.seed) ? 200
                                                                       : 5000);
  if (common.budget >= 0) config.sampling.adversarial_iterations = common.budget;
  if (common.tol > 0) config.bisect_tol = common.tol;

  RunReport report;
  report.command = command;
  report.master_seed = common.seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto estimate =
      dir == Direction::monogamy
          ? monolab::estimate_monogamy_power(measure, dims, config, eval)
          : monolab::estimate_polygamy_power(measure, dims, config, eval);
  report.payload_kind = "power_estimate";
  report.payload = monolab::power_estimate_json(measure, estimate);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  char buf[220];
  std::snprintf(buf, sizeof(buf),
                "%s power of %s: %.4f (bracket [%.4f, %.4f], fail tol %.0e, "
                "%d samples)\n",
                monolab::direction_name(estimate.kind),
                measure.to_string().c_str(), estimate.estimate,
                estimate.bracket_lo, estimate.bracket_hi, estimate.fail_tol,
                estimate.samples_used);
  emit(std::move(report), common, buf);
  return 0;
}

int run_reproduce(const CommonArgs& common, const std::string& target,
                  const std::string& command) {
  monolab::ReproduceBudget budget;
  budget.eval.seed = common.seed;
  if (common.samples > 0) {
    budget.closed_samples = common.samples;
    budget.roof_samples = common.samples;
  }
  if (common.budget >= 0) budget.adversarial_iterations = common.budget;

  RunReport report;
  report.command = command;
  report.master_seed = common.seed;
  const auto t0 = std::chrono::steady_clock::now();
  auto outcome = monolab::reproduce_target(target, common.seed, budget);
  report.payload_kind = "reproduce_" + outcome.target;
  report.payload = outcome.payload;
  report.payload["target"] = outcome.target;
  report.payload["seed"] = common.seed;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  emit(std::move(report), common, outcome.text);
  return outcome.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for monogamy and polygamy of "
               "entanglement measures"};
  app.set_version_flag("--version", monolab::kToolVersion);
  app.require_subcommand(1);

  CommonArgs common;
  StateArgs state_args;
  std::string measure_text, cut_text, split_text, dims_text = "2,2,2";
  std::string grid_text, target;
  double alpha = 1.0;

  auto add_common = [&](CLI::App* cmd, bool with_samples) {
    cmd->add_option("--seed", common.seed, "master seed (default 1)");
    if (with_samples)
      cmd->add_option("--samples", common.samples,
                      "sample count (default: 5000 closed-form, 200 "
                      "roof-backed)");
    cmd->add_option("--budget", common.budget,
                    "optimizer budget: roof restarts for measure, "
                    "refinement iterations elsewhere");
    cmd->add_option("--out", common.out_path, "write the report here "
                    "(JSON; CSV for scan)");
    cmd->add_flag("--json", common.json, "print the full JSON report");
  };

  auto* measure_cmd = app.add_subcommand(
      "measure", "evaluate a measure value or a single sharing residual");
  measure_cmd->add_option("--state", state_args.state_path,
                          "state file (JSON)");
  measure_cmd->add_option("--ghz", state_args.ghz,
                          "flat n-qubit superposition |0...0> + |1...1>");
  measure_cmd->add_option("--w", state_args.w,
                          "single-excitation n-qubit state");
  measure_cmd->add_option("--haar", state_args.haar_dims,
                          "dims like 2,2,2: seeded random pure state");
  measure_cmd->add_option("--index", common.index,
                          "sample index within the seeded stream");
  measure_cmd->add_option("--measure", measure_text, "measure text form")
      ->required();
  measure_cmd->add_option("--cut", cut_text, "bipartition like 0|1,2");
  measure_cmd->add_option("--split", split_text,
                          "focus|group|group... for a sharing residual");
  measure_cmd->add_option("--alpha", alpha,
                          "outer exponent for the residual (default 1)");
  add_common(measure_cmd, false);

  auto* scan_cmd = app.add_subcommand(
      "scan", "worst sharing residual per exponent over seeded states");
  scan_cmd->add_option("--measure", measure_text, "measure text form")
      ->required();
  scan_cmd->add_option("--haar", dims_text,
                       "system dims (default 2,2,2)");
  scan_cmd->add_option("--grid", grid_text, "exponent grid lo:hi:step")
      ->required();
  add_common(scan_cmd, true);

  auto* est_cmd = app.add_subcommand(
      "estimate-power",
      "bisect the exponent where the sharing inequality flips");
  est_cmd->add_option("--measure", measure_text,
                      "plain measure: monogamy power; assisted (a:): "
                      "polygamy power")
      ->required();
  est_cmd->add_option("--haar", dims_text, "system dims (default 2,2,2)");
  est_cmd->add_option("--tol", common.tol,
                      "bisection tolerance (default 0.02)");
  add_common(est_cmd, true);

  auto* rep_cmd = app.add_subcommand(
      "reproduce", "rerun a recorded reference experiment");
  rep_cmd->add_option("target", target,
                      "examples | table1 | table2 | theorem2 | conjecture")
      ->required();
  add_common(rep_cmd, true);

  try {
    app.parse(argc, argv);
    const std::string command = join_command(argc, argv);
    if (measure_cmd->parsed())
      return run_measure(state_args, common, measure_text, cut_text,
                         split_text, alpha, command);
    if (scan_cmd->parsed())
      return run_scan(common, measure_text, dims_text, grid_text, command);
    if (est_cmd->parsed())
      return run_estimate(common, measure_text, dims_text, command);
    if (rep_cmd->parsed()) return run_reproduce(common, target, command);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const monolab::BracketError& e) {
    std::cerr << "bracket error: " << e.what()
              << "\nhint: " << e.extend_hint << "\n";
    return 5;
  } catch (const monolab::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const monolab::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
