#include "monolab/reports.hpp"

#include <cstdio>

namespace monolab {

namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const char* direction_name(Direction dir) {
  return dir == Direction::monogamy ? "monogamy" : "polygamy";
}

nlohmann::ordered_json run_report_to_json(const RunReport& report) {
  ordered_json j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["command"] = report.command;
  j["master_seed"] = report.master_seed;
  j["wall_seconds"] = report.wall_seconds;
  j["payload_kind"] = report.payload_kind;
  j["payload"] = report.payload;
  return j;
}

nlohmann::ordered_json state_ref_json(const StateRef& ref) {
  ordered_json j;
  j["hash"] = ref.hash;
  if (ref.draw) {
    j["draw"] = {{"master_seed", ref.draw->master_seed},
                 {"sample_index", ref.draw->sample_index},
                 {"kind", ref.draw->kind == RandomSpec::Kind::haar_pure
                              ? "haar_pure"
                              : "induced_mixed"},
                 {"rank", ref.draw->rank}};
  }
  return j;
}

nlohmann::ordered_json measure_value_json(const MeasureSpec& measure,
                                          const MeasureValue& value) {
  ordered_json j;
  j["measure"] = measure.to_string();
  j["value"] = value.value;
  j["method"] = eval_method_name(value.method);
  if (value.roof) {
    j["roof"] = {{"spread", value.roof->spread},
                 {"restarts_converged", value.roof->restarts_converged},
                 {"cardinality", value.roof->cardinality},
                 {"best_restart", value.roof->best_restart}};
  }
  return j;
}

nlohmann::ordered_json residual_report_json(const ResidualReport& report) {
  ordered_json j;
  j["measure"] = report.measure.to_string();
  j["exponent"] = report.exponent;
  j["split"] = report.split.to_string();
  j["lhs"] = report.lhs;
  j["rhs_terms"] = report.rhs_terms;
  j["residual"] = report.residual;
  j["state"] = state_ref_json(report.state_ref);
  return j;
}

nlohmann::ordered_json power_estimate_json(const MeasureSpec& measure,
                                           const PowerEstimate& estimate) {
  ordered_json j;
  j["measure"] = measure.to_string();
  j["kind"] = direction_name(estimate.kind);
  j["estimate"] = estimate.estimate;
  j["bracket_lo"] = estimate.bracket_lo;
  j["bracket_hi"] = estimate.bracket_hi;
  j["fail_tol"] = estimate.fail_tol;
  j["samples_used"] = estimate.samples_used;
  j["adversarial_iterations"] = estimate.adversarial_iterations;
  j["seed"] = estimate.seed;
  j["note"] =
      "sampling certifies failures only; the estimate is biased upward for "
      "monogamy and downward for polygamy";
  j["worst_witness"] = residual_report_json(estimate.worst_witness);
  return j;
}

nlohmann::ordered_json disturbance_scan_json(const DisturbanceScanResult& r) {
  ordered_json j;
  j["measure"] = r.measure.to_string();
  j["epsilon"] = r.epsilon;
  j["best_violation"] = r.best_violation;
  j["constraint_gap"] = r.constraint_gap;
  j["witness"] = state_ref_json(r.witness);
  j["restarts"] = r.budget.restarts;
  j["iterations"] = r.budget.iterations;
  j["seed"] = r.seed;
  return j;
}

nlohmann::ordered_json property_report_json(const PropertyReport& report) {
  ordered_json j;
  j["check_id"] = report.check_id;
  j["samples_total"] = report.samples_total;
  j["samples_checked"] = report.samples_checked;
  j["violations"] = report.violations;
  j["worst_margin"] = report.worst_margin;
  j["pass"] = report.pass;
  j["detail"] = report.detail;
  j["seed"] = report.seed;
  return j;
}

nlohmann::ordered_json witness_table_json(
    const MeasureSpec& measure, int n_parties,
    const std::vector<SharedBasisWitnessRow>& rows) {
  ordered_json j;
  j["measure"] = measure.to_string();
  j["n_parties"] = n_parties;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r;
    r["exponent"] = row.exponent;
    r["lhs"] = row.lhs;
    r["rhs_terms"] = row.rhs_terms;
    r["rhs_sum"] = row.rhs_sum;
    r["rhs_ppt_separable"] = row.rhs_ppt_separable;
    r["residual"] = row.residual;
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  return j;
}

nlohmann::ordered_json scan_table_json(const MeasureSpec& measure,
                                       Direction direction,
                                       const std::vector<ScanRow>& rows) {
  ordered_json j;
  j["measure"] = measure.to_string();
  j["direction"] = direction_name(direction);
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r;
    r["exponent"] = row.exponent;
    r["worst_residual"] = row.worst_residual;
    r["witness_id"] = row.witness_id;
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string scan_table_csv(const std::vector<ScanRow>& rows) {
  std::string out = "exponent,worst_residual,witness_id\n";
  for (const auto& row : rows) {
    out += format_double(row.exponent);
    out += ',';
    out += format_double(row.worst_residual);
    out += ',';
    out += row.witness_id;
    out += '\n';
  }
  return out;
}

}  // namespace monolab
