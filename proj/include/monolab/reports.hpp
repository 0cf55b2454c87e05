#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "monolab/measures.hpp"
#include "monolab/monogamy.hpp"

namespace monolab {

// Envelope around every CLI result. The payload is the reproducible part:
// re-running the echoed command with the embedded seed must reproduce it
// byte-for-byte. Wall time lives in the envelope, outside that guarantee.
struct RunReport {
  std::string command;
  std::uint64_t master_seed = 0;
  std::string tool;
  std::string version;
  double wall_seconds = 0.0;
  std::string payload_kind;
  nlohmann::ordered_json payload;
};

nlohmann::ordered_json run_report_to_json(const RunReport& report);

// Payload builders. All keys ordered, all doubles shortest-round-trip.
nlohmann::ordered_json state_ref_json(const StateRef& ref);
nlohmann::ordered_json measure_value_json(const MeasureSpec& measure,
                                          const MeasureValue& value);
nlohmann::ordered_json residual_report_json(const ResidualReport& report);
nlohmann::ordered_json power_estimate_json(const MeasureSpec& measure,
                                           const PowerEstimate& estimate);
nlohmann::ordered_json disturbance_scan_json(const DisturbanceScanResult& r);
nlohmann::ordered_json property_report_json(const PropertyReport& report);
nlohmann::ordered_json witness_table_json(
    const MeasureSpec& measure, int n_parties,
    const std::vector<SharedBasisWitnessRow>& rows);

struct ScanRow {
  double exponent = 0.0;
  double worst_residual = 0.0;
  std::string witness_id;
};

nlohmann::ordered_json scan_table_json(const MeasureSpec& measure,
                                       Direction direction,
                                       const std::vector<ScanRow>& rows);
// Columns: exponent, worst_residual, witness_id. Deterministic formatting
// (%.17g), rows in grid order.
std::string scan_table_csv(const std::vector<ScanRow>& rows);

const char* direction_name(Direction dir);

}  // namespace monolab
