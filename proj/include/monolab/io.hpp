#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "monolab/quantum_state.hpp"
#include "monolab/random_states.hpp"

namespace monolab {

// State files are JSON: integer dims, a type tag ("pure"/"mixed"), and the
// amplitudes (pure) or row-major density matrix (mixed) as [re, im] pairs.
// Optional label and draw provenance ride along. Serialization uses ordered
// keys and shortest-round-trip doubles, so serialize -> parse -> serialize
// is byte-identical.

struct StateFileData {
  QuantumState state;
  std::string label;  // empty = absent
  std::optional<RandomSpec> provenance;
};

nlohmann::ordered_json state_to_json(
    const QuantumState& state, const std::string& label = "",
    const std::optional<RandomSpec>& provenance = std::nullopt);

// Throws DomainError naming the offending field on schema or invariant
// violations (including QuantumState validation). Retains label and
// provenance so serialize -> parse -> serialize round-trips byte-identically.
StateFileData state_file_from_json(const nlohmann::ordered_json& j);
QuantumState state_from_json(const nlohmann::ordered_json& j);

// Reads the whole file; IoError if it cannot be opened.
std::string read_text_file(const std::string& path);

// Writes atomically: temp file in the same directory, then rename.
void write_text_file_atomic(const std::string& path,
                            const std::string& content);

// Convenience wrappers: read/parse and serialize/write.
QuantumState load_state_file(const std::string& path);
void save_state_file(const std::string& path, const QuantumState& state,
                     const std::string& label = "",
                     const std::optional<RandomSpec>& provenance = std::nullopt);

}  // namespace monolab
