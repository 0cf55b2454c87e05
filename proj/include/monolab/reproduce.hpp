#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "monolab/measures.hpp"

namespace monolab {

struct ReproduceBudget {
  int closed_samples = 5000;  // sweep size for closed-form rows
  int roof_samples = 200;     // sweep size for roof-backed rows
  int adversarial_iterations = 300;  // refinement budget on closed-form rows
  EvalOptions eval;                  // roof budget / exec for evaluations
};

struct ReproduceOutcome {
  std::string target;
  bool all_passed = true;
  nlohmann::ordered_json payload;
  std::string text;  // human-readable rendering of the payload
};

// Recorded reference experiments:
//   examples  — the recorded three-qubit example state evaluated under every
//               focus orientation (one-vs-rest concurrence, both two-qubit
//               marginal concurrences, PPT flags) side by side with the
//               recorded reference triple; flags the known discrepancy
//               instead of asserting a match. Always passes.
//   table1    — monogamy-direction spot-check rows at their recorded
//               exponents over seeded three-qubit states.
//   table2    — polygamy-direction spot-check rows for assisted measures.
//   theorem2  — shared-basis witness tables for C, N, Ef on four qubits at
//               grid exponents {0.5, 1, 2, 4}.
//   conjecture — constrained disturbance scans for C and N at epsilon 1e-3.
// Unknown target -> DomainError.
ReproduceOutcome reproduce_target(const std::string& target,
                                  std::uint64_t seed,
                                  const ReproduceBudget& budget = {});

// The recorded example state (sqrt(2)|100> + sqrt(2)|110> + |111>)/sqrt(5),
// exposed for tests.
QuantumState recorded_example_state();

}  // namespace monolab
