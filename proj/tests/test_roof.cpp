#include <cmath>

#include "doctest.h"
#include "monolab/convex_roof.hpp"
#include "monolab/errors.hpp"
#include "monolab/measures_pure.hpp"
#include "monolab/random_states.hpp"
#include "monolab/special_states.hpp"
#include "monolab/state_ops.hpp"

using namespace monolab;

namespace {

const Bipartition kCut01{{0}, {1}};

double pure_c(const QuantumState& psi) { return concurrence_pure(psi, kCut01); }
double pure_c2(const QuantumState& psi) {
  const double c = concurrence_pure(psi, kCut01);
  return c * c;
}

QuantumState diagonal_half() {
  Mat rho = Mat::Zero(4, 4);
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  return QuantumState::mixed(SystemDims({2, 2}), rho);
}

QuantumState werner(double p) {
  Vec psi = Vec::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  Mat rho = p * (psi * psi.adjoint()) + (1.0 - p) * Mat::Identity(4, 4) / 4.0;
  return QuantumState::mixed(SystemDims({2, 2}), rho);
}

QuantumState rank2_mixed(std::uint64_t i) {
  RandomSpec spec;
  spec.master_seed = 31337;
  spec.sample_index = i;
  spec.kind = RandomSpec::Kind::induced_mixed;
  spec.rank = 2;
  return sample_state(SystemDims({2, 2}), spec);
}

}  // namespace

TEST_CASE("identity mixing reproduces the eigendecomposition ensemble") {
  auto rho = rank2_mixed(0);
  auto ens = ensemble_from_mixing(rho, Mat::Identity(2, 2));
  CHECK(ens.members.size() == 2);
  // Weights are the eigenvalues, members the eigenvectors (descending).
  auto eigs = hermitian_eigenvalues(rho.matrix());
  CHECK(ens.members[0].weight == doctest::Approx(eigs(3)).epsilon(1e-12));
  CHECK(ens.members[1].weight == doctest::Approx(eigs(2)).epsilon(1e-12));
  ens.check_reconstructs(rho.matrix());
}

TEST_CASE("Hadamard-style mixing of the diagonal state gives Bell pairs") {
  auto rho = diagonal_half();
  Mat mixing(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  mixing << s, s, s, -s;
  auto ens = ensemble_from_mixing(rho, mixing);
  REQUIRE(ens.members.size() == 2);
  for (const auto& m : ens.members) {
    CHECK(m.weight == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pure_c(m.state) == doctest::Approx(1.0).epsilon(1e-10));
  }
  ens.check_reconstructs(rho.matrix());
}

TEST_CASE("tall mixings reconstruct; bad mixings are rejected") {
  auto rho = rank2_mixed(3);
  // A 4x2 isometry: two orthonormal columns.
  Mat iso = Mat::Zero(4, 2);
  iso(0, 0) = 1.0 / std::sqrt(2.0);
  iso(1, 0) = 1.0 / std::sqrt(2.0);
  iso(2, 1) = Complex(0, 1.0 / std::sqrt(2.0));
  iso(3, 1) = -1.0 / std::sqrt(2.0);
  auto ens = ensemble_from_mixing(rho, iso);
  ens.check_reconstructs(rho.matrix());
  double wsum = 0.0;
  for (const auto& m : ens.members) wsum += m.weight;
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));

  Mat bad = Mat::Identity(2, 2);
  bad(0, 0) = 0.5;
  CHECK_THROWS_AS(ensemble_from_mixing(rho, bad), DomainError);
  CHECK_THROWS_AS(ensemble_from_mixing(rho, Mat::Identity(3, 3)), DomainError);
}

TEST_CASE("roof short-circuits on pure input") {
  auto psi = bell_state();
  RoofProblem problem;
  problem.objective = pure_c;
  auto result = roof_optimize(psi, problem);
  CHECK(result.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.ensemble.members.size() == 1);
  CHECK(result.spread == 0.0);
}

TEST_CASE("roof budget of zero is a capability error") {
  RoofProblem problem;
  problem.objective = pure_c;
  problem.budget.restarts = 0;
  CHECK_THROWS_AS(roof_optimize(diagonal_half(), problem), CapabilityError);
}

TEST_CASE("infimum roof of squared concurrence finds separable decomposition") {
  RoofProblem problem;
  problem.mode = RoofMode::infimum;
  problem.objective = pure_c2;
  problem.seed = 1;
  auto result = roof_optimize(diagonal_half(), problem);
  CHECK(result.value <= 1e-6);
  CHECK(result.value >= 0.0);
  result.ensemble.check_reconstructs(diagonal_half().matrix());
}

TEST_CASE("supremum roof of concurrence reaches the Bell ensemble") {
  RoofProblem problem;
  problem.mode = RoofMode::supremum;
  problem.objective = pure_c;
  problem.seed = 2;
  auto result = roof_optimize(diagonal_half(), problem);
  CHECK(result.value == doctest::Approx(1.0).epsilon(5e-3));
  // Supremum value can never exceed the largest pure value of the objective.
  CHECK(result.value <= 1.0 + 1e-9);
}

TEST_CASE("infimum roof matches the known Werner optimum") {
  RoofProblem problem;
  problem.mode = RoofMode::infimum;
  problem.objective = pure_c2;
  problem.seed = 3;
  problem.cardinality = 4;
  auto result = roof_optimize(werner(0.9), problem);
  CHECK(result.value == doctest::Approx(0.85 * 0.85).epsilon(5e-3 / 0.7225));
}

TEST_CASE("roof brackets against the eigendecomposition ensemble") {
  for (std::uint64_t i = 0; i < 3; ++i) {
    auto rho = rank2_mixed(10 + i);
    double eig_avg =
        ensemble_from_mixing(rho, Mat::Identity(2, 2)).average(pure_c2);
    RoofProblem inf_problem;
    inf_problem.mode = RoofMode::infimum;
    inf_problem.objective = pure_c2;
    inf_problem.seed = i;
    auto inf_result = roof_optimize(rho, inf_problem);
    CHECK(inf_result.value <= eig_avg + kRoofBracketTol);

    RoofProblem sup_problem = inf_problem;
    sup_problem.mode = RoofMode::supremum;
    auto sup_result = roof_optimize(rho, sup_problem);
    CHECK(sup_result.value >= eig_avg - kRoofBracketTol);
    CHECK(sup_result.value >= inf_result.value - 1e-12);
  }
}

TEST_CASE("doubling restarts never worsens the optimum") {
  auto rho = rank2_mixed(20);
  RoofProblem problem;
  problem.mode = RoofMode::infimum;
  problem.objective = pure_c2;
  problem.seed = 99;
  problem.budget.restarts = 4;
  auto small = roof_optimize(rho, problem);
  problem.budget.restarts = 8;
  auto big = roof_optimize(rho, problem);
  CHECK(big.value <= small.value + 1e-12);
}

TEST_CASE("roof results are deterministic and exec-independent") {
  auto rho = rank2_mixed(21);
  RoofProblem problem;
  problem.mode = RoofMode::supremum;
  problem.objective = pure_c;
  problem.seed = 7;
  problem.exec = Exec::serial;
  auto a = roof_optimize(rho, problem);
  auto b = roof_optimize(rho, problem);
  CHECK(a.value == b.value);
  CHECK(a.spread == b.spread);
  problem.exec = Exec::openmp;
  auto c = roof_optimize(rho, problem);
  CHECK(a.value == c.value);
  CHECK(a.spread == c.spread);
  CHECK(a.best_restart == c.best_restart);
}

TEST_CASE("roof oracle agreement on seeded rank-2 states") {
  // Small-sample version of the full oracle sweep: infimum roof of squared
  // concurrence against the Wootters square, supremum roof of concurrence
  // against the lambda sum.
  int ok_inf = 0, ok_sup = 0;
  const int n = 8;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto rho = rank2_mixed(100 + i);
    const double c = concurrence_2q(rho);
    const double ca = concurrence_assistance_2q(rho);

    RoofProblem inf_problem;
    inf_problem.mode = RoofMode::infimum;
    inf_problem.objective = pure_c2;
    inf_problem.seed = i;
    if (std::abs(roof_optimize(rho, inf_problem).value - c * c) <= 5e-3)
      ++ok_inf;

    RoofProblem sup_problem;
    sup_problem.mode = RoofMode::supremum;
    sup_problem.objective = pure_c;
    sup_problem.seed = i;
    if (std::abs(roof_optimize(rho, sup_problem).value - ca) <= 5e-3)
      ++ok_sup;
  }
  CHECK(ok_inf >= n - 1);
  CHECK(ok_sup >= n - 1);
}
