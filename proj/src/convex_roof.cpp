#include "monolab/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "monolab/errors.hpp"
#include "monolab/nelder_mead.hpp"
#include "monolab/parallel.hpp"
#include "monolab/rng.hpp"

namespace monolab {

namespace {

constexpr double kRankTol = 1e-12;

struct EigenBasis {
  Eigen::VectorXd lambdas;  // descending, > kRankTol
  Mat scaled;               // columns sqrt(l_i) |v_i>, d x r
};

EigenBasis significant_eigenbasis(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  const auto& vals = es.eigenvalues();  // ascending
  int r = 0;
  for (int i = 0; i < vals.size(); ++i)
    if (vals(i) > kRankTol) ++r;
  if (r == 0) throw DomainError("zero-rank density matrix");
  EigenBasis basis;
  basis.lambdas.resize(r);
  basis.scaled.resize(rho.rows(), r);
  for (int k = 0; k < r; ++k) {
    const int src = static_cast<int>(vals.size()) - 1 - k;
    basis.lambdas(k) = vals(src);
    basis.scaled.col(k) = std::sqrt(vals(src)) * es.eigenvectors().col(src);
  }
  return basis;
}

// Real chart of the m x m unitary group: m diagonal entries plus re/im of
// the strict upper triangle form a Hermitian generator H; the point maps to
// exp(iH). The first r columns give every m x r isometry (up to chart
// redundancy, harmless for optimization).
Mat unitary_from_chart(const Eigen::VectorXd& params, int m) {
  Mat h = Mat::Zero(m, m);
  int at = 0;
  for (int i = 0; i < m; ++i) h(i, i) = params(at++);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double re = params(at++);
      const double im = params(at++);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(m);
  for (int i = 0; i < m; ++i)
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

int chart_dimension(int m) { return m * m; }

// Weighted objective average for the ensemble of the given chart point,
// without materializing QuantumState members (hot path).
double chart_average(const Eigen::VectorXd& params, int m, const EigenBasis& basis,
                     const SystemDims& dims,
                     const std::function<double(const QuantumState&)>& f) {
  const int r = static_cast<int>(basis.lambdas.size());
  Mat mixing = unitary_from_chart(params, m).leftCols(r);
  Mat members = basis.scaled * mixing.transpose();  // d x m
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double p = members.col(j).squaredNorm();
    if (p < kEnsembleDropTol) continue;
    acc += p * f(QuantumState::pure(dims, members.col(j) / std::sqrt(p)));
  }
  return acc;
}

}  // namespace

double Ensemble::average(
    const std::function<double(const QuantumState&)>& f) const {
  double acc = 0.0;
  for (const auto& m : members) acc += m.weight * f(m.state);
  return acc;
}

Mat Ensemble::reconstruct() const {
  if (members.empty()) throw DomainError("empty ensemble");
  const auto d = members.front().state.vector().size();
  Mat rho = Mat::Zero(d, d);
  for (const auto& m : members) {
    const Vec& v = m.state.vector();
    rho += m.weight * (v * v.adjoint());
  }
  return rho;
}

void Ensemble::check_reconstructs(const Mat& rho, double tol) const {
  double wsum = 0.0;
  for (const auto& m : members) {
    if (m.weight < 0.0) throw InternalConsistencyError("negative weight");
    wsum += m.weight;
  }
  if (std::abs(wsum - 1.0) > kEnsembleWeightTol)
    throw InternalConsistencyError("ensemble weights do not sum to one");
  if ((reconstruct() - rho).cwiseAbs().maxCoeff() > tol)
    throw InternalConsistencyError(
        "ensemble does not reconstruct its density matrix");
}

Ensemble ensemble_from_mixing(const QuantumState& rho, const Mat& mixing) {
  const Mat density = rho.density();
  EigenBasis basis = significant_eigenbasis(density);
  const int r = static_cast<int>(basis.lambdas.size());
  if (mixing.cols() != r)
    throw DomainError("mixing must have rank(rho) = " + std::to_string(r) +
                      " columns, got " + std::to_string(mixing.cols()));
  if (mixing.rows() < r) throw DomainError("mixing needs at least rank rows");
  Mat gram = mixing.adjoint() * mixing;
  if ((gram - Mat::Identity(r, r)).cwiseAbs().maxCoeff() > kIsometryTol)
    throw DomainError("mixing columns are not orthonormal");

  Mat members = basis.scaled * mixing.transpose();
  Ensemble ensemble;
  for (int j = 0; j < members.cols(); ++j) {
    const double p = members.col(j).squaredNorm();
    if (p < kEnsembleDropTol) continue;
    ensemble.members.push_back(
        {p, QuantumState::pure(rho.dims(), members.col(j) / std::sqrt(p))});
  }
  ensemble.check_reconstructs(density);
  return ensemble;
}

RoofResult roof_optimize(const QuantumState& rho, const RoofProblem& problem) {
  if (!problem.objective)
    throw DomainError("roof problem has no objective");
  if (problem.budget.restarts <= 0 || problem.budget.iterations <= 0 ||
      problem.budget.rounds <= 0)
    throw CapabilityError(
        "roof optimization disabled by zero budget; no closed form available "
        "for this measure/state combination");

  if (rho.is_pure()) {
    RoofResult result;
    result.ensemble.members.push_back({1.0, rho});
    result.value = problem.objective(rho);
    result.restarts_converged = 0;
    result.spread = 0.0;
    return result;
  }

  const Mat density = rho.matrix();
  EigenBasis basis = significant_eigenbasis(density);
  const int r = static_cast<int>(basis.lambdas.size());
  const int m = problem.cardinality > 0 ? problem.cardinality : r * r;
  if (m < r)
    throw DomainError("ensemble cardinality " + std::to_string(m) +
                      " below rank " + std::to_string(r));

  const double sign = problem.mode == RoofMode::infimum ? 1.0 : -1.0;
  const auto& dims = rho.dims();
  auto signed_objective = [&](const Eigen::VectorXd& p) {
    return sign * chart_average(p, m, basis, dims, problem.objective);
  };

  const int n_params = chart_dimension(m);
  const int restarts = problem.budget.restarts;

  struct RestartOutcome {
    double value = 0.0;
    Eigen::VectorXd x;
    bool converged = false;
  };
  std::vector<RestartOutcome> outcomes(restarts);

  for_each_index(restarts, problem.exec, [&](std::int64_t k) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n_params);
    if (k > 0) {
      SplitMix64 rng(derive_seed(problem.seed, {static_cast<std::uint64_t>(k)}));
      for (int i = 0; i < n_params; ++i) {
        x0(i) = 0.8 * rng.next_normal_pair()[0];
      }
    }
    NelderMeadOptions options;
    options.max_iterations = problem.budget.iterations;
    double step = 0.6;
    bool converged = false;
    Eigen::VectorXd x = x0;
    double value = signed_objective(x);
    for (int round = 0; round < problem.budget.rounds; ++round) {
      options.init_step = step;
      auto nm = nelder_mead_minimize(signed_objective, x, options);
      if (nm.value <= value) {
        x = nm.x;
        value = nm.value;
      }
      converged = nm.converged;
      step /= 4.0;
    }
    outcomes[static_cast<std::size_t>(k)] = {value, x, converged};
  });

  int best = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  int n_converged = 0;
  for (int k = 0; k < restarts; ++k) {
    const double v = sign * outcomes[k].value;  // back to caller orientation
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (outcomes[k].converged) ++n_converged;
    if (outcomes[k].value < outcomes[best].value) best = k;
  }

  Mat mixing = unitary_from_chart(outcomes[best].x, m).leftCols(r);
  RoofResult result;
  result.ensemble = ensemble_from_mixing(rho, mixing);
  result.value = result.ensemble.average(problem.objective);
  result.restarts_converged = n_converged;
  result.spread = hi - lo;
  result.best_restart = best;
  return result;
}

}  // namespace monolab
