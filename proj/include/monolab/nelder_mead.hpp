#pragma once

#include <Eigen/Dense>
#include <functional>

namespace monolab {

struct NelderMeadOptions {
  int max_iterations = 400;
  double init_step = 0.5;     // initial simplex edge length
  double x_tol = 1e-8;        // simplex diameter convergence threshold
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill-simplex minimization with dimension-adaptive reflection and
// contraction coefficients; deterministic for a given start point.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

}  // namespace monolab
