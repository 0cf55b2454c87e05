#include "monolab/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "monolab/errors.hpp"

namespace monolab {

NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  const int n = static_cast<int>(start.size());
  if (n < 1) throw DomainError("nelder_mead_minimize needs dimension >= 1");

  // Dimension-adaptive coefficients (Gao & Han); the classic 1, 2, 1/2, 1/2
  // values degrade on the ~16-dimensional charts used by the roof engine.
  const double nd = n;
  const double refl = 1.0;
  const double expa = 1.0 + 2.0 / nd;
  const double contr = 0.75 - 1.0 / (2.0 * nd);
  const double shrink = 1.0 - 1.0 / nd;

  NelderMeadResult result;

  std::vector<Eigen::VectorXd> pts(n + 1, start);
  std::vector<double> vals(n + 1);
  for (int i = 1; i <= n; ++i) pts[i](i - 1) += options.init_step;
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  result.evaluations = n + 1;

  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], second_worst = order[n - 1], worst = order[n];

    double diameter = 0.0;
    for (int i = 1; i <= n; ++i)
      diameter = std::max(diameter, (pts[order[i]] - pts[best]).norm());
    if (diameter < options.x_tol) {
      result.converged = true;
      result.iterations = iter;
      break;
    }
    result.iterations = iter + 1;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[order[i]];
    centroid /= nd;

    Eigen::VectorXd xr = centroid + refl * (centroid - pts[worst]);
    const double fr = f(xr);
    ++result.evaluations;

    if (fr < vals[best]) {
      Eigen::VectorXd xe = centroid + expa * (xr - centroid);
      const double fe = f(xe);
      ++result.evaluations;
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }

    if (fr < vals[worst]) {
      Eigen::VectorXd xc = centroid + contr * (xr - centroid);
      const double fc = f(xc);
      ++result.evaluations;
      if (fc <= fr) {
        pts[worst] = xc;
        vals[worst] = fc;
        continue;
      }
    } else {
      Eigen::VectorXd xc = centroid - contr * (centroid - pts[worst]);
      const double fc = f(xc);
      ++result.evaluations;
      if (fc < vals[worst]) {
        pts[worst] = xc;
        vals[worst] = fc;
        continue;
      }
    }

    for (int i = 1; i <= n; ++i) {
      int k = order[i];
      pts[k] = pts[order[0]] + shrink * (pts[k] - pts[order[0]]);
      vals[k] = f(pts[k]);
      ++result.evaluations;
    }
  }

  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vals[a] < vals[b]; });
  result.x = pts[order[0]];
  result.value = vals[order[0]];
  return result;
}

}  // namespace monolab
