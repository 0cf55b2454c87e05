// Times the serial reference path against the OpenMP path for the two hot
// kernels — seeded sample sweeps and roof-restart batches — and verifies
// that both produce bit-identical results (the parallel path must be a pure
// speedup, never a numerical change).

#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "monolab/convex_roof.hpp"
#include "monolab/measures.hpp"
#include "monolab/measures_pure.hpp"
#include "monolab/monogamy.hpp"
#include "monolab/parallel.hpp"
#include "monolab/random_states.hpp"

using namespace monolab;

namespace {

double time_call(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report_row(const char* kernel, double serial_s, double openmp_s,
                bool identical) {
  std::printf("%-28s  serial %8.3f s  openmp %8.3f s  speedup %5.2fx  "
              "identical %s\n",
              kernel, serial_s, openmp_s,
              openmp_s > 0 ? serial_s / openmp_s : 0.0,
              identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-openmp benchmark for the laboratory kernels"};
  int samples = 20000;
  int roof_restarts = 64;
  std::uint64_t seed = 1;
  app.add_option("--samples", samples, "sweep size (default 20000)");
  app.add_option("--restarts", roof_restarts,
                 "roof restarts (default 64)");
  app.add_option("--seed", seed, "master seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp not compiled in; both columns run the serial path\n");
#endif

  bool all_identical = true;

  {
    SamplingConfig sampling;
    sampling.dims = SystemDims({2, 2, 2});
    sampling.n_samples = samples;
    sampling.master_seed = seed;
    sampling.adversarial_iterations = 0;

    ResidualReport serial_report, openmp_report;
    sampling.exec = Exec::serial;
    const double t_serial = time_call([&] {
      serial_report = check_inequality(MeasureSpec::parse("C"), 2.0, sampling,
                                       Direction::monogamy);
    });
    sampling.exec = Exec::openmp;
    const double t_openmp = time_call([&] {
      openmp_report = check_inequality(MeasureSpec::parse("C"), 2.0, sampling,
                                       Direction::monogamy);
    });
    const bool same = serial_report.residual == openmp_report.residual &&
                      serial_report.state_ref.hash ==
                          openmp_report.state_ref.hash;
    all_identical = all_identical && same;
    report_row("closed-form sample sweep", t_serial, t_openmp, same);
  }

  {
    RandomSpec spec;
    spec.master_seed = seed;
    spec.kind = RandomSpec::Kind::induced_mixed;
    spec.rank = 3;
    const auto rho = sample_state(SystemDims({2, 2}), spec);

    RoofProblem problem;
    problem.mode = RoofMode::infimum;
    problem.objective = [](const QuantumState& psi) {
      const double c = concurrence_pure(psi, Bipartition{{0}, {1}});
      return c * c;
    };
    problem.budget.restarts = roof_restarts;
    problem.seed = seed;

    RoofResult serial_result, openmp_result;
    problem.exec = Exec::serial;
    const double t_serial =
        time_call([&] { serial_result = roof_optimize(rho, problem); });
    problem.exec = Exec::openmp;
    const double t_openmp =
        time_call([&] { openmp_result = roof_optimize(rho, problem); });
    const bool same = serial_result.value == openmp_result.value &&
                      serial_result.best_restart == openmp_result.best_restart;
    all_identical = all_identical && same;
    report_row("roof restart batch", t_serial, t_openmp, same);
  }

  if (!all_identical) {
    std::printf("mismatch: parallel path altered a result\n");
    return 1;
  }
  return 0;
}
