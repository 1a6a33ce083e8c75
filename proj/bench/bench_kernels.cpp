// Timing comparison of the serial reference kernels against the OpenMP
// ones, plus a bitwise agreement check. The parallel kernels keep the
// serial fold order, so max|diff| must print as 0.

#include "darkgate/dynamics.hpp"
#include "darkgate/holonomy.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using darkgate::Execution;

double now_seconds() {
  using Clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(Clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& fn) {
  const double t0 = now_seconds();
  fn();
  return now_seconds() - t0;
}

void print_row(const char* kernel, double serial, double parallel,
               double max_diff) {
  std::printf("%-22s %10.3f s %10.3f s %8.2fx   max|diff| = %g\n", kernel,
              serial, parallel, serial / parallel, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  int steps = 2000;
  int samples = 2001;
  if (argc > 1) steps = std::atoi(argv[1]);
  if (argc > 2) samples = std::atoi(argv[2]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("steps/stage: %d, path samples/stage: %d\n\n", steps, samples);
  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  const darkgate::ScheduleSpec spec{1.0, samples};
  const darkgate::TimeGrid grid{200.0, steps};

  {
    darkgate::PropagationResult a, b;
    const double ts = timed([&] {
      a = darkgate::propagate(spec, grid,
                              darkgate::PropagateOptions{Execution::Serial});
    });
    const double tp = timed([&] {
      b = darkgate::propagate(spec, grid,
                              darkgate::PropagateOptions{Execution::Parallel});
    });
    print_row("propagate", ts, tp,
              (a.total_unitary - b.total_unitary).cwiseAbs().maxCoeff());
  }

  {
    darkgate::FiberPath a, b;
    const double ts = timed([&] {
      a = darkgate::sample_fiber_path(spec, darkgate::FiberKind::Full, samples,
                                      Execution::Serial);
    });
    const double tp = timed([&] {
      b = darkgate::sample_fiber_path(spec, darkgate::FiberKind::Full, samples,
                                      Execution::Parallel);
    });
    double diff = 0.0;
    for (std::size_t i = 0; i < a.fibers.size(); ++i) {
      diff = std::max(diff,
                      (a.fibers[i] - b.fibers[i]).cwiseAbs().maxCoeff());
    }
    print_row("sample_fiber_path", ts, tp, diff);

    darkgate::Gate wa, wb;
    const double ws = timed([&] { wa = darkgate::wilson_line(a, Execution::Serial); });
    const double wp = timed([&] { wb = darkgate::wilson_line(a, Execution::Parallel); });
    print_row("wilson_line", ws, wp, (wa - wb).cwiseAbs().maxCoeff());
  }

  return 0;
}
