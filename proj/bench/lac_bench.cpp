// Serial against OpenMP timings for the Schouten kernel and the suite runner.
//
//   lac_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lac/random.hpp"
#include "lac/suite.hpp"

using namespace lac;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif

  AlgebroidPtr a = canonical_algebroid(Chart({"x", "y", "z"}))->tangent();
  Gen gen(7, GenParams{3, 4, 12, 5});
  std::vector<std::pair<Tensor, Tensor>> pairs;
  for (int i = 0; i < 20; ++i) pairs.emplace_back(gen.tensor(a, Kind::MultiVector, 2), gen.tensor(a, Kind::MultiVector, 3));
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    double t = best_of(repeats, [&] {
      for (const auto& [x, y] : pairs) (void)schouten(x, y, e);
    });
    std::printf("schouten on T(R^3), 20 pairs, %-8s %.4f s\n", e == Exec::Serial ? "serial" : "parallel", t);
  }

  SuiteOptions opt;
  opt.trials = 20;
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    opt.exec = e;
    double t = best_of(repeats, [&] { (void)run_suite("all", builtin_corpus(), opt); });
    std::printf("suite all, 20 trials,        %-8s %.4f s\n", e == Exec::Serial ? "serial" : "parallel", t);
  }
}
