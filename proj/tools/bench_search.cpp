// Benchmark: naive serial reference scan vs the integral-model kernel,
// single-threaded and with all OpenMP threads.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
static int omp_get_max_threads() { return 1; }
static void omp_set_num_threads(int) {}
#endif

#include "fermat/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<fermat::SearchResult()>& fn,
               fermat::SearchResult& out) {
  auto t0 = Clock::now();
  out = fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  long d_max = 4;
  long a_max = 200000;
  if (argc > 1) d_max = std::stol(argv[1]);
  if (argc > 2) a_max = std::stol(argv[2]);

  const struct {
    const char* name;
    fermat::FermatEquation eq;
  } cases[] = {
      {"2x^5+9y^5+11z^5", fermat::FermatEquation::validated(2, 9, 11, 5)},
      {"16x^5+9y^5+7z^5", fermat::FermatEquation::validated(16, 9, 7, 5)},
      {"123x^5+125y^5+121z^5", fermat::FermatEquation::validated(123, 125, 121, 5)},
  };

  fermat::SearchBounds bounds;
  bounds.d_max = d_max;
  bounds.a_max = a_max;

  const int threads = omp_get_max_threads();
  std::cout << "bounds: d_max=" << d_max << " a_max=" << a_max
            << "   threads available: " << threads << "\n\n";

  for (const auto& c : cases) {
    fermat::CurveModel m = fermat::build_curve(c.eq);
    fermat::SearchResult ref, one, par;

    double t_ref = time_ms([&] { return fermat::search_reference(m, bounds); }, ref);
    omp_set_num_threads(1);
    double t_one = time_ms([&] { return fermat::search(m, bounds); }, one);
    omp_set_num_threads(threads);
    double t_par = time_ms([&] { return fermat::search(m, bounds); }, par);

    bool agree = ref.points == one.points && one.points == par.points;
    std::cout << c.name << "  (" << ref.points.size() << " points"
              << (agree ? "" : ", MISMATCH!") << ")\n";
    std::cout << "  reference serial scan : " << t_ref << " ms\n";
    std::cout << "  kernel, 1 thread      : " << t_one << " ms  ("
              << t_ref / t_one << "x vs reference)\n";
    std::cout << "  kernel, " << threads << " threads     : " << t_par << " ms  ("
              << t_one / t_par << "x vs 1 thread)\n\n";
    if (!agree) return 1;
  }
  return 0;
}
