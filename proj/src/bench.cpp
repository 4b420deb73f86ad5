#include "lfw/bench.hpp"

#include <chrono>
#include <random>

#include "lfw/transform.hpp"

namespace lfw {

namespace {

double time_ms(const TestFunction& input, TestFunction (*op)(const TestFunction&),
               int reps, TestFunction* out) {
  using clock = std::chrono::steady_clock;
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock::now();
    TestFunction result = op(input);
    const auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (r == 0 && out) *out = std::move(result);
  }
  return best;
}

}  // namespace

TransformBench measure_transform(const FieldRef& f, Window w, int reps,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Cplx> values(cell_count(f, w));
  for (Cplx& v : values) v = Cplx(gauss(rng), gauss(rng));
  const TestFunction input(f, Side::Point, w, std::move(values));

  TransformBench out;
  out.cells = input.cells();
  TestFunction ref = input, fast = input;
  out.naive_ms = time_ms(input, &fourier_forward, reps, &ref);
  out.fast_ms = time_ms(input, &fourier_fast, reps, &fast);
  out.speedup = out.fast_ms > 0.0 ? out.naive_ms / out.fast_ms : 0.0;
  out.max_deviation = max_abs_diff(ref, fast);
  return out;
}

}  // namespace lfw
