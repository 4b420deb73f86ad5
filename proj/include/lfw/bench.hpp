#pragma once

#include <cstdint>

#include "lfw/function.hpp"

namespace lfw {

struct TransformBench {
  std::uint64_t cells = 0;
  double naive_ms = 0.0;
  double fast_ms = 0.0;
  double speedup = 0.0;
  double max_deviation = 0.0;  // fast vs naive on the benchmarked input
};

// Times the serial reference against the staged kernel on one random
// point-side function (best of `reps` runs each) and cross-checks outputs.
TransformBench measure_transform(const FieldRef& f, Window w, int reps,
                                 std::uint64_t seed);

}  // namespace lfw
