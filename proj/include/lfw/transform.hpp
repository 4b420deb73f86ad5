#pragma once

#include "lfw/function.hpp"

namespace lfw {

// Serial reference transforms: literal character sums over all cell pairs,
// O(cells^2).  Kept as the oracle for the fast path.
TestFunction fourier_forward(const TestFunction& f);
TestFunction fourier_inverse(const TestFunction& f);

// Fast transforms: identical output within 1e-12 per amplitude at
// O(cells * log_p(cells) * p), via a digit permutation that reduces the
// character pairing to the standard digitwise one followed by per-dimension
// p-point stages.  Stage lines run in parallel; output is independent of the
// thread count.
TestFunction fourier_fast(const TestFunction& f);
TestFunction fourier_fast_inverse(const TestFunction& f);

// Dispatch on the function's side: point -> forward, frequency -> inverse.
TestFunction fourier(const TestFunction& f, bool fast = true);

}  // namespace lfw
