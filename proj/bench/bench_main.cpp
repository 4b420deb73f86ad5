// Compares the serial reference transform against the staged parallel kernel
// over a sweep of window sizes.

#include <cstdio>
#include <cstdlib>

#include "lfw/bench.hpp"

int main(int argc, char** argv) {
  int p = 2, c = 1, reps = 3, max_side = 6;
  std::uint64_t seed = 20240901;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    const long val = std::strtol(argv[i + 1], nullptr, 10);
    if (key == "--p") p = static_cast<int>(val);
    else if (key == "--c") c = static_cast<int>(val);
    else if (key == "--reps") reps = static_cast<int>(val);
    else if (key == "--max") max_side = static_cast<int>(val);
    else if (key == "--seed") seed = static_cast<std::uint64_t>(val);
    else {
      std::fprintf(stderr, "unknown option %s\n", key.c_str());
      return 2;
    }
  }

  const lfw::FieldRef field = lfw::FieldParams::make(p, c);
  std::printf("field p=%d c=%d (q=%d), best of %d runs\n", p, c, field->q(), reps);
  std::printf("%8s %10s %12s %12s %10s %12s\n", "window", "cells", "naive[ms]",
              "fast[ms]", "speedup", "max|diff|");
  for (int side = 2; side <= max_side; ++side) {
    const lfw::Window w{side, side};
    const lfw::TransformBench b = lfw::measure_transform(field, w, reps, seed);
    std::printf("  (%d,%d) %10llu %12.3f %12.3f %9.1fx %12.3e\n", w.m, w.n,
                static_cast<unsigned long long>(b.cells), b.naive_ms, b.fast_ms,
                b.speedup, b.max_deviation);
  }
  return 0;
}
