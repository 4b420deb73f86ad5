#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lfw/field.hpp"
#include "lfw/lattice.hpp"

namespace lfw {

using Cplx = std::complex<double>;

enum class Side { Point, Frequency };

/// Resolution window of a locally constant, compactly supported function:
/// support inside pr^{-m} * D, constant on cosets of pr^n * D.
struct Window {
  int m = 0;  // support radius exponent
  int n = 0;  // constancy scale exponent

  bool operator==(const Window& o) const { return m == o.m && n == o.n; }
  // Transform swaps the roles exactly.
  Window swapped() const { return {n, m}; }
};

// q^{m+n}; ResolutionError beyond the global cell cap.
std::uint64_t cell_count(const FieldRef& f, Window w);

// Cell anchor pr^{w.n} * u(idx); cells enumerate the quotient of the support
// ideal by the constancy ideal.
Laurent grid_point(const FieldRef& f, Window w, std::uint64_t idx);

inline constexpr std::uint64_t kMaxCells = std::uint64_t(1) << 20;

/// One locally constant, compactly supported function, stored as its exact
/// cell amplitudes under the lattice enumeration.  Immutable.
class TestFunction {
 public:
  TestFunction(FieldRef field, Side side, Window w, std::vector<Cplx> values);

  static TestFunction zero(FieldRef field, Side side, Window w);
  // Indicator of the fractional ideal pr^k * D.
  static TestFunction ideal_indicator(FieldRef field, Side side, int k);

  const FieldRef& field() const { return field_; }
  Side side() const { return side_; }
  Window window() const { return window_; }
  const std::vector<Cplx>& values() const { return values_; }
  Cplx value(std::uint64_t idx) const { return values_[idx]; }
  std::uint64_t cells() const { return values_.size(); }

  // Exact evaluation anywhere on the field.
  Cplx eval(const Laurent& x) const;

 private:
  FieldRef field_;
  Side side_;
  Window window_;
  std::vector<Cplx> values_;
};

// Haar integral with the ring of integers normalized to measure 1.
Cplx integrate(const TestFunction& f);

// <f, g> on a unified window; ParamError on mismatched fields or sides.
Cplx inner_product(const TestFunction& f, const TestFunction& g);
double norm2(const TestFunction& f);

// Exact re-representation on a wider/finer window (replication + zero
// padding); ResolutionError when asked to shrink.
TestFunction unify_window(const TestFunction& f, Window w);

// q^{j/2} f(pr^{-j} x); exact re-windowing, norm preserving.
TestFunction dilate(const TestFunction& f, int j);

// f(x - u(k)); the window grows to cover the shifted support.
TestFunction translate(const TestFunction& f, std::uint64_t k);

TestFunction scale_values(const TestFunction& f, Cplx factor);
TestFunction add(const TestFunction& f, const TestFunction& g);

// Max cellwise deviation after unifying windows.
double max_abs_diff(const TestFunction& f, const TestFunction& g);

}  // namespace lfw
