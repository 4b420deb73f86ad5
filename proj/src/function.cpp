#include "lfw/function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lfw {

std::uint64_t cell_count(const FieldRef& f, Window w) {
  if (w.m < 0 || w.n < 0) throw ResolutionError("window exponents must be nonnegative");
  std::uint64_t cells = 1;
  for (int i = 0; i < w.m + w.n; ++i) {
    cells *= static_cast<std::uint64_t>(f->q());
    if (cells > kMaxCells) throw ResolutionError("window overflow: too many cells");
  }
  return cells;
}

Laurent grid_point(const FieldRef& f, Window w, std::uint64_t idx) {
  if (idx >= cell_count(f, w)) throw DomainError("grid index out of range");
  return Laurent::prime_power(f, w.n) * lattice_point(f, idx);
}

TestFunction::TestFunction(FieldRef field, Side side, Window w, std::vector<Cplx> values)
    : field_(std::move(field)), side_(side), window_(w), values_(std::move(values)) {
  if (values_.size() != cell_count(field_, w))
    throw ParamError("value vector does not match the window cell count");
}

TestFunction TestFunction::zero(FieldRef field, Side side, Window w) {
  std::vector<Cplx> v(cell_count(field, w), Cplx(0.0, 0.0));
  return TestFunction(std::move(field), side, w, std::move(v));
}

TestFunction TestFunction::ideal_indicator(FieldRef field, Side side, int k) {
  Window w{std::max(-k, 0), std::max(k, 0)};
  std::vector<Cplx> v(cell_count(field, w), Cplx(0.0, 0.0));
  if (k >= 0) {
    v[0] = 1.0;  // single cell of radius q^{-k} at 0
  } else {
    for (std::uint64_t n = 0; n < v.size(); ++n) v[n] = 1.0;
  }
  return TestFunction(std::move(field), side, w, std::move(v));
}

Cplx TestFunction::eval(const Laurent& x) const {
  require_same_field(field_, x.field());
  if (x.valuation() < -window_.m) return 0.0;  // outside the support ideal
  // Containing cell: the fractional part of pr^{-n} x is a lattice point.
  std::vector<std::pair<int, GfSym>> frac;
  for (const auto& [e, a] : x.terms())
    if (e - window_.n < 0) frac.emplace_back(e - window_.n, a);
  const std::uint64_t idx = lattice_index(Laurent(field_, std::move(frac)));
  return values_[idx];
}

Cplx integrate(const TestFunction& f) {
  Cplx sum = 0.0;
  for (const Cplx& v : f.values()) sum += v;
  return sum * std::pow(static_cast<double>(f.field()->q()), -f.window().n);
}

TestFunction unify_window(const TestFunction& f, Window w) {
  const Window cur = f.window();
  if (w.m < cur.m || w.n < cur.n)
    throw ResolutionError("window unification can only widen or refine");
  if (w == cur) return f;
  const FieldRef& fld = f.field();
  const std::uint64_t cells = cell_count(fld, w);
  std::uint64_t shift = 1;  // q^{w.n - cur.n}
  for (int i = 0; i < w.n - cur.n; ++i) shift *= static_cast<std::uint64_t>(fld->q());
  const std::uint64_t src_cells = f.cells();
  std::vector<Cplx> v(cells);
  for (std::uint64_t n = 0; n < cells; ++n) {
    const std::uint64_t src = n / shift;
    v[n] = src < src_cells ? f.value(src) : Cplx(0.0, 0.0);
  }
  return TestFunction(fld, f.side(), w, std::move(v));
}

Cplx inner_product(const TestFunction& f, const TestFunction& g) {
  require_same_field(f.field(), g.field());
  if (f.side() != g.side()) throw ParamError("inner product across sides");
  const Window w{std::max(f.window().m, g.window().m),
                 std::max(f.window().n, g.window().n)};
  const TestFunction fu = unify_window(f, w);
  const TestFunction gu = unify_window(g, w);
  Cplx sum = 0.0;
  for (std::uint64_t n = 0; n < fu.cells(); ++n) sum += fu.value(n) * std::conj(gu.value(n));
  return sum * std::pow(static_cast<double>(f.field()->q()), -w.n);
}

double norm2(const TestFunction& f) {
  double sum = 0.0;
  for (const Cplx& v : f.values()) sum += std::norm(v);
  return std::sqrt(sum * std::pow(static_cast<double>(f.field()->q()), -f.window().n));
}

TestFunction dilate(const TestFunction& f, int j) {
  if (j == 0) return f;
  const FieldRef& fld = f.field();
  const Window w{std::max(f.window().m - j, 0), std::max(f.window().n + j, 0)};
  const std::uint64_t cells = cell_count(fld, w);
  const double amp = std::pow(static_cast<double>(fld->q()), 0.5 * j);
  const Laurent contraction = Laurent::prime_power(fld, -j);
  std::vector<Cplx> v(cells);
  for (std::uint64_t n = 0; n < cells; ++n)
    v[n] = amp * f.eval(contraction * grid_point(fld, w, n));
  return TestFunction(fld, f.side(), w, std::move(v));
}

TestFunction translate(const TestFunction& f, std::uint64_t k) {
  if (k == 0) return f;
  const FieldRef& fld = f.field();
  const Window w{std::max(f.window().m, scale_of(fld, k)), f.window().n};
  const std::uint64_t cells = cell_count(fld, w);
  const Laurent shift = lattice_point(fld, k);
  std::vector<Cplx> v(cells);
  for (std::uint64_t n = 0; n < cells; ++n) v[n] = f.eval(grid_point(fld, w, n) - shift);
  return TestFunction(fld, f.side(), w, std::move(v));
}

TestFunction scale_values(const TestFunction& f, Cplx factor) {
  std::vector<Cplx> v = f.values();
  for (Cplx& x : v) x *= factor;
  return TestFunction(f.field(), f.side(), f.window(), std::move(v));
}

TestFunction add(const TestFunction& f, const TestFunction& g) {
  require_same_field(f.field(), g.field());
  if (f.side() != g.side()) throw ParamError("adding functions across sides");
  const Window w{std::max(f.window().m, g.window().m),
                 std::max(f.window().n, g.window().n)};
  const TestFunction fu = unify_window(f, w);
  const TestFunction gu = unify_window(g, w);
  std::vector<Cplx> v(fu.cells());
  for (std::uint64_t n = 0; n < v.size(); ++n) v[n] = fu.value(n) + gu.value(n);
  return TestFunction(f.field(), f.side(), w, std::move(v));
}

double max_abs_diff(const TestFunction& f, const TestFunction& g) {
  require_same_field(f.field(), g.field());
  const Window w{std::max(f.window().m, g.window().m),
                 std::max(f.window().n, g.window().n)};
  const TestFunction fu = unify_window(f, w);
  const TestFunction gu = unify_window(g, w);
  double worst = 0.0;
  for (std::uint64_t n = 0; n < fu.cells(); ++n)
    worst = std::max(worst, std::abs(fu.value(n) - gu.value(n)));
  return worst;
}

}  // namespace lfw
