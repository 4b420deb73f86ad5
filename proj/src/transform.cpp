#include "lfw/transform.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace lfw {

namespace {

// Character pairing exponent between output cell m and input cell n:
// eps0 coordinate of the pr^{-1} coefficient of pr^{m+n-window} u(m) u(n),
// i.e. the digit convolution sum_{i+j=W-1} pairing_digit(b_i(m), b_j(n)).
struct PairingTables {
  int p, q, width;
  std::vector<GfSym> digits;  // cells * width base-q digits

  PairingTables(const FieldRef& f, int width_, std::uint64_t cells)
      : p(f->p()), q(f->q()), width(width_), digits(cells * std::max(width_, 1)) {
    for (std::uint64_t n = 0; n < cells; ++n) {
      std::uint64_t rest = n;
      for (int i = 0; i < width; ++i) {
        digits[n * width + i] = static_cast<GfSym>(rest % q);
        rest /= q;
      }
    }
  }
};

TestFunction reference_transform(const TestFunction& f, int sign) {
  const FieldRef& fld = f.field();
  const Window out_w = f.window().swapped();
  const std::uint64_t cells = f.cells();
  const int width = f.window().m + f.window().n;
  const double scale = std::pow(static_cast<double>(fld->q()), -f.window().n);
  const int p = fld->p();

  PairingTables tab(fld, width, cells);
  std::array<Cplx, FieldParams::kMaxP> roots{};
  for (int t = 0; t < p; ++t) roots[t] = unit_root(p, sign >= 0 ? t : (p - t) % p);

  std::vector<Cplx> out(cells);
  for (std::uint64_t m = 0; m < cells; ++m) {
    const GfSym* dm = tab.digits.data() + m * width;
    Cplx acc = 0.0;
    for (std::uint64_t n = 0; n < cells; ++n) {
      const GfSym* dn = tab.digits.data() + n * width;
      int t = 0;
      for (int i = 0; i < width; ++i) t += fld->pairing_digit(dm[i], dn[width - 1 - i]);
      acc += f.value(n) * roots[t % p];
    }
    out[m] = acc * scale;
  }
  return TestFunction(fld, f.side() == Side::Point ? Side::Frequency : Side::Point,
                      out_w, std::move(out));
}

TestFunction staged_transform(const TestFunction& f, int sign) {
  const FieldRef& fld = f.field();
  const Window out_w = f.window().swapped();
  const std::uint64_t cells = f.cells();
  const int width = f.window().m + f.window().n;
  const int p = fld->p();
  const int c = fld->c();
  const std::uint64_t q = static_cast<std::uint64_t>(fld->q());
  const double scale = std::pow(static_cast<double>(fld->q()), -f.window().n);

  // Reduce the twisted pairing to the standard digitwise one: reverse the
  // base-q digits and push each through the pairing map.
  std::vector<Cplx> buf(cells);
  {
    std::vector<std::uint64_t> qpow(std::max(width, 1));
    if (width > 0) {
      qpow[0] = 1;
      for (int i = 1; i < width; ++i) qpow[i] = qpow[i - 1] * q;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(cells); ++n) {
      std::uint64_t rest = static_cast<std::uint64_t>(n), dst = 0;
      for (int i = 0; i < width; ++i) {
        dst += qpow[width - 1 - i] *
               static_cast<std::uint64_t>(fld->pairing_map(static_cast<GfSym>(rest % q)));
        rest /= q;
      }
      buf[dst] = f.value(static_cast<std::uint64_t>(n));
    }
  }

  std::array<Cplx, FieldParams::kMaxP * FieldParams::kMaxP> kernel{};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      kernel[a * p + b] = unit_root(p, sign >= 0 ? (a * b) % p : (p - (a * b) % p) % p);

  // One p-point stage per base-p digit; lines are independent.
  const int dims = c * width;
  std::uint64_t stride = 1;
  for (int d = 0; d < dims; ++d) {
    const std::uint64_t lines = cells / p;
#pragma omp parallel for schedule(static)
    for (std::int64_t line = 0; line < static_cast<std::int64_t>(lines); ++line) {
      const std::uint64_t lo = static_cast<std::uint64_t>(line) % stride;
      const std::uint64_t hi = static_cast<std::uint64_t>(line) / stride;
      const std::uint64_t base = hi * stride * p + lo;
      std::array<Cplx, FieldParams::kMaxP> in{};
      for (int b = 0; b < p; ++b) in[b] = buf[base + b * stride];
      for (int a = 0; a < p; ++a) {
        Cplx acc = 0.0;
        for (int b = 0; b < p; ++b) acc += kernel[a * p + b] * in[b];
        buf[base + a * stride] = acc;
      }
    }
    stride *= p;
  }

#pragma omp parallel for schedule(static)
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(cells); ++n) buf[n] *= scale;

  return TestFunction(fld, f.side() == Side::Point ? Side::Frequency : Side::Point,
                      out_w, std::move(buf));
}

void require_side(const TestFunction& f, Side s, const char* what) {
  if (f.side() != s) throw ParamError(what);
}

}  // namespace

TestFunction fourier_forward(const TestFunction& f) {
  require_side(f, Side::Point, "forward transform expects a point-side function");
  return reference_transform(f, -1);
}

TestFunction fourier_inverse(const TestFunction& f) {
  require_side(f, Side::Frequency, "inverse transform expects a frequency-side function");
  return reference_transform(f, +1);
}

TestFunction fourier_fast(const TestFunction& f) {
  require_side(f, Side::Point, "forward transform expects a point-side function");
  return staged_transform(f, -1);
}

TestFunction fourier_fast_inverse(const TestFunction& f) {
  require_side(f, Side::Frequency, "inverse transform expects a frequency-side function");
  return staged_transform(f, +1);
}

TestFunction fourier(const TestFunction& f, bool fast) {
  if (f.side() == Side::Point) return fast ? fourier_fast(f) : fourier_forward(f);
  return fast ? fourier_fast_inverse(f) : fourier_inverse(f);
}

}  // namespace lfw
