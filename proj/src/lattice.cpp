#include "lfw/lattice.hpp"

#include <vector>

namespace lfw {

int scale_of(const FieldRef& f, std::uint64_t n) {
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  int k = 0;
  while (n > 0) {
    n /= q;
    ++k;
  }
  return k;
}

Laurent lattice_point(const FieldRef& f, std::uint64_t n) {
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  std::vector<std::pair<int, GfSym>> terms;
  int i = 0;
  while (n > 0) {
    const GfSym digit = static_cast<GfSym>(n % q);
    if (digit != 0) terms.emplace_back(-(i + 1), digit);
    n /= q;
    ++i;
  }
  return Laurent(f, std::move(terms));
}

std::uint64_t lattice_index(const Laurent& x) {
  const FieldRef& f = x.field();
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  std::uint64_t n = 0;
  for (const auto& [e, a] : x.terms()) {
    if (e >= 0) throw DomainError("point is not on the translation lattice");
    const int i = -e - 1;
    if (i >= f->max_index_digits())
      throw DomainError("lattice index exceeds the representable range");
    std::uint64_t scale = 1;
    for (int d = 0; d < i; ++d) scale *= q;
    n += scale * static_cast<std::uint64_t>(a);
  }
  return n;
}

std::uint64_t lattice_add(const FieldRef& f, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  std::uint64_t out = 0, scale = 1;
  while (a > 0 || b > 0) {
    out += scale * static_cast<std::uint64_t>(
                       f->gf_add(static_cast<GfSym>(a % q), static_cast<GfSym>(b % q)));
    a /= q;
    b /= q;
    scale *= q;
  }
  return out;
}

std::uint64_t lattice_neg(const FieldRef& f, std::uint64_t a) {
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  std::uint64_t out = 0, scale = 1;
  while (a > 0) {
    out += scale * static_cast<std::uint64_t>(f->gf_neg(static_cast<GfSym>(a % q)));
    a /= q;
    scale *= q;
  }
  return out;
}

std::uint64_t lattice_sub(const FieldRef& f, std::uint64_t a, std::uint64_t b) {
  return lattice_add(f, a, lattice_neg(f, b));
}

std::vector<std::uint64_t> scale_translation_set(const FieldRef& f, int j) {
  if (j < 0) return {0};
  if (j > f->max_index_digits()) throw DomainError("scale translation set too large");
  std::uint64_t count = 1;
  for (int i = 0; i < j; ++i) count *= static_cast<std::uint64_t>(f->q());
  std::vector<std::uint64_t> out(count);
  for (std::uint64_t t = 0; t < count; ++t) out[t] = t;
  return out;
}

Laurent ring_part(const Laurent& x) {
  std::vector<std::pair<int, GfSym>> terms;
  for (const auto& t : x.terms())
    if (t.first >= 0) terms.push_back(t);
  return Laurent(x.field(), std::move(terms));
}

Laurent lattice_part(const Laurent& x) {
  std::vector<std::pair<int, GfSym>> terms;
  for (const auto& t : x.terms())
    if (t.first < 0) terms.push_back(t);
  return Laurent(x.field(), std::move(terms));
}

RootOfUnity character(const Laurent& x) {
  const FieldRef& f = x.field();
  return {f->p(), f->eps0_coord(x.coeff(-1))};
}

RootOfUnity character_n(const FieldRef& f, std::uint64_t n, const Laurent& x) {
  return character(lattice_point(f, n) * x);
}

double character_sum_kernel(const FieldRef& f, std::uint64_t pidx, std::uint64_t kidx,
                            int j) {
  if (j < 0) throw DomainError("character_sum_kernel requires j >= 0");
  const Laurent diff =
      (lattice_point(f, pidx) - lattice_point(f, kidx)) * Laurent::prime_power(f, j);
  // Accumulate exact root counts; render to complex once.
  std::vector<std::int64_t> counts(f->p(), 0);
  for (std::uint64_t t : scale_translation_set(f, j))
    ++counts[character(diff * lattice_point(f, t)).t];
  std::complex<double> sum = 0.0;
  for (int t = 0; t < f->p(); ++t)
    if (counts[t] != 0) sum += static_cast<double>(counts[t]) * unit_root(f->p(), t);
  double cells = 1.0;
  for (int i = 0; i < j; ++i) cells *= static_cast<double>(f->q());
  return sum.real() / cells;
}

}  // namespace lfw
