#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lfw/field.hpp"

namespace lfw {

// The translation lattice: the canonical coset representatives u(n) of the
// ring of integers, enumerated by base-q digit expansion.  Under that
// enumeration the lattice group law is carry-free digitwise addition.

// Number of base-q digits of n; |u(n)| = q^scale_of(n) for n >= 1.
int scale_of(const FieldRef& f, std::uint64_t n);

// u(n): coefficient z(b_i) at exponent -(i+1) for each base-q digit b_i.
Laurent lattice_point(const FieldRef& f, std::uint64_t n);

// Inverse of lattice_point on the lattice; DomainError off it.
std::uint64_t lattice_index(const Laurent& x);

// Index arithmetic mirroring the lattice group: u(a) + u(b) = u(lattice_add(a,b)).
std::uint64_t lattice_add(const FieldRef& f, std::uint64_t a, std::uint64_t b);
std::uint64_t lattice_neg(const FieldRef& f, std::uint64_t a);
std::uint64_t lattice_sub(const FieldRef& f, std::uint64_t a, std::uint64_t b);

// The per-scale translation set: {0, ..., q^j - 1} for j >= 0, {0} for j < 0.
std::vector<std::uint64_t> scale_translation_set(const FieldRef& f, int j);

// Every x splits as ring_part(x) + lattice_part(x): the nonnegative-exponent
// tail lies in the ring of integers, the rest is a translation lattice point.
Laurent ring_part(const Laurent& x);
Laurent lattice_part(const Laurent& x);

/// Value of the canonical additive character, kept as an exact p-th root
/// index; complex rendering only at the boundary.
struct RootOfUnity {
  int p = 2;
  int t = 0;  // value is exp(2*pi*i*t/p)

  std::complex<double> value() const { return unit_root(p, t); }
  RootOfUnity operator*(const RootOfUnity& o) const { return {p, (t + o.t) % p}; }
  RootOfUnity conj() const { return {p, (p - t) % p}; }
  bool operator==(const RootOfUnity& o) const { return p == o.p && t % p == o.t % p; }
};

// The canonical character: trivial on the ring of integers, nontrivial on
// its inverse ideal; depends only on the eps0 coordinate of the coefficient
// at exponent -1.
RootOfUnity character(const Laurent& x);

// chi_n(x) = chi(u(n) * x).
RootOfUnity character_n(const FieldRef& f, std::uint64_t n, const Laurent& x);

// q^{-j} * sum over t in the scale-j translation set of
// chi((u(pidx) - u(kidx)) * pr^j * u(t)), by literal summation.
// Equals 1 when pidx = kidx (mod q^j) and 0 otherwise.
double character_sum_kernel(const FieldRef& f, std::uint64_t pidx, std::uint64_t kidx, int j);

}  // namespace lfw
