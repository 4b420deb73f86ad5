#pragma once

#include <cstdint>
#include <vector>

#include "lfw/checks.hpp"
#include "lfw/family.hpp"

namespace lfw {

enum class SystemFlavor { Affine, QuasiAffine };

/// Index of one element of the (quasi-)affine system generated by a family:
/// member l (1-based), scale j, translation k.
struct SystemIndex {
  int l = 1;
  int j = 0;
  std::uint64_t k = 0;
  SystemFlavor flavor = SystemFlavor::Affine;
};

// The point-side system element.  Affine: dilate(translate(psi, k), j).
// Quasi-affine for j < 0: q^{j/2} translate(dilate(psi, j), k); the flavors
// coincide for j >= 0.
TestFunction affine_element(const WaveletFamily& fam, const SystemIndex& idx);

/// Off-diagonal Gramian bookkeeping: m is the largest scale with
/// k = k2 (mod q^m), and s is the lattice index with
/// u(s) = pr^m (u(k2) - u(k)); s avoids qN_0 by construction.
struct PairDecomposition {
  int m = 0;
  std::uint64_t s = 0;
};

PairDecomposition decompose_pair(const FieldRef& f, std::uint64_t k, std::uint64_t k2);

// Entry <G(xi) e_k2, e_k> of the dual Gramian of the quasi-affine system at
// the cell's representative: the full two-sided scale sum on the diagonal,
// t_s at the decomposed point off it.
Cplx gramian_entry(const WaveletFamily& fam, const FrequencyCell& cell, std::uint64_t k,
                   std::uint64_t k2);

/// Truncated dual Gramian fiber: the q^S x q^S leading block at one cell.
struct GramianSlice {
  FrequencyCell cell;
  int size_exp = 0;
  std::vector<Cplx> entries;  // row-major, entry(k, k2)

  std::uint64_t dim() const;
  Cplx at(std::uint64_t k, std::uint64_t k2) const { return entries[k * dim() + k2]; }
  double hermitian_residual() const;
};

GramianSlice gramian_matrix(const WaveletFamily& fam, const FrequencyCell& cell, int S);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  FrequencyCell argmin_cell;
  FrequencyCell argmax_cell;
  int size_exp = 0;
  int resolution = 0;
};

// Spectral bounds of the truncated Gramian over every cell of D at the given
// resolution (defaults: S = 3, the family's native resolution).
FrameBounds frame_bounds_estimate(const WaveletFamily& fam, int S = 3,
                                  int resolution = -1);

// Monte-Carlo lower estimate of the Bessel bound: sup over random unit-norm
// test functions on test_window of the truncated quadratic sum
// sum_{l, |j| <= J, k < q^J} |<f, element>|^2.
double bessel_bound_estimate(const WaveletFamily& fam, SystemFlavor flavor, int trials,
                             int J, std::uint64_t seed, Window test_window = {2, 2});

}  // namespace lfw
