#pragma once

#include <cstdint>
#include <vector>

#include "lfw/checks.hpp"
#include "lfw/family.hpp"

namespace lfw {

// Dimension function at one cell:
//   D(xi) = sum_l sum_{j>=1} sum_k |psi_hat^l(pr^{-j}(xi + u(k)))|^2.
double dimension_function(const WaveletFamily& fam, const FrequencyCell& cell);

struct DimensionMap {
  int resolution = 1;
  std::vector<double> values;  // one per cell of D

  double max_deviation(double target) const;
};

DimensionMap dimension_map(const WaveletFamily& fam, int resolution = -1);

// The fiber of member l (1-based) at scale j >= 1:
// entries psi_hat^l(pr^{-j}(xi + u(k))) for k < q^size_exp.
std::vector<Cplx> fiber_vector(const WaveletFamily& fam, int l, int j, const Laurent& xi,
                               int size_exp);

// Reproducing identity of the fibers of an orthonormal wavelet family:
// each fiber equals its expansion over all fibers.  ContractError unless the
// family classifies as an orthonormal basis.
CheckReport check_fiber_identity(const WaveletFamily& fam, int size_exp = -1,
                                 int resolution = -1, ResidualThresholds thr = {});

struct MraVerdict {
  bool is_mra = false;
  double max_deviation = 0.0;  // of the dimension map from 1
  DimensionMap map;
  // The construction needs exactly q-1 members; anything else only warns
  // here but gates the scaling recovery.
  bool expected_member_count = true;
};

// Gate: the family must classify as an orthonormal basis.
MraVerdict is_mra_wavelet(const WaveletFamily& fam);

struct CellProvenance {
  std::uint64_t cell = 0;
  int j = 0;       // chosen scale (smallest with a nonzero fiber)
  int l = 0;       // chosen member, 1-based (smallest)
  double norm = 0; // fiber norm used for normalization
};

/// Scaling function recovered from a dimension-one wavelet family, with the
/// per-cell construction record.
struct ScalingRecovery {
  TestFunction phi_hat;
  int resolution = 1;
  std::vector<CellProvenance> provenance;
  double shift_orthonormality_residual = 0.0;  // max | sum_k |phi_hat(xi+u(k))|^2 - 1 |
  double l2_norm = 0.0;
};

// Gates: is_mra_wavelet and family size q-1.
ScalingRecovery construct_scaling(const WaveletFamily& fam);

struct ScalingFunctionChecks {
  // sum_k |phi_hat(xi + u(k))|^2 = 1 per cell of D.
  double shift_orthonormality_residual = 0.0;
  // | |phi_hat| - 1 | on the cell at 0: the exact stabilized value of
  // |phi_hat(pr^j xi)| for j past the stabilization scale.
  double limit_modulus_residual = 0.0;
  int stabilization_scale = 0;
  // Consistency of the refinement relation phi_hat(xi) = m0(pr xi) phi_hat(pr xi).
  double refinement_residual = 0.0;
  std::uint64_t refinement_undefined_cells = 0;  // cells leaving m0 unconstrained
};

ScalingFunctionChecks scaling_checks(const TestFunction& phi_hat);

/// The q x q matrix of filter values [ m_{l1}(pr xi + pr u(l2)) ] at one
/// cell, with m_0 the refinement filter of phi and m_l the wavelet filters.
struct ModulationMatrix {
  FrequencyCell cell;
  int dim = 0;
  std::vector<Cplx> entries;  // row-major (l1, l2)
  double unitarity_residual = 0.0;
  std::vector<std::pair<int, int>> undefined;  // (l1, l2) with no defined filter value

  Cplx at(int l1, int l2) const { return entries[l1 * dim + l2]; }
};

ModulationMatrix modulation_matrix(const TestFunction& phi_hat, const WaveletFamily& fam,
                                   const FrequencyCell& cell);

// Worst unitarity residual over all cells of D at the given resolution
// (default: fine enough for the filters to be cellwise exact).
ModulationMatrix modulation_worst(const TestFunction& phi_hat, const WaveletFamily& fam,
                                  int resolution = -1);

struct ScaleRatioReport {
  int jmax = 0;
  // (f16)-type: | sum_k |psi_hat^l(pr^{-j}(xi+u(k)))|^2 - |nu|^2 |
  double norm_identity_residual = 0.0;
  // (f17)-type: | psi_hat^l(pr^{-j}(xi+u(k))) - nu * phi_hat(xi+u(k)) |
  double proportionality_residual = 0.0;
  std::uint64_t undefined_cells = 0;  // cells of D with phi_hat = 0
};

// The higher-scale ratio functions nu_j^l(xi) = psi_hat^l(pr^{-j} xi) / phi_hat(xi),
// solved cellwise where phi_hat is nonzero and verified against both identities.
ScaleRatioReport scale_ratio_check(const TestFunction& phi_hat, const WaveletFamily& fam,
                                   int jmax = -1);

}  // namespace lfw
