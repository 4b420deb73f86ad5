#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfw/family.hpp"

namespace lfw {

// The cross-scale correlation sum t_s: for s not a multiple of q,
//   t_s(xi) = sum_l sum_{j>=0} psi_hat^l(pr^{-j} xi) conj(psi_hat^l(pr^{-j}(xi + u(s)))).
// Finite for certified families; DomainError for s in qN_0.
Cplx cross_correlation_sum(const WaveletFamily& fam, std::uint64_t s, const Laurent& xi);

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* to_string(CheckStatus s);

/// Residual bands: below pass -> pass, at or above fail -> fail, the gap in
/// between is reported as inconclusive so sloppy inputs cannot slip through.
struct ResidualThresholds {
  double pass_below = 1e-9;
  double fail_from = 1e-6;
  CheckStatus judge(double residual) const;
};

/// A cell of the region pr^{-support_exp} D at the given resolution.  Cells
/// are evaluated at an exact representative point: the grid anchor for
/// nonzero cells, pr^resolution for the cell containing 0 (whose anchor is 0
/// itself, where certified families vanish identically).
struct FrequencyCell {
  int support_exp = 0;
  int resolution = 1;
  std::uint64_t index = 0;

  Laurent representative(const FieldRef& f) const;
  std::uint64_t count(const FieldRef& f) const;  // cells in the region
  // Valuation of every point of a nonzero cell; resolution for the zero cell.
  int shell(const FieldRef& f) const;
};

struct CheckReport {
  std::string name;
  double max_residual = 0.0;
  FrequencyCell worst_cell;
  std::string worst_point;
  int worst_j = -1, worst_l = -1, worst_m = -1;
  std::int64_t worst_s = -1;
  CheckStatus status = CheckStatus::Pass;
  // True when every evaluated sum is provably constant on its cell, making
  // the per-cell values exact rather than representative samples.
  bool cellwise_exact = true;
  int resolution = 0;
  int jmax = -1;
  std::uint64_t smax = 0;
  // Worst residual per evaluated cell, for the CSV tables.
  std::vector<std::pair<std::uint64_t, double>> cell_residuals;
};

// Orthonormality of the affine system: for 0 <= j <= jmax and all member
// pairs, sum_k psi_hat^l(xi+u(k)) conj(psi_hat^m(pr^{-j}(xi+u(k)))) must be
// delta_{j,0} delta_{l,m} on every cell of D.  Defaults (-1) pick provably
// sufficient jmax and resolution.
CheckReport check_orthonormality(const WaveletFamily& fam, int jmax = -1,
                                 int resolution = -1,
                                 ResidualThresholds thr = {});

// Calderon sum: sum_l sum_{j in Z} |psi_hat^l(pr^{-j} xi)|^2 = 1, checked on
// the two annuli D \ P and P \ P^2 (dilation periodicity covers a.e. K).
CheckReport check_calderon(const WaveletFamily& fam, int resolution = -1,
                           ResidualThresholds thr = {});

// Vanishing of t_s for all s < smax outside qN_0, over a region covering the
// supports involved.
CheckReport check_cross_correlation(const WaveletFamily& fam, std::uint64_t smax = 0,
                                    int resolution = -1, ResidualThresholds thr = {});

struct NormIntegralReport {
  double value = 0.0;
  double target = 0.0;  // (q-1)/q
  double residual = 0.0;
  CheckStatus status = CheckStatus::Pass;
};

// Exact cellwise evaluation of sum_l int |psi_hat^l(xi)|^2 / |xi| dxi.
NormIntegralReport check_norm_integral(const WaveletFamily& fam,
                                       ResidualThresholds thr = {});

struct ClassifyOptions {
  int jmax = -1;
  std::uint64_t smax = 0;
  int resolution = -1;
  ResidualThresholds thresholds = {};
};

/// Outcome of the full characterization battery, with the two independent
/// equivalent routes to the wavelet verdict reported side by side.
struct VerdictReport {
  int family_size = 0;
  std::optional<int> vanish_level;
  std::vector<double> member_norms;
  double norms_max_residual = 0.0;

  CheckReport orthonormality;
  CheckReport calderon;
  CheckReport cross_correlation;
  NormIntegralReport norm_integral;

  bool orthonormal_system = false;
  bool tight_frame_constant_1 = false;
  bool orthonormal_basis = false;

  // Route A: tight frame conditions + unit norms.  Route B: orthonormality
  // + the norm integral.  The theory makes them equivalent.
  bool wavelet_by_frame_route = false;
  bool wavelet_by_ortho_route = false;
  bool routes_agree = false;
  bool conclusive = true;
};

VerdictReport classify(const WaveletFamily& fam, const ClassifyOptions& opts = {});

}  // namespace lfw
