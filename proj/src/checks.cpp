#include "lfw/checks.hpp"

#include <algorithm>
#include <cmath>

namespace lfw {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

CheckStatus ResidualThresholds::judge(double residual) const {
  if (residual < pass_below) return CheckStatus::Pass;
  if (residual >= fail_from) return CheckStatus::Fail;
  return CheckStatus::Inconclusive;
}

Laurent FrequencyCell::representative(const FieldRef& f) const {
  if (index == 0) return Laurent::prime_power(f, resolution);
  return Laurent::prime_power(f, resolution) * lattice_point(f, index);
}

std::uint64_t FrequencyCell::count(const FieldRef& f) const {
  std::uint64_t cells = 1;
  for (int i = 0; i < support_exp + resolution; ++i)
    cells *= static_cast<std::uint64_t>(f->q());
  return cells;
}

int FrequencyCell::shell(const FieldRef& f) const {
  if (index == 0) return resolution;
  return resolution - scale_of(f, index);
}

Cplx cross_correlation_sum(const WaveletFamily& fam, std::uint64_t s, const Laurent& xi) {
  const FieldRef& f = fam.field();
  if (s == 0 || s % static_cast<std::uint64_t>(f->q()) == 0)
    throw DomainError("t_s requires s outside qN_0");
  fam.require_certificate();
  const Laurent shifted = xi + lattice_point(f, s);
  const int v1 = xi.valuation();
  const int v2 = shifted.valuation();
  if (v1 == kInfValuation || v2 == kInfValuation) return 0.0;
  const int j_hi = fam.max_support_exp() + std::min(v1, v2);
  Cplx sum = 0.0;
  for (int j = 0; j <= j_hi; ++j) {
    const Laurent expand = Laurent::prime_power(f, -j);
    const Laurent a = expand * xi;
    const Laurent b = expand * shifted;
    for (int l = 0; l < fam.size(); ++l)
      sum += fam.member_hat(l).eval(a) * std::conj(fam.member_hat(l).eval(b));
  }
  return sum;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

struct WorstTracker {
  double residual = -1.0;
  std::uint64_t cell = 0;
  int j = -1, l = -1, m = -1;
  std::int64_t s = -1;

  void offer(double r, std::uint64_t cell_, int j_ = -1, int l_ = -1, int m_ = -1,
             std::int64_t s_ = -1) {
    if (r > residual) {
      residual = r;
      cell = cell_;
      j = j_;
      l = l_;
      m = m_;
      s = s_;
    }
  }
};

}  // namespace

CheckReport check_orthonormality(const WaveletFamily& fam, int jmax, int resolution,
                                 ResidualThresholds thr) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  const int l0 = fam.vanish_level();
  const int mstar = fam.max_support_exp();
  const int nstar = fam.max_const_exp();
  if (jmax < 0) jmax = mstar + std::max(l0, 0);
  if (resolution < 0) resolution = std::max(nstar + mstar + std::max(l0, 0), 1);

  const std::uint64_t cells = pow_u64(f->q(), resolution);
  const std::uint64_t kmax = pow_u64(f->q(), mstar);

  std::vector<WorstTracker> per_cell(cells);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells); ++idx) {
    const FrequencyCell cell{0, resolution, static_cast<std::uint64_t>(idx)};
    const Laurent xi = cell.representative(f);
    for (int j = 0; j <= jmax; ++j) {
      const Laurent expand = Laurent::prime_power(f, -j);
      for (int l = 0; l < fam.size(); ++l)
        for (int m = 0; m < fam.size(); ++m) {
          Cplx sum = 0.0;
          for (std::uint64_t k = 0; k < kmax; ++k) {
            const Laurent arg = xi + lattice_point(f, k);
            sum += fam.member_hat(l).eval(arg) *
                   std::conj(fam.member_hat(m).eval(expand * arg));
          }
          const double target = (j == 0 && l == m) ? 1.0 : 0.0;
          per_cell[idx].offer(std::abs(sum - target), static_cast<std::uint64_t>(idx),
                              j, l, m);
        }
    }
  }

  WorstTracker worst;
  CheckReport rep;
  rep.name = "orthonormality";
  rep.cell_residuals.reserve(cells);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    worst.offer(per_cell[idx].residual, idx, per_cell[idx].j, per_cell[idx].l,
                per_cell[idx].m);
    rep.cell_residuals.emplace_back(idx, std::max(per_cell[idx].residual, 0.0));
  }

  rep.max_residual = std::max(worst.residual, 0.0);
  rep.worst_cell = {0, resolution, worst.cell};
  rep.worst_point = rep.worst_cell.representative(f).to_string();
  rep.worst_j = worst.j;
  rep.worst_l = worst.l;
  rep.worst_m = worst.m;
  rep.status = thr.judge(rep.max_residual);
  rep.cellwise_exact = resolution >= nstar + mstar + std::max(l0, 0);
  rep.resolution = resolution;
  rep.jmax = jmax;
  return rep;
}

CheckReport check_calderon(const WaveletFamily& fam, int resolution,
                           ResidualThresholds thr) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  const int l0 = fam.vanish_level();
  const int mstar = fam.max_support_exp();
  const int nstar = fam.max_const_exp();
  if (resolution < 0) resolution = std::max(nstar + mstar + 1, 2);

  // Cells of the annuli D \ P and P \ P^2: indices with scale res or res-1.
  const std::uint64_t lo = pow_u64(f->q(), resolution - 2);
  const std::uint64_t hi = pow_u64(f->q(), resolution);

  std::vector<double> residuals(hi - lo);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(hi - lo); ++i) {
    const std::uint64_t idx = lo + static_cast<std::uint64_t>(i);
    const FrequencyCell cell{0, resolution, idx};
    const Laurent xi = cell.representative(f);
    const int v = cell.shell(f);
    double sum = 0.0;
    for (int j = v - l0 + 1; j <= v + mstar; ++j) {
      const Laurent arg = Laurent::prime_power(f, -j) * xi;
      for (int l = 0; l < fam.size(); ++l) sum += std::norm(fam.member_hat(l).eval(arg));
    }
    residuals[i] = std::abs(sum - 1.0);
  }

  WorstTracker worst;
  CheckReport rep;
  rep.name = "calderon_sum";
  rep.cell_residuals.reserve(residuals.size());
  for (std::uint64_t i = 0; i < residuals.size(); ++i) {
    worst.offer(residuals[i], lo + i);
    rep.cell_residuals.emplace_back(lo + i, residuals[i]);
  }

  rep.max_residual = std::max(worst.residual, 0.0);
  rep.worst_cell = {0, resolution, worst.cell};
  rep.worst_point = rep.worst_cell.representative(f).to_string();
  rep.status = thr.judge(rep.max_residual);
  rep.cellwise_exact = resolution >= nstar + mstar + 1;
  rep.resolution = resolution;
  return rep;
}

CheckReport check_cross_correlation(const WaveletFamily& fam, std::uint64_t smax,
                                    int resolution, ResidualThresholds thr) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  const int l0 = fam.vanish_level();
  const int mstar = fam.max_support_exp();
  const int nstar = fam.max_const_exp();
  if (smax == 0) smax = pow_u64(f->q(), mstar);
  if (resolution < 0)
    resolution = std::max({nstar + mstar - 1, mstar + std::max(l0, 0), 1});

  const std::uint64_t cells = pow_u64(f->q(), mstar + resolution);
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());

  std::vector<WorstTracker> per_cell(cells);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells); ++idx) {
    const FrequencyCell cell{mstar, resolution, static_cast<std::uint64_t>(idx)};
    const Laurent xi = cell.representative(f);
    for (std::uint64_t s = 1; s < smax; ++s) {
      if (s % q == 0) continue;
      const double r = std::abs(cross_correlation_sum(fam, s, xi));
      per_cell[idx].offer(r, static_cast<std::uint64_t>(idx), -1, -1, -1,
                          static_cast<std::int64_t>(s));
    }
  }

  WorstTracker worst;
  CheckReport rep;
  rep.name = "cross_correlation_vanishing";
  rep.cell_residuals.reserve(cells);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    worst.offer(per_cell[idx].residual, idx, -1, -1, -1, per_cell[idx].s);
    rep.cell_residuals.emplace_back(idx, std::max(per_cell[idx].residual, 0.0));
  }

  rep.max_residual = std::max(worst.residual, 0.0);
  rep.worst_cell = {mstar, resolution, worst.cell};
  rep.worst_point = rep.worst_cell.representative(f).to_string();
  rep.worst_s = worst.s;
  rep.status = thr.judge(rep.max_residual);
  rep.cellwise_exact =
      resolution >= nstar + mstar - 1 && resolution >= mstar + std::max(l0, 0);
  rep.resolution = resolution;
  rep.smax = smax;
  return rep;
}

NormIntegralReport check_norm_integral(const WaveletFamily& fam, ResidualThresholds thr) {
  const FieldRef& f = fam.field();
  fam.require_certificate();  // zero cell must carry amplitude 0
  const double q = static_cast<double>(f->q());
  double value = 0.0;
  for (int l = 0; l < fam.size(); ++l) {
    const TestFunction& m = fam.member_hat(l);
    for (std::uint64_t n = 1; n < m.cells(); ++n) {
      const double a2 = std::norm(m.value(n));
      if (a2 != 0.0) value += a2 * std::pow(q, -scale_of(f, n));
    }
  }
  NormIntegralReport rep;
  rep.value = value;
  rep.target = (q - 1.0) / q;
  rep.residual = std::abs(value - rep.target);
  rep.status = thr.judge(rep.residual);
  return rep;
}

VerdictReport classify(const WaveletFamily& fam, const ClassifyOptions& opts) {
  VerdictReport v;
  v.family_size = fam.size();
  v.vanish_level = fam.certified() ? std::optional<int>(fam.vanish_level()) : std::nullopt;

  v.orthonormality = check_orthonormality(fam, opts.jmax, opts.resolution, opts.thresholds);
  v.calderon = check_calderon(fam, -1, opts.thresholds);
  v.cross_correlation =
      check_cross_correlation(fam, opts.smax, opts.resolution, opts.thresholds);
  v.norm_integral = check_norm_integral(fam, opts.thresholds);

  v.member_norms.reserve(fam.size());
  for (int l = 0; l < fam.size(); ++l) v.member_norms.push_back(norm2(fam.member_hat(l)));
  for (double n : v.member_norms)
    v.norms_max_residual = std::max(v.norms_max_residual, std::abs(n - 1.0));
  const CheckStatus norms_status = opts.thresholds.judge(v.norms_max_residual);

  v.orthonormal_system = v.orthonormality.status == CheckStatus::Pass;
  v.tight_frame_constant_1 = v.calderon.status == CheckStatus::Pass &&
                             v.cross_correlation.status == CheckStatus::Pass;
  v.orthonormal_basis = v.tight_frame_constant_1 && norms_status == CheckStatus::Pass;

  v.wavelet_by_frame_route = v.orthonormal_basis;
  v.wavelet_by_ortho_route =
      v.orthonormal_system && v.norm_integral.status == CheckStatus::Pass;
  v.routes_agree = v.wavelet_by_frame_route == v.wavelet_by_ortho_route;

  v.conclusive = v.orthonormality.status != CheckStatus::Inconclusive &&
                 v.calderon.status != CheckStatus::Inconclusive &&
                 v.cross_correlation.status != CheckStatus::Inconclusive &&
                 v.norm_integral.status != CheckStatus::Inconclusive &&
                 norms_status != CheckStatus::Inconclusive;
  return v;
}

}  // namespace lfw
