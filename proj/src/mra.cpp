#include "lfw/mra.hpp"

#include <algorithm>
#include <cmath>

namespace lfw {

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Translation range carrying any mass at scales j >= 1.
std::uint64_t fiber_k_count(const WaveletFamily& fam) {
  return pow_u64(fam.field()->q(), std::max(fam.max_support_exp() - 1, 0));
}

void require_wavelet(const WaveletFamily& fam) {
  const VerdictReport v = classify(fam);
  if (!v.orthonormal_basis)
    throw ContractError("family does not classify as an orthonormal wavelet basis");
}

}  // namespace

double dimension_function(const WaveletFamily& fam, const FrequencyCell& cell) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  const Laurent xi = cell.representative(f);
  const std::uint64_t kmax = fiber_k_count(fam);
  double sum = 0.0;
  for (std::uint64_t k = 0; k < kmax; ++k) {
    const Laurent arg0 = xi + lattice_point(f, k);
    const int v = arg0.valuation();
    if (v == kInfValuation) continue;
    const int j_lo = std::max(1, v - fam.vanish_level() + 1);
    for (int j = j_lo; j <= v + fam.max_support_exp(); ++j) {
      const Laurent arg = Laurent::prime_power(f, -j) * arg0;
      for (int l = 0; l < fam.size(); ++l) sum += std::norm(fam.member_hat(l).eval(arg));
    }
  }
  return sum;
}

double DimensionMap::max_deviation(double target) const {
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - target));
  return worst;
}

DimensionMap dimension_map(const WaveletFamily& fam, int resolution) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  if (resolution < 0) resolution = std::max(fam.max_const_exp(), 1);
  const std::uint64_t cells = pow_u64(f->q(), resolution);
  DimensionMap map;
  map.resolution = resolution;
  map.values.resize(cells);
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells); ++idx)
    map.values[idx] =
        dimension_function(fam, {0, resolution, static_cast<std::uint64_t>(idx)});
  return map;
}

std::vector<Cplx> fiber_vector(const WaveletFamily& fam, int l, int j, const Laurent& xi,
                               int size_exp) {
  if (l < 1 || l > fam.size()) throw DomainError("member index out of range");
  if (j < 1) throw DomainError("fibers are defined for scales j >= 1");
  const FieldRef& f = fam.field();
  const std::uint64_t dim = pow_u64(f->q(), size_exp);
  const Laurent expand = Laurent::prime_power(f, -j);
  std::vector<Cplx> out(dim);
  for (std::uint64_t k = 0; k < dim; ++k)
    out[k] = fam.member_hat(l - 1).eval(expand * (xi + lattice_point(f, k)));
  return out;
}

CheckReport check_fiber_identity(const WaveletFamily& fam, int size_exp, int resolution,
                                 ResidualThresholds thr) {
  const FieldRef& f = fam.field();
  require_wavelet(fam);
  const int mstar = fam.max_support_exp();
  if (size_exp < 0) size_exp = std::max(mstar - 1, 0);
  if (resolution < 0) resolution = std::max(fam.max_const_exp(), 1);
  const std::uint64_t cells = pow_u64(f->q(), resolution);
  const std::uint64_t dim = pow_u64(f->q(), size_exp);

  std::vector<double> residuals(cells, 0.0);
  std::vector<int> worst_j(cells, -1), worst_l(cells, -1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells); ++idx) {
    const FrequencyCell cell{0, resolution, static_cast<std::uint64_t>(idx)};
    const Laurent xi = cell.representative(f);
    const int jcap = cell.shell(f) + mstar;  // fibers vanish beyond
    std::vector<std::vector<Cplx>> fibers;   // (l, i) flattened, i = 1..jcap
    for (int i = 1; i <= jcap; ++i)
      for (int h = 1; h <= fam.size(); ++h)
        fibers.push_back(fiber_vector(fam, h, i, xi, size_exp));
    for (int j = 1; j <= jcap; ++j)
      for (int l = 1; l <= fam.size(); ++l) {
        const std::vector<Cplx>& omega = fibers[(j - 1) * fam.size() + (l - 1)];
        std::vector<Cplx> recon(dim, Cplx(0.0, 0.0));
        for (const std::vector<Cplx>& other : fibers) {
          Cplx coef = 0.0;
          for (std::uint64_t k = 0; k < dim; ++k) coef += omega[k] * std::conj(other[k]);
          if (coef == Cplx(0.0, 0.0)) continue;
          for (std::uint64_t k = 0; k < dim; ++k) recon[k] += coef * other[k];
        }
        double err2 = 0.0;
        for (std::uint64_t k = 0; k < dim; ++k) err2 += std::norm(omega[k] - recon[k]);
        const double err = std::sqrt(err2);
        if (err > residuals[idx]) {
          residuals[idx] = err;
          worst_j[idx] = j;
          worst_l[idx] = l;
        }
      }
  }

  CheckReport rep;
  rep.name = "fiber_reproducing_identity";
  rep.worst_cell = {0, resolution, 0};
  for (std::uint64_t idx = 0; idx < cells; ++idx)
    if (residuals[idx] > rep.max_residual) {
      rep.max_residual = residuals[idx];
      rep.worst_cell = {0, resolution, idx};
      rep.worst_j = worst_j[idx];
      rep.worst_l = worst_l[idx];
    }
  rep.worst_point = rep.worst_cell.representative(f).to_string();
  rep.status = thr.judge(rep.max_residual);
  rep.resolution = resolution;
  rep.cellwise_exact = resolution >= fam.max_const_exp() + mstar;
  return rep;
}

MraVerdict is_mra_wavelet(const WaveletFamily& fam) {
  require_wavelet(fam);
  MraVerdict out;
  out.map = dimension_map(fam);
  out.max_deviation = out.map.max_deviation(1.0);
  out.is_mra = out.max_deviation < 1e-9;
  out.expected_member_count = fam.size() == fam.field()->q() - 1;
  return out;
}

ScalingRecovery construct_scaling(const WaveletFamily& fam) {
  const FieldRef& f = fam.field();
  const MraVerdict gate = is_mra_wavelet(fam);
  if (!gate.is_mra)
    throw ContractError("scaling recovery requires a dimension-one wavelet family");
  if (!gate.expected_member_count)
    throw ContractError("scaling recovery requires exactly q-1 members");

  const int mstar = fam.max_support_exp();
  const int resolution = std::max(fam.max_const_exp() + mstar, 1);
  const int m_phi = std::max(mstar - 1, 0);
  const std::uint64_t cells = pow_u64(f->q(), resolution);
  const std::uint64_t kdim = pow_u64(f->q(), m_phi);

  std::vector<Cplx> values(cells * kdim, Cplx(0.0, 0.0));
  std::vector<CellProvenance> prov(cells);
  double ons_residual = 0.0;

  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    const FrequencyCell cell{0, resolution, idx};
    const Laurent xi = cell.representative(f);
    const int jcap = cell.shell(f) + mstar;
    std::vector<Cplx> chosen;
    int cj = 0, cl = 0;
    for (int j = 1; j <= jcap && cj == 0; ++j)
      for (int l = 1; l <= fam.size() && cj == 0; ++l) {
        std::vector<Cplx> fiber = fiber_vector(fam, l, j, xi, m_phi);
        bool nonzero = false;
        for (const Cplx& x : fiber) nonzero = nonzero || x != Cplx(0.0, 0.0);
        if (nonzero) {
          chosen = std::move(fiber);
          cj = j;
          cl = l;
        }
      }
    if (cj == 0)
      throw ContractError(
          "internal: dimension-one gate contradicted by an empty fiber stack");
    double nrm2 = 0.0;
    for (const Cplx& x : chosen) nrm2 += std::norm(x);
    const double nrm = std::sqrt(nrm2);
    double check = 0.0;
    for (std::uint64_t k = 0; k < kdim; ++k) {
      const Cplx uk = chosen[k] / nrm;
      values[idx + cells * k] = uk;  // phi_hat on the cell (xi + u(k))
      check += std::norm(uk);
    }
    ons_residual = std::max(ons_residual, std::abs(check - 1.0));
    prov[idx] = {idx, cj, cl, nrm};
  }

  ScalingRecovery out{
      TestFunction(f, Side::Frequency, Window{m_phi, resolution}, std::move(values)),
      resolution, std::move(prov), ons_residual, 0.0};
  out.l2_norm = norm2(out.phi_hat);
  return out;
}

ScalingFunctionChecks scaling_checks(const TestFunction& phi_hat) {
  if (phi_hat.side() != Side::Frequency)
    throw ParamError("scaling checks expect a frequency-side function");
  const FieldRef& f = phi_hat.field();
  const int m = phi_hat.window().m;
  const int n = phi_hat.window().n;
  ScalingFunctionChecks out;

  // Shift orthonormality over cells of D.
  const int res = std::max(n, 1);
  const std::uint64_t cells = pow_u64(f->q(), res);
  const std::uint64_t kdim = pow_u64(f->q(), m);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    const Laurent xi = FrequencyCell{0, res, idx}.representative(f);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < kdim; ++k)
      sum += std::norm(phi_hat.eval(xi + lattice_point(f, k)));
    out.shift_orthonormality_residual =
        std::max(out.shift_orthonormality_residual, std::abs(sum - 1.0));
  }

  // Contraction limit: exact stabilization at the cell containing 0.
  out.limit_modulus_residual = std::abs(std::abs(phi_hat.value(0)) - 1.0);
  out.stabilization_scale = m + n;

  // Refinement relation: extract m0 on cells of D, then verify everywhere.
  const int fres = n + 1;
  const std::uint64_t fcells = pow_u64(f->q(), fres);
  const Laurent contract = Laurent::prime_power(f, 1);
  const Laurent expand = Laurent::prime_power(f, -1);
  std::vector<Cplx> m0(fcells, Cplx(0.0, 0.0));
  std::vector<bool> defined(fcells, false);
  for (std::uint64_t idx = 0; idx < fcells; ++idx) {
    const Laurent eta = FrequencyCell{0, fres, idx}.representative(f);
    const Cplx denom = phi_hat.eval(eta);
    if (denom != Cplx(0.0, 0.0)) {
      m0[idx] = phi_hat.eval(expand * eta) / denom;
      defined[idx] = true;
    } else {
      ++out.refinement_undefined_cells;
    }
  }
  // Verification pass over the whole support window at matching resolution.
  const Window vw{m, std::max(fres - 1, 0)};
  for (std::uint64_t idx = 0; idx < cell_count(f, vw); ++idx) {
    const Laurent xi = FrequencyCell{vw.m, vw.n, idx}.representative(f);
    const Cplx lhs = phi_hat.eval(xi);
    const Laurent arg = contract * xi;
    const Cplx rhs_phi = phi_hat.eval(arg);
    // Cell of D at resolution fres containing the lattice reduction of pr*xi.
    const Laurent reduced = ring_part(arg);
    std::vector<std::pair<int, GfSym>> frac;
    for (const auto& [e, a] : reduced.terms())
      if (e - fres < 0) frac.emplace_back(e - fres, a);
    const std::uint64_t m0idx = lattice_index(Laurent(f, std::move(frac)));
    if (defined[m0idx]) {
      out.refinement_residual =
          std::max(out.refinement_residual, std::abs(lhs - m0[m0idx] * rhs_phi));
    } else if (lhs != Cplx(0.0, 0.0) && rhs_phi == Cplx(0.0, 0.0)) {
      // No filter value can reproduce a nonzero amplitude from zero.
      out.refinement_residual = std::max(out.refinement_residual, std::abs(lhs));
    }
  }
  return out;
}

ModulationMatrix modulation_matrix(const TestFunction& phi_hat, const WaveletFamily& fam,
                                   const FrequencyCell& cell) {
  const FieldRef& f = phi_hat.field();
  require_same_field(f, fam.field());
  const int q = f->q();
  if (fam.size() != q - 1)
    throw ContractError("modulation matrix requires exactly q-1 wavelet filters");

  ModulationMatrix out;
  out.cell = cell;
  out.dim = q;
  out.entries.assign(static_cast<std::size_t>(q) * q, Cplx(0.0, 0.0));

  const Laurent xi = cell.representative(f);
  const Laurent pr = Laurent::prime_power(f, 1);
  const Laurent expand = Laurent::prime_power(f, -1);
  for (int l2 = 0; l2 < q; ++l2) {
    const Laurent eta = pr * (xi + lattice_point(f, static_cast<std::uint64_t>(l2)));
    const Cplx denom = phi_hat.eval(eta);
    for (int l1 = 0; l1 < q; ++l1) {
      const Cplx numer = l1 == 0 ? phi_hat.eval(expand * eta)
                                 : fam.member_hat(l1 - 1).eval(expand * eta);
      if (denom == Cplx(0.0, 0.0)) {
        out.undefined.emplace_back(l1, l2);
      } else {
        out.entries[static_cast<std::size_t>(l1) * q + l2] = numer / denom;
      }
    }
  }

  if (out.undefined.empty()) {
    double worst = 0.0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        Cplx acc = 0.0;
        for (int l1 = 0; l1 < q; ++l1)
          acc += std::conj(out.at(l1, a)) * out.at(l1, b);
        worst = std::max(worst, std::abs(acc - (a == b ? 1.0 : 0.0)));
      }
    out.unitarity_residual = worst;
  } else {
    out.unitarity_residual = -1.0;  // not evaluable with gaps
  }
  return out;
}

ModulationMatrix modulation_worst(const TestFunction& phi_hat, const WaveletFamily& fam,
                                  int resolution) {
  const FieldRef& f = phi_hat.field();
  if (resolution < 0)
    resolution = std::max({phi_hat.window().n, fam.max_const_exp(), 1});
  const std::uint64_t cells = pow_u64(f->q(), resolution);
  ModulationMatrix worst;
  bool first = true;
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    ModulationMatrix m = modulation_matrix(phi_hat, fam, {0, resolution, idx});
    if (first || m.unitarity_residual > worst.unitarity_residual) {
      worst = std::move(m);
      first = false;
    }
  }
  return worst;
}

ScaleRatioReport scale_ratio_check(const TestFunction& phi_hat, const WaveletFamily& fam,
                                   int jmax) {
  const FieldRef& f = phi_hat.field();
  require_same_field(f, fam.field());
  fam.require_certificate();
  const int mstar = fam.max_support_exp();
  if (jmax < 0) jmax = std::max(mstar, 1);
  ScaleRatioReport out;
  out.jmax = jmax;

  const int res = std::max({phi_hat.window().n, fam.max_const_exp() + jmax, 1});
  const std::uint64_t cells = pow_u64(f->q(), res);
  const std::uint64_t kdim = pow_u64(f->q(), std::max(mstar - 1, phi_hat.window().m));

  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    const Laurent xi = FrequencyCell{0, res, idx}.representative(f);
    const Cplx denom = phi_hat.eval(xi);
    if (denom == Cplx(0.0, 0.0)) {
      ++out.undefined_cells;
      continue;
    }
    for (int j = 1; j <= jmax; ++j) {
      const Laurent expand = Laurent::prime_power(f, -j);
      for (int l = 1; l <= fam.size(); ++l) {
        const Cplx nu = fam.member_hat(l - 1).eval(expand * xi) / denom;
        double sum = 0.0;
        double prop = 0.0;
        for (std::uint64_t k = 0; k < kdim; ++k) {
          const Laurent arg = xi + lattice_point(f, k);
          const Cplx psi_val = fam.member_hat(l - 1).eval(expand * arg);
          sum += std::norm(psi_val);
          prop = std::max(prop, std::abs(psi_val - nu * phi_hat.eval(arg)));
        }
        out.norm_identity_residual =
            std::max(out.norm_identity_residual, std::abs(sum - std::norm(nu)));
        out.proportionality_residual = std::max(out.proportionality_residual, prop);
      }
    }
  }
  return out;
}

}  // namespace lfw
