#include "lfw/affine.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace lfw {

TestFunction affine_element(const WaveletFamily& fam, const SystemIndex& idx) {
  if (idx.l < 1 || idx.l > fam.size()) throw DomainError("member index out of range");
  const TestFunction& psi = fam.member_point(idx.l - 1);
  if (idx.flavor == SystemFlavor::Affine || idx.j >= 0)
    return dilate(translate(psi, idx.k), idx.j);
  const double amp =
      std::pow(static_cast<double>(fam.field()->q()), 0.5 * idx.j);
  return scale_values(translate(dilate(psi, idx.j), idx.k), amp);
}

PairDecomposition decompose_pair(const FieldRef& f, std::uint64_t k, std::uint64_t k2) {
  if (k == k2) throw DomainError("pair decomposition needs k != k2");
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  int m = 0;
  {
    std::uint64_t a = k, b = k2;
    while (a % q == b % q) {
      ++m;
      a /= q;
      b /= q;
    }
  }
  std::uint64_t s = lattice_sub(f, k2, k);
  for (int i = 0; i < m; ++i) s /= q;
  // u(s) = pr^m (u(k2) - u(k)) holds by the digit structure; keep the check.
  const Laurent expect =
      Laurent::prime_power(f, m) * (lattice_point(f, k2) - lattice_point(f, k));
  if (lattice_point(f, s) != expect)
    throw Error("internal: pair decomposition failed verification");
  return {m, s};
}

Cplx gramian_entry(const WaveletFamily& fam, const FrequencyCell& cell, std::uint64_t k,
                   std::uint64_t k2) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  const Laurent xi = cell.representative(f);
  if (k == k2) {
    const Laurent arg0 = xi + lattice_point(f, k);
    const int v = arg0.valuation();
    if (v == kInfValuation) return 0.0;
    double sum = 0.0;
    for (int j = v - fam.vanish_level() + 1; j <= v + fam.max_support_exp(); ++j) {
      const Laurent arg = Laurent::prime_power(f, -j) * arg0;
      for (int l = 0; l < fam.size(); ++l) sum += std::norm(fam.member_hat(l).eval(arg));
    }
    return sum;
  }
  const PairDecomposition pd = decompose_pair(f, k, k2);
  const Laurent point =
      Laurent::prime_power(f, pd.m) * (xi + lattice_point(f, k));
  return cross_correlation_sum(fam, pd.s, point);
}

std::uint64_t GramianSlice::dim() const {
  std::uint64_t d = 1;
  while (d * d < entries.size()) ++d;
  return d;
}

double GramianSlice::hermitian_residual() const {
  const std::uint64_t d = dim();
  double worst = 0.0;
  for (std::uint64_t a = 0; a < d; ++a)
    for (std::uint64_t b = a; b < d; ++b)
      worst = std::max(worst, std::abs(at(a, b) - std::conj(at(b, a))));
  return worst;
}

GramianSlice gramian_matrix(const WaveletFamily& fam, const FrequencyCell& cell, int S) {
  const FieldRef& f = fam.field();
  std::uint64_t dim = 1;
  for (int i = 0; i < S; ++i) dim *= static_cast<std::uint64_t>(f->q());
  if (dim * dim > kMaxCells) throw ResolutionError("Gramian truncation too large");
  GramianSlice slice;
  slice.cell = cell;
  slice.size_exp = S;
  slice.entries.resize(dim * dim);
  for (std::uint64_t k = 0; k < dim; ++k)
    for (std::uint64_t k2 = 0; k2 < dim; ++k2)
      slice.entries[k * dim + k2] = gramian_entry(fam, cell, k, k2);
  return slice;
}

FrameBounds frame_bounds_estimate(const WaveletFamily& fam, int S, int resolution) {
  const FieldRef& f = fam.field();
  fam.require_certificate();
  if (resolution < 0) resolution = std::max(fam.max_const_exp(), 1);
  std::uint64_t cells = 1;
  for (int i = 0; i < resolution; ++i) cells *= static_cast<std::uint64_t>(f->q());

  std::vector<double> mins(cells), maxs(cells);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cells); ++idx) {
    const FrequencyCell cell{0, resolution, static_cast<std::uint64_t>(idx)};
    const GramianSlice slice = gramian_matrix(fam, cell, S);
    const std::uint64_t d = slice.dim();
    Eigen::MatrixXcd mat(d, d);
    for (std::uint64_t a = 0; a < d; ++a)
      for (std::uint64_t b = 0; b < d; ++b) mat(a, b) = slice.at(a, b);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat,
                                                           Eigen::EigenvaluesOnly);
    mins[idx] = solver.eigenvalues().minCoeff();
    maxs[idx] = solver.eigenvalues().maxCoeff();
  }

  FrameBounds out;
  out.size_exp = S;
  out.resolution = resolution;
  out.lower = mins[0];
  out.upper = maxs[0];
  out.argmin_cell = {0, resolution, 0};
  out.argmax_cell = {0, resolution, 0};
  for (std::uint64_t idx = 1; idx < cells; ++idx) {
    if (mins[idx] < out.lower) {
      out.lower = mins[idx];
      out.argmin_cell = {0, resolution, idx};
    }
    if (maxs[idx] > out.upper) {
      out.upper = maxs[idx];
      out.argmax_cell = {0, resolution, idx};
    }
  }
  return out;
}

double bessel_bound_estimate(const WaveletFamily& fam, SystemFlavor flavor, int trials,
                             int J, std::uint64_t seed, Window test_window) {
  const FieldRef& f = fam.field();
  std::uint64_t kmax = 1;
  for (int i = 0; i < J; ++i) kmax *= static_cast<std::uint64_t>(f->q());

  // Materialize the truncated system once, on one shared window.
  std::vector<TestFunction> elements;
  for (int l = 1; l <= fam.size(); ++l)
    for (int j = -J; j <= J; ++j)
      for (std::uint64_t k = 0; k < kmax; ++k)
        elements.push_back(affine_element(fam, {l, j, k, flavor}));
  Window common = test_window;
  for (const TestFunction& e : elements) {
    common.m = std::max(common.m, e.window().m);
    common.n = std::max(common.n, e.window().n);
  }
  std::vector<std::vector<Cplx>> mats;
  mats.reserve(elements.size());
  for (const TestFunction& e : elements) mats.push_back(unify_window(e, common).values());
  elements.clear();

  const std::uint64_t test_cells = cell_count(f, test_window);
  const double measure = std::pow(static_cast<double>(f->q()), -common.n);
  std::uint64_t replicate = 1;  // sub-cells of one test cell on the common window
  for (int i = 0; i < common.n - test_window.n; ++i)
    replicate *= static_cast<std::uint64_t>(f->q());

  std::vector<double> per_trial(trials);
#pragma omp parallel for schedule(dynamic)
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Cplx> v(test_cells);
    double ss = 0.0;
    for (std::uint64_t n = 0; n < test_cells; ++n) {
      v[n] = Cplx(gauss(rng), gauss(rng));
      ss += std::norm(v[n]);
    }
    const double scale =
        1.0 / std::sqrt(ss * std::pow(static_cast<double>(f->q()), -test_window.n));
    for (Cplx& x : v) x *= scale;  // unit L2 norm

    double total = 0.0;
    for (const std::vector<Cplx>& e : mats) {
      // <f, e> on the common window; f replicates over the finer cells.
      Cplx ip = 0.0;
      for (std::uint64_t src = 0; src < test_cells; ++src) {
        if (v[src] == Cplx(0.0, 0.0)) continue;
        Cplx block = 0.0;
        for (std::uint64_t r = 0; r < replicate; ++r)
          block += std::conj(e[src * replicate + r]);
        ip += v[src] * block;
      }
      total += std::norm(ip * measure);
    }
    per_trial[trial] = total;
  }
  double best = 0.0;
  for (double t : per_trial) best = std::max(best, t);
  return best;
}

}  // namespace lfw
