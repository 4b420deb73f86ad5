#include <doctest.h>

#include <random>

#include "lfw/affine.hpp"
#include "lfw/families.hpp"
#include "lfw/transform.hpp"

using namespace lfw;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Certified non-wavelet family with random amplitudes outside the ring of
// integers: enough structure for Gramian plumbing without any frame property.
WaveletFamily random_certified_family(const FieldRef& f, std::mt19937_64& rng,
                                      int members) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Window w{2, 1};
  std::vector<TestFunction> hats;
  for (int l = 0; l < members; ++l) {
    std::vector<Cplx> v(cell_count(f, w), Cplx(0.0, 0.0));
    for (std::uint64_t n = static_cast<std::uint64_t>(f->q()); n < v.size(); ++n)
      v[n] = 0.5 * Cplx(gauss(rng), gauss(rng));
    hats.emplace_back(f, Side::Frequency, w, std::move(v));
  }
  return WaveletFamily(std::move(hats));
}

// Independent entry oracle: literal sum over the transforms of the
// quasi-affine generators, truncated where band limits make terms vanish.
Cplx gramian_entry_bruteforce(const WaveletFamily& fam, const FrequencyCell& cell,
                              std::uint64_t k, std::uint64_t k2, int S) {
  const FieldRef& f = fam.field();
  const Laurent a = cell.representative(f) + lattice_point(f, k);
  const Laurent b = cell.representative(f) + lattice_point(f, k2);
  const int j_lo = -(fam.max_support_exp() + cell.resolution + 1);
  const int j_hi = S + fam.vanish_level();
  Cplx sum = 0.0;
  for (int l = 1; l <= fam.size(); ++l)
    for (int j = j_lo; j <= j_hi; ++j)
      for (std::uint64_t d = 0; d < (j >= 0 ? ipow(f->q(), j) : 1); ++d) {
        const TestFunction el = affine_element(fam, {l, j, d, SystemFlavor::QuasiAffine});
        const TestFunction hat = fourier_forward(el);
        sum += hat.eval(a) * std::conj(hat.eval(b));
      }
  return sum;
}

}  // namespace

TEST_SUITE("affine") {

TEST_CASE("system elements: identity, norms, flavor coincidence") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}}) {
    const FieldRef f = FieldParams::make(p, c);
    const WaveletFamily& fam = haar_family(f).wavelets;
    const double base = norm2(fam.member_point(0));
    CHECK(max_abs_diff(affine_element(fam, {1, 0, 0, SystemFlavor::Affine}),
                       fam.member_point(0)) == 0.0);
    for (int j = -2; j <= 2; ++j)
      for (std::uint64_t k : {0ull, 1ull, 5ull}) {
        CHECK(norm2(affine_element(fam, {1, j, k, SystemFlavor::Affine})) ==
              doctest::Approx(base).epsilon(1e-12));
        if (j >= 0) {
          // flavors coincide for nonnegative scales
          CHECK(max_abs_diff(affine_element(fam, {1, j, k, SystemFlavor::Affine}),
                             affine_element(fam, {1, j, k, SystemFlavor::QuasiAffine})) ==
                0.0);
        }
      }
    // quasi-affine renormalization at negative scales
    const TestFunction qa = affine_element(fam, {1, -1, 0, SystemFlavor::QuasiAffine});
    const TestFunction aff = affine_element(fam, {1, -1, 0, SystemFlavor::Affine});
    CHECK(max_abs_diff(qa, scale_values(aff, std::pow(double(f->q()), -0.5))) < 1e-15);
  }
}

TEST_CASE("translation reindexing law for quasi-affine elements") {
  // translate(quasi(j,d), k) = affine(j, k q^j + d) for j >= 0
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily& fam = haar_family(f).wavelets;
  for (int j = 0; j <= 2; ++j)
    for (std::uint64_t k = 0; k < 4; ++k)
      for (std::uint64_t d = 0; d < ipow(f->q(), j); ++d) {
        const TestFunction lhs =
            translate(affine_element(fam, {1, j, d, SystemFlavor::QuasiAffine}), k);
        const TestFunction rhs =
            affine_element(fam, {1, j, k * ipow(f->q(), j) + d, SystemFlavor::Affine});
        CHECK(max_abs_diff(lhs, rhs) < 1e-15);
      }
}

TEST_CASE("pair decomposition frozen examples") {
  const FieldRef f = FieldParams::make(2, 1);
  CHECK_THROWS_AS(decompose_pair(f, 3, 3), DomainError);

  const PairDecomposition a = decompose_pair(f, 1, 3);
  CHECK(a.m == 1);
  CHECK(a.s == 1);

  const PairDecomposition b = decompose_pair(f, 0, 1);
  CHECK(b.m == 0);
  CHECK(b.s == 1);

  // difference divisible by exactly q^3
  for (std::uint64_t r : {1ull, 3ull, 5ull}) {
    const PairDecomposition d = decompose_pair(f, 6, 6 + 8 * r);
    CHECK(d.m == 3);
    CHECK(d.s % f->q() != 0);
  }
}

TEST_CASE("pair decomposition properties at random") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const FieldRef f = FieldParams::make(p, c);
    std::mt19937_64 rng(7 * p + c);
    std::uniform_int_distribution<std::uint64_t> pick(0, 500);
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t k = pick(rng), k2 = pick(rng);
      if (k == k2) continue;
      const PairDecomposition d = decompose_pair(f, k, k2);
      CHECK(d.s % f->q() != 0);
      CHECK(lattice_point(f, d.s) ==
            Laurent::prime_power(f, d.m) *
                (lattice_point(f, k2) - lattice_point(f, k)));
      // m really is the q-adic valuation of the integer difference
      const std::uint64_t diff = k > k2 ? k - k2 : k2 - k;
      std::uint64_t mod = 1;
      for (int i = 0; i < d.m; ++i) mod *= f->q();
      CHECK(diff % mod == 0);
      CHECK(diff % (mod * f->q()) != 0);
    }
  }
}

TEST_CASE("Haar Gramian is the identity") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily& fam = haar_family(f).wavelets;
  for (std::uint64_t cell = 0; cell < 2; ++cell) {
    const GramianSlice slice = gramian_matrix(fam, {0, 1, cell}, 2);
    CHECK(slice.dim() == 4);
    CHECK(slice.hermitian_residual() < 1e-12);
    for (std::uint64_t a = 0; a < 4; ++a)
      for (std::uint64_t b = 0; b < 4; ++b)
        CHECK(std::abs(slice.at(a, b) - (a == b ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("zero family gives the zero matrix") {
  const FieldRef f = FieldParams::make(2, 1);
  std::vector<TestFunction> z;
  z.push_back(TestFunction::zero(f, Side::Frequency, {1, 0}));
  const WaveletFamily fam(std::move(z));
  const GramianSlice slice = gramian_matrix(fam, {0, 1, 1}, 2);
  for (const Cplx& e : slice.entries) CHECK(e == Cplx(0.0, 0.0));
}

TEST_CASE("annulus Gramian couples the deep translation pair") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily fam = annulus_control(f);
  const GramianSlice slice = gramian_matrix(fam, {0, 1, 1}, 2);
  for (std::uint64_t a = 0; a < 4; ++a) CHECK(std::abs(slice.at(a, a) - 1.0) < 1e-12);
  CHECK(std::abs(slice.at(2, 3) - 1.0) < 1e-12);
  CHECK(std::abs(slice.at(3, 2) - 1.0) < 1e-12);
  CHECK(std::abs(slice.at(0, 1)) < 1e-12);
  CHECK(std::abs(slice.at(1, 0)) < 1e-12);
}

TEST_CASE("gramian entries match the quasi-affine bruteforce oracle") {
  const FieldRef f = FieldParams::make(2, 1);
  std::mt19937_64 rng(1234);

  std::vector<WaveletFamily> families;
  families.push_back(haar_family(f).wavelets);
  families.push_back(annulus_control(f));
  families.push_back(random_certified_family(f, rng, 2));

  for (const WaveletFamily& fam : families) {
    const int S = 2;
    for (std::uint64_t cellidx = 0; cellidx < 4; ++cellidx) {
      const FrequencyCell cell{0, 2, cellidx};
      for (std::uint64_t k = 0; k < 4; ++k)
        for (std::uint64_t k2 = 0; k2 < 4; ++k2) {
          const Cplx impl = gramian_entry(fam, cell, k, k2);
          const Cplx oracle = gramian_entry_bruteforce(fam, cell, k, k2, S);
          CHECK(std::abs(impl - oracle) < 1e-10);
        }
    }
  }
}

TEST_CASE("gramian slices are Hermitian and positive semidefinite") {
  const FieldRef f = FieldParams::make(3, 1);
  std::mt19937_64 rng(77);
  const WaveletFamily fam = random_certified_family(f, rng, 2);
  const FrameBounds fb = frame_bounds_estimate(fam, 2, 1);
  CHECK(fb.lower >= -1e-8);  // PSD up to numerics
  for (std::uint64_t cellidx = 0; cellidx < 3; ++cellidx) {
    const GramianSlice slice = gramian_matrix(fam, {0, 1, cellidx}, 2);
    CHECK(slice.hermitian_residual() < 1e-10);
  }
}

TEST_CASE("frame bounds: Haar, annulus, quadratic scaling") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  const FrameBounds fb = frame_bounds_estimate(haar, 3);
  CHECK(fb.lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fb.upper == doctest::Approx(1.0).epsilon(1e-9));

  const FrameBounds an = frame_bounds_estimate(annulus_control(f), 2);
  CHECK(an.upper == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(an.lower) < 1e-9);

  // amplitude scaling moves both bounds quadratically
  std::vector<TestFunction> scaled;
  scaled.push_back(scale_values(haar.member_hat(0), 2.0));
  const FrameBounds sb = frame_bounds_estimate(WaveletFamily(std::move(scaled)), 3);
  CHECK(sb.lower == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(sb.upper == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("uncertified families are rejected by scale sums") {
  const FieldRef f = FieldParams::make(2, 1);
  std::vector<TestFunction> bad;
  bad.push_back(TestFunction::ideal_indicator(f, Side::Frequency, 0));  // nonzero at 0
  const WaveletFamily fam(std::move(bad));
  CHECK_FALSE(fam.certified());
  CHECK_THROWS_AS(gramian_entry(fam, {0, 1, 0}, 0, 0), CertificateError);
  CHECK_THROWS_AS(frame_bounds_estimate(fam, 2), CertificateError);
}

TEST_CASE("bessel estimates: Haar near one, flavors agree, zero family zero") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  const double affine = bessel_bound_estimate(haar, SystemFlavor::Affine, 40, 4, 99);
  const double quasi = bessel_bound_estimate(haar, SystemFlavor::QuasiAffine, 40, 4, 99);
  CHECK(affine >= 0.95);
  CHECK(affine <= 1.0 + 1e-9);
  CHECK(std::abs(affine - quasi) / affine < 0.02);

  std::vector<TestFunction> z;
  z.push_back(TestFunction::zero(f, Side::Frequency, {1, 0}));
  CHECK(bessel_bound_estimate(WaveletFamily(std::move(z)), SystemFlavor::Affine, 5, 2,
                              1) == 0.0);
}

TEST_CASE("bessel estimate is deterministic in the seed") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  const double a = bessel_bound_estimate(haar, SystemFlavor::Affine, 10, 3, 4242);
  const double b = bessel_bound_estimate(haar, SystemFlavor::Affine, 10, 3, 4242);
  CHECK(a == b);
}

}  // TEST_SUITE
