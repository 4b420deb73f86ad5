#include <doctest.h>

#include <random>

#include "lfw/checks.hpp"
#include "lfw/families.hpp"
#include "lfw/transform.hpp"

using namespace lfw;

namespace {

// Calderon sum at an exact point, written independently of the check's cell
// enumeration.
double calderon_at(const WaveletFamily& fam, const Laurent& xi) {
  const int v = xi.valuation();
  REQUIRE(v != kInfValuation);
  double sum = 0.0;
  for (int j = v - fam.vanish_level() + 1; j <= v + fam.max_support_exp(); ++j) {
    const Laurent arg = Laurent::prime_power(fam.field(), -j) * xi;
    for (int l = 0; l < fam.size(); ++l)
      sum += std::norm(fam.member_hat(l).eval(arg));
  }
  return sum;
}

WaveletFamily scaled_family(const WaveletFamily& fam, Cplx factor) {
  std::vector<TestFunction> hats;
  for (int l = 0; l < fam.size(); ++l)
    hats.push_back(scale_values(fam.member_hat(l), factor));
  return WaveletFamily(std::move(hats));
}

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("cross correlation sum: domain and frozen values") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  CHECK_THROWS_AS(cross_correlation_sum(haar, 0, Laurent::one(f)), DomainError);
  CHECK_THROWS_AS(cross_correlation_sum(haar, 2, Laurent::one(f)), DomainError);

  // Haar: t_1 vanishes identically
  for (std::uint64_t n = 0; n < 8; ++n)
    CHECK(std::abs(cross_correlation_sum(haar, 1, lattice_point(f, n))) == 0.0);
  CHECK(std::abs(cross_correlation_sum(haar, 1, Laurent::prime_power(f, 2))) == 0.0);

  // annulus: t_1 is exactly the indicator of the shell |xi| = q^2
  const WaveletFamily an = annulus_control(f);
  CHECK(std::abs(cross_correlation_sum(an, 1, lattice_point(f, 2)) - 1.0) < 1e-15);
  CHECK(std::abs(cross_correlation_sum(an, 1, lattice_point(f, 3)) - 1.0) < 1e-15);
  CHECK(std::abs(cross_correlation_sum(an, 1, lattice_point(f, 1))) == 0.0);
  CHECK(std::abs(cross_correlation_sum(an, 1, Laurent::one(f))) == 0.0);

  // zero family
  std::vector<TestFunction> z;
  z.push_back(TestFunction::zero(f, Side::Frequency, {1, 0}));
  const WaveletFamily zero(std::move(z));
  CHECK(std::abs(cross_correlation_sum(zero, 1, lattice_point(f, 2))) == 0.0);
}

TEST_CASE("orthonormality check: Haar passes, distortions show the expected residuals") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const FieldRef f = FieldParams::make(p, c);
    const WaveletFamily haar = haar_family(f).wavelets;
    const CheckReport rep = check_orthonormality(haar);
    CHECK(rep.status == CheckStatus::Pass);
    CHECK(rep.max_residual < 1e-12);
    CHECK(rep.cellwise_exact);
  }

  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;

  // members scaled by 1/2: diagonal sum drops to 1/4
  const CheckReport scaled = check_orthonormality(scaled_family(haar, 0.5));
  CHECK(scaled.status == CheckStatus::Fail);
  CHECK(scaled.max_residual == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(scaled.worst_j == 0);

  // duplicated member: cross term hits 1 at j=0, l != m
  std::vector<TestFunction> dup = {haar.member_hat(0), haar.member_hat(0)};
  const CheckReport twin = check_orthonormality(WaveletFamily(std::move(dup)));
  CHECK(twin.status == CheckStatus::Fail);
  CHECK(twin.max_residual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(twin.worst_j == 0);
  CHECK(twin.worst_l != twin.worst_m);
}

TEST_CASE("calderon check: Haar and annulus pass, scaling breaks it") {
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  CHECK(check_calderon(haar).max_residual < 1e-12);
  CHECK(check_calderon(annulus_control(f)).max_residual < 1e-12);

  const CheckReport doubled = check_calderon(scaled_family(haar, 2.0));
  CHECK(doubled.status == CheckStatus::Fail);
  CHECK(doubled.max_residual == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("calderon sum is dilation periodic") {
  const FieldRef f = FieldParams::make(2, 1);
  std::mt19937_64 rng(15);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Cplx> v(cell_count(f, {2, 1}), Cplx(0.0, 0.0));
  for (std::uint64_t n = 2; n < v.size(); ++n) v[n] = Cplx(gauss(rng), gauss(rng));
  std::vector<TestFunction> hats;
  hats.emplace_back(f, Side::Frequency, Window{2, 1}, std::move(v));
  const WaveletFamily fam(std::move(hats));

  for (std::uint64_t n : {1ull, 2ull, 3ull, 5ull, 7ull}) {
    const Laurent xi = lattice_point(f, n);
    const double here = calderon_at(fam, xi);
    CHECK(calderon_at(fam, Laurent::prime_power(f, 1) * xi) ==
          doctest::Approx(here).epsilon(1e-12));
    CHECK(calderon_at(fam, Laurent::prime_power(f, -1) * xi) ==
          doctest::Approx(here).epsilon(1e-12));
  }

  // the two annuli of the check region carry the same residual pattern
  const CheckReport rep = check_calderon(fam);
  for (const auto& [idx, res] : rep.cell_residuals) {
    const FrequencyCell cell{0, rep.resolution, idx};
    if (cell.shell(f) != 1) continue;
    const Laurent dilated = Laurent::prime_power(f, -1) * cell.representative(f);
    CHECK(std::abs(calderon_at(fam, dilated) - 1.0) ==
          doctest::Approx(res).epsilon(1e-12));
  }
}

TEST_CASE("cross correlation check: Haar passes, annulus fails at s=1") {
  const FieldRef f = FieldParams::make(2, 1);
  const CheckReport good = check_cross_correlation(haar_family(f).wavelets, 8);
  CHECK(good.status == CheckStatus::Pass);
  CHECK(good.max_residual < 1e-12);

  const CheckReport bad = check_cross_correlation(annulus_control(f), 8);
  CHECK(bad.status == CheckStatus::Fail);
  CHECK(bad.max_residual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bad.worst_s == 1);
}

TEST_CASE("norm integral: closed-form targets") {
  for (auto [p, c] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const FieldRef f = FieldParams::make(p, c);
    const NormIntegralReport rep = check_norm_integral(haar_family(f).wavelets);
    const double q = f->q();
    CHECK(rep.target == doctest::Approx((q - 1.0) / q).epsilon(1e-15));
    CHECK(rep.residual < 1e-12);
    CHECK(rep.status == CheckStatus::Pass);
  }
  // annulus also meets the integral (it is the correlation that fails)
  const FieldRef f = FieldParams::make(2, 1);
  CHECK(check_norm_integral(annulus_control(f)).residual < 1e-12);
  // zero family misses the target by the full amount
  std::vector<TestFunction> z;
  z.push_back(TestFunction::zero(f, Side::Frequency, {1, 0}));
  const NormIntegralReport zero = check_norm_integral(WaveletFamily(std::move(z)));
  CHECK(zero.value == 0.0);
  CHECK(zero.status == CheckStatus::Fail);
}

TEST_CASE("classify: verdicts for the standard families") {
  const FieldRef f = FieldParams::make(2, 1);
  const VerdictReport haar = classify(haar_family(f).wavelets);
  CHECK(haar.orthonormal_system);
  CHECK(haar.tight_frame_constant_1);
  CHECK(haar.orthonormal_basis);
  CHECK(haar.wavelet_by_frame_route);
  CHECK(haar.wavelet_by_ortho_route);
  CHECK(haar.routes_agree);
  CHECK(haar.conclusive);

  const VerdictReport an = classify(annulus_control(f));
  CHECK_FALSE(an.tight_frame_constant_1);
  CHECK(an.calderon.status == CheckStatus::Pass);
  CHECK(an.cross_correlation.status == CheckStatus::Fail);
  CHECK_FALSE(an.orthonormal_system);
  CHECK(an.norms_max_residual ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  CHECK(an.routes_agree);

  // off-unit scaling kills every flag
  const VerdictReport off = classify(scaled_family(haar_family(f).wavelets, 0.5));
  CHECK_FALSE(off.orthonormal_basis);
  CHECK_FALSE(off.wavelet_by_frame_route);
  CHECK_FALSE(off.wavelet_by_ortho_route);
  CHECK(off.routes_agree);
}

TEST_CASE("classify flag consistency invariant") {
  const FieldRef f = FieldParams::make(2, 1);
  for (const WaveletFamily& fam :
       {haar_family(f).wavelets, annulus_control(f),
        scaled_family(haar_family(f).wavelets, Cplx(0.0, 1.0))}) {
    const VerdictReport v = classify(fam);
    if (v.orthonormal_basis) {
      CHECK(v.tight_frame_constant_1);
      CHECK(v.norms_max_residual < 1e-9);
    }
  }
}

TEST_CASE("classify is invariant under member permutation") {
  const FieldRef f = FieldParams::make(3, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  std::vector<TestFunction> swapped = {haar.member_hat(1), haar.member_hat(0)};
  const VerdictReport a = classify(haar);
  const VerdictReport b = classify(WaveletFamily(std::move(swapped)));
  CHECK(a.orthonormal_basis == b.orthonormal_basis);
  CHECK(a.orthonormality.max_residual == b.orthonormality.max_residual);
  CHECK(a.calderon.max_residual == b.calderon.max_residual);
  CHECK(a.cross_correlation.max_residual == b.cross_correlation.max_residual);
  CHECK(a.norm_integral.value == b.norm_integral.value);
}

TEST_CASE("classify is invariant under translating a member within the lattice") {
  const FieldRef f = FieldParams::make(2, 1);
  const HaarPair pair = haar_family(f);
  for (std::uint64_t k : {1ull, 2ull, 3ull}) {
    std::vector<TestFunction> moved;
    moved.push_back(translate(pair.wavelets.member_point(0), k));
    const VerdictReport a = classify(pair.wavelets);
    const VerdictReport b = classify(WaveletFamily::from_point_members(moved));
    CHECK(b.orthonormal_basis == a.orthonormal_basis);
    CHECK(b.orthonormality.max_residual ==
          doctest::Approx(a.orthonormality.max_residual).epsilon(1e-12));
    CHECK(b.calderon.max_residual ==
          doctest::Approx(a.calderon.max_residual).epsilon(1e-12));
    CHECK(b.cross_correlation.max_residual ==
          doctest::Approx(a.cross_correlation.max_residual).epsilon(1e-12));
    CHECK(b.norm_integral.value ==
          doctest::Approx(a.norm_integral.value).epsilon(1e-12));
  }
}

TEST_CASE("orthonormality plus norm integral implies the Calderon identity") {
  // Families passing both route-B conditions also pass route A's sum.
  const FieldRef f = FieldParams::make(2, 1);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<TestFunction> members;
    members.push_back(translate(haar_family(f).wavelets.member_point(0),
                                static_cast<std::uint64_t>(trial % 4)));
    const WaveletFamily fam = WaveletFamily::from_point_members(members);
    const VerdictReport v = classify(fam);
    if (v.orthonormal_system && v.norm_integral.status == CheckStatus::Pass)
      CHECK(v.calderon.max_residual < 1e-9);
  }
}

TEST_CASE("threshold bands produce the inconclusive verdict") {
  ResidualThresholds thr;
  CHECK(thr.judge(1e-12) == CheckStatus::Pass);
  CHECK(thr.judge(1e-7) == CheckStatus::Inconclusive);
  CHECK(thr.judge(1e-3) == CheckStatus::Fail);

  // a family distorted into the dead zone reports inconclusive, not pass
  const FieldRef f = FieldParams::make(2, 1);
  const WaveletFamily haar = haar_family(f).wavelets;
  const WaveletFamily nudged = scaled_family(haar, 1.0 + 2e-8);
  const VerdictReport v = classify(nudged);
  CHECK_FALSE(v.conclusive);
}

TEST_CASE("uncertified family raises the certificate error") {
  const FieldRef f = FieldParams::make(2, 1);
  std::vector<TestFunction> bad;
  bad.push_back(TestFunction::ideal_indicator(f, Side::Frequency, 0));
  const WaveletFamily fam(std::move(bad));
  CHECK_THROWS_AS(classify(fam), CertificateError);
  CHECK_THROWS_AS(check_calderon(fam), CertificateError);
  CHECK_THROWS_AS(check_norm_integral(fam), CertificateError);
}

}  // TEST_SUITE
