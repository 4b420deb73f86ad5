#include "lfw/families.hpp"

#include "lfw/transform.hpp"

namespace lfw {

HaarPair haar_family(const FieldRef& f) {
  const int q = f->q();
  const Laurent pr = Laurent::prime_power(f, 1);
  std::vector<TestFunction> members;
  members.reserve(q - 1);
  for (int l = 1; l < q; ++l) {
    const Laurent ul = lattice_point(f, static_cast<std::uint64_t>(l));
    std::vector<Cplx> v(q);
    for (int k = 0; k < q; ++k) {
      const Laurent uk = lattice_point(f, static_cast<std::uint64_t>(k));
      v[k] = std::conj(character(pr * ul * uk).value());
    }
    members.emplace_back(f, Side::Point, Window{0, 1}, std::move(v));
  }
  TestFunction scaling(f, Side::Point, Window{0, 0}, {Cplx(1.0, 0.0)});
  return HaarPair{std::move(scaling), WaveletFamily::from_point_members(members)};
}

WaveletFamily annulus_control(const FieldRef& f) {
  const Window w{2, 0};
  const std::uint64_t cells = cell_count(f, w);
  const std::uint64_t q = static_cast<std::uint64_t>(f->q());
  std::vector<Cplx> v(cells, Cplx(0.0, 0.0));
  for (std::uint64_t n = q; n < cells; ++n) v[n] = 1.0;  // the shell |xi| = q^2
  std::vector<TestFunction> members;
  members.emplace_back(f, Side::Frequency, w, std::move(v));
  return WaveletFamily(std::move(members));
}

}  // namespace lfw
