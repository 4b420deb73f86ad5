#include "lfw/family.hpp"

#include <algorithm>

#include "lfw/transform.hpp"

namespace lfw {

std::optional<int> zero_vanish_level(const TestFunction& f) {
  if (f.value(0) != Cplx(0.0, 0.0)) return std::nullopt;
  const std::uint64_t q = static_cast<std::uint64_t>(f.field()->q());
  const int width = f.window().m + f.window().n;
  // Largest t with all amplitudes below q^t zero; those cells tile pr^{n-t} D.
  int t = 0;
  std::uint64_t block = 1;
  while (t < width) {
    bool zero_band = true;
    for (std::uint64_t n = block; n < block * q && zero_band; ++n)
      zero_band = f.value(n) == Cplx(0.0, 0.0);
    if (!zero_band) break;
    ++t;
    block *= q;
  }
  return f.window().n - t;
}

WaveletFamily::WaveletFamily(std::vector<TestFunction> members_hat)
    : members_hat_(std::move(members_hat)) {
  if (members_hat_.empty()) throw ParamError("family must have at least one member");
  field_ = members_hat_.front().field();
  std::optional<int> level = INT32_MIN;
  for (const TestFunction& m : members_hat_) {
    require_same_field(field_, m.field());
    if (m.side() != Side::Frequency)
      throw ParamError("family members must be frequency-side functions");
    max_m_ = std::max(max_m_, m.window().m);
    max_n_ = std::max(max_n_, m.window().n);
    const std::optional<int> ml = zero_vanish_level(m);
    if (!ml.has_value())
      level = std::nullopt;
    else if (level.has_value())
      level = std::max(*level, *ml);
  }
  vanish_level_ = level;
  members_point_.reserve(members_hat_.size());
  for (const TestFunction& m : members_hat_) members_point_.push_back(fourier_inverse(m));
}

WaveletFamily WaveletFamily::from_point_members(const std::vector<TestFunction>& members) {
  std::vector<TestFunction> hats;
  hats.reserve(members.size());
  for (const TestFunction& m : members) {
    if (m.side() != Side::Point) throw ParamError("expected point-side members");
    hats.push_back(fourier_forward(m));
  }
  return WaveletFamily(std::move(hats));
}

int WaveletFamily::vanish_level() const {
  require_certificate();
  return *vanish_level_;
}

void WaveletFamily::require_certificate() const {
  if (!vanish_level_.has_value())
    throw CertificateError(
        "family has no zero-neighborhood vanishing certificate; the scale sum "
        "has no finite truncation");
}

}  // namespace lfw
