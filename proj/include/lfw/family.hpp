#pragma once

#include <optional>
#include <vector>

#include "lfw/function.hpp"

namespace lfw {

/// An ordered finite family of candidate wavelets, stored on the frequency
/// side (point-side views computed at construction).  The zero-neighborhood
/// vanishing certificate is derived from the amplitudes: the smallest level
/// L such that every member is identically zero on pr^L * D.  Members whose
/// amplitude at the cell of 0 is nonzero leave the family uncertified, and
/// every operation whose truncation depends on the certificate rejects it.
class WaveletFamily {
 public:
  explicit WaveletFamily(std::vector<TestFunction> members_hat);

  static WaveletFamily from_point_members(const std::vector<TestFunction>& members);

  const FieldRef& field() const { return field_; }
  int size() const { return static_cast<int>(members_hat_.size()); }
  const TestFunction& member_hat(int l) const { return members_hat_[l]; }
  const TestFunction& member_point(int l) const { return members_point_[l]; }
  const std::vector<TestFunction>& members_hat() const { return members_hat_; }

  bool certified() const { return vanish_level_.has_value(); }
  // The certificate level; CertificateError when uncertified.
  int vanish_level() const;
  void require_certificate() const;

  // Largest support exponent / constancy exponent over the frequency side.
  int max_support_exp() const { return max_m_; }
  int max_const_exp() const { return max_n_; }

 private:
  FieldRef field_;
  std::vector<TestFunction> members_hat_;
  std::vector<TestFunction> members_point_;
  std::optional<int> vanish_level_;
  int max_m_ = 0;
  int max_n_ = 0;
};

// Smallest L with f identically zero on pr^L * D, or nullopt when the
// amplitude on the cell containing 0 is nonzero.
std::optional<int> zero_vanish_level(const TestFunction& f);

}  // namespace lfw
