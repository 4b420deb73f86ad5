#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lfw/errors.hpp"

namespace lfw {

// An element of GF(q), q = p^c, encoded as the integer whose base-p digits
// are its coordinates in the power basis {1, x, ..., x^{c-1}} of
// Z_p[x]/(r(x)).  Addition is carry-free digitwise mod p; multiplication
// reduces modulo r(x).
using GfSym = std::uint16_t;

class FieldParams;
using FieldRef = std::shared_ptr<const FieldParams>;

// exp(2*pi*i*t/p) with exact values at the axis points.
std::complex<double> unit_root(int p, int t);

/// Parameters of the residue field GF(p^c) together with the precomputed
/// arithmetic tables every other module runs on.  Immutable; share by
/// FieldRef.
class FieldParams {
 public:
  static constexpr int kMaxP = 7;
  static constexpr int kMaxC = 3;

  // Uses the canonical reduction polynomial: the lexicographically smallest
  // monic irreducible of degree c (coefficients compared low degree first).
  static FieldRef make(int p, int c);
  static FieldRef make(int p, int c, std::vector<int> reduction);
  static std::vector<int> default_reduction(int p, int c);

  int p() const { return p_; }
  int c() const { return c_; }
  int q() const { return q_; }
  const std::vector<int>& reduction() const { return reduction_; }

  GfSym gf_add(GfSym a, GfSym b) const;
  GfSym gf_neg(GfSym a) const;
  GfSym gf_sub(GfSym a, GfSym b) const { return gf_add(a, gf_neg(b)); }
  GfSym gf_mul(GfSym a, GfSym b) const { return mul_table_[a * q_ + b]; }

  // Coordinates in the epsilon basis; entries beyond c are zero.
  std::array<int, kMaxC> gf_coeffs(GfSym a) const;
  int eps0_coord(GfSym a) const { return static_cast<int>(a) % p_; }

  // eps0 coordinate of z(a)*z(b); the bilinear pairing behind the character.
  int pairing_digit(GfSym a, GfSym b) const { return eps0_coord(gf_mul(a, b)); }

  // The invertible GF(p)-linear map b -> E*b used to reduce the twisted
  // character pairing to the standard digitwise one in the fast transform.
  GfSym pairing_map(GfSym b) const { return pmap_[b]; }

  std::complex<double> root_of_unity(int t) const { return unit_root(p_, t); }

  // Largest d such that q^d fits in the index type used by the lattice maps.
  int max_index_digits() const { return max_index_digits_; }

  bool same_field(const FieldParams& o) const {
    return p_ == o.p_ && c_ == o.c_ && reduction_ == o.reduction_;
  }

 private:
  FieldParams(int p, int c, std::vector<int> reduction);

  int p_, c_, q_;
  int max_index_digits_;
  std::vector<int> reduction_;
  std::vector<GfSym> mul_table_;  // q*q, row-major
  std::vector<GfSym> pmap_;       // q
};

void require_same_field(const FieldRef& a, const FieldRef& b);

// Valuation of zero.
inline constexpr int kInfValuation = INT32_MAX;

/// A finite formal Laurent series in the prime element with GF(q)
/// coefficients: exactly the computable elements of the field K.  Canonical
/// form stores no zero coefficients, so equality is structural.
class Laurent {
 public:
  explicit Laurent(FieldRef field) : field_(std::move(field)) {}
  Laurent(FieldRef field, std::vector<std::pair<int, GfSym>> terms);

  // The series coeff * pr^exponent.
  static Laurent monomial(FieldRef field, int exponent, GfSym coeff);
  static Laurent prime_power(FieldRef field, int k) {
    return monomial(std::move(field), k, 1);
  }
  static Laurent one(FieldRef field) { return monomial(std::move(field), 0, 1); }

  const FieldRef& field() const { return field_; }
  const std::vector<std::pair<int, GfSym>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int valuation() const { return terms_.empty() ? kInfValuation : terms_.front().first; }
  // |x| = q^{-v(x)}, |0| = 0.
  double abs_value() const;
  GfSym coeff(int exponent) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator-(const Laurent& o) const { return *this + (-o); }
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();

  FieldRef field_;
  std::vector<std::pair<int, GfSym>> terms_;  // sorted by exponent, coeffs nonzero
};

// |x| <= q^{-k}, i.e. x lies in the k-th fractional ideal.
inline bool in_ideal(const Laurent& x, int k) { return x.valuation() >= k; }

}  // namespace lfw
