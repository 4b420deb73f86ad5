#include "lfw/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace lfw {

std::complex<double> unit_root(int p, int t) {
  t %= p;
  if (t < 0) t += p;
  if (t == 0) return {1.0, 0.0};
  if (2 * t == p) return {-1.0, 0.0};
  if (4 * t == p) return {0.0, 1.0};
  if (4 * t == 3 * p) return {0.0, -1.0};
  // Mirror the upper half so conjugate pairs are bitwise conjugate.
  if (2 * t > p) return std::conj(unit_root(p, p - t));
  const double angle = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int eval_poly_mod_p(const std::vector<int>& r, int x, int p) {
  int acc = 0;
  for (auto it = r.rbegin(); it != r.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

// Degree <= 3: irreducible over Z_p iff monic and without roots
// (degree 1 is always irreducible).
bool is_irreducible(const std::vector<int>& r, int p) {
  const int deg = static_cast<int>(r.size()) - 1;
  if (deg < 1 || r[deg] != 1) return false;
  if (deg == 1) return true;
  for (int x = 0; x < p; ++x)
    if (eval_poly_mod_p(r, x, p) == 0) return false;
  return true;
}

std::vector<int> digits_base(std::uint64_t n, int base, int count) {
  std::vector<int> d(count, 0);
  for (int i = 0; i < count; ++i) {
    d[i] = static_cast<int>(n % base);
    n /= base;
  }
  return d;
}

}  // namespace

std::vector<int> FieldParams::default_reduction(int p, int c) {
  // Scan constant-first coefficient tuples in increasing order.
  std::uint64_t limit = 1;
  for (int i = 0; i < c; ++i) limit *= static_cast<std::uint64_t>(p);
  for (std::uint64_t n = 0; n < limit; ++n) {
    std::vector<int> r = digits_base(n, p, c);
    r.push_back(1);
    if (is_irreducible(r, p)) return r;
  }
  throw ParamError("no irreducible polynomial found (unreachable for prime p)");
}

FieldRef FieldParams::make(int p, int c) {
  return make(p, c, default_reduction(p, c));
}

FieldRef FieldParams::make(int p, int c, std::vector<int> reduction) {
  return FieldRef(new FieldParams(p, c, std::move(reduction)));
}

FieldParams::FieldParams(int p, int c, std::vector<int> reduction)
    : p_(p), c_(c), reduction_(std::move(reduction)) {
  if (!is_prime(p) || p > kMaxP)
    throw ParamError("p must be a prime <= " + std::to_string(kMaxP));
  if (c < 1 || c > kMaxC)
    throw ParamError("c must lie in [1, " + std::to_string(kMaxC) + "]");
  if (static_cast<int>(reduction_.size()) != c + 1)
    throw ParamError("reduction polynomial must have degree c");
  for (int coef : reduction_)
    if (coef < 0 || coef >= p) throw ParamError("reduction coefficients must lie in [0, p)");
  if (!is_irreducible(reduction_, p))
    throw ParamError("reduction polynomial is not monic irreducible over Z_p");

  q_ = 1;
  for (int i = 0; i < c; ++i) q_ *= p;
  max_index_digits_ = static_cast<int>(62.0 / std::log2(static_cast<double>(q_)));

  // Multiplication table by polynomial product + reduction.
  mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (int a = 0; a < q_; ++a) {
    const std::vector<int> da = digits_base(a, p, c);
    for (int b = 0; b < q_; ++b) {
      const std::vector<int> db = digits_base(b, p, c);
      std::vector<int> prod(2 * c - 1, 0);
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * c - 2; d >= c; --d) {
        const int lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < c; ++i)
          prod[d - c + i] = ((prod[d - c + i] - lead * reduction_[i]) % p + p) % p;
      }
      GfSym res = 0;
      for (int i = c - 1; i >= 0; --i) res = static_cast<GfSym>(res * p + prod[i]);
      mul_table_[static_cast<std::size_t>(a) * q_ + b] = res;
    }
  }

  // pmap_[b] has digits sum_nu Eps[mu][nu] b_nu with Eps[mu][nu] = eps0(eps_mu*eps_nu).
  std::vector<std::vector<int>> eps(c, std::vector<int>(c));
  for (int mu = 0; mu < c; ++mu) {
    GfSym emu = 1;
    for (int i = 0; i < mu; ++i) emu = static_cast<GfSym>(emu * p);
    for (int nu = 0; nu < c; ++nu) {
      GfSym enu = 1;
      for (int i = 0; i < nu; ++i) enu = static_cast<GfSym>(enu * p);
      eps[mu][nu] = pairing_digit(emu, enu);
    }
  }
  pmap_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  for (int b = 0; b < q_; ++b) {
    const std::vector<int> db = digits_base(b, p, c);
    GfSym out = 0;
    for (int mu = c - 1; mu >= 0; --mu) {
      int coord = 0;
      for (int nu = 0; nu < c; ++nu) coord += eps[mu][nu] * db[nu];
      out = static_cast<GfSym>(out * p + coord % p);
    }
    pmap_[b] = out;
    seen[out] = true;
  }
  for (int b = 0; b < q_; ++b)
    if (!seen[b]) throw Error("internal: character pairing map is not a bijection");
}

GfSym FieldParams::gf_add(GfSym a, GfSym b) const {
  GfSym out = 0, scale = 1;
  for (int i = 0; i < c_; ++i) {
    out = static_cast<GfSym>(out + scale * ((a % p_ + b % p_) % p_));
    a = static_cast<GfSym>(a / p_);
    b = static_cast<GfSym>(b / p_);
    scale = static_cast<GfSym>(scale * p_);
  }
  return out;
}

GfSym FieldParams::gf_neg(GfSym a) const {
  GfSym out = 0, scale = 1;
  for (int i = 0; i < c_; ++i) {
    out = static_cast<GfSym>(out + scale * ((p_ - a % p_) % p_));
    a = static_cast<GfSym>(a / p_);
    scale = static_cast<GfSym>(scale * p_);
  }
  return out;
}

std::array<int, FieldParams::kMaxC> FieldParams::gf_coeffs(GfSym a) const {
  std::array<int, kMaxC> out{};
  for (int i = 0; i < c_; ++i) {
    out[i] = a % p_;
    a = static_cast<GfSym>(a / p_);
  }
  return out;
}

void require_same_field(const FieldRef& a, const FieldRef& b) {
  if (!a || !b || !a->same_field(*b))
    throw ParamError("operands belong to different field parameterizations");
}

Laurent::Laurent(FieldRef field, std::vector<std::pair<int, GfSym>> terms)
    : field_(std::move(field)), terms_(std::move(terms)) {
  canonicalize();
}

Laurent Laurent::monomial(FieldRef field, int exponent, GfSym coeff) {
  Laurent x(std::move(field));
  if (coeff != 0) x.terms_.emplace_back(exponent, coeff);
  return x;
}

void Laurent::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, GfSym>> out;
  out.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size();) {
    const int e = terms_[i].first;
    GfSym acc = 0;
    while (i < terms_.size() && terms_[i].first == e) {
      acc = field_->gf_add(acc, terms_[i].second);
      ++i;
    }
    if (acc != 0) out.emplace_back(e, acc);
  }
  terms_ = std::move(out);
}

double Laurent::abs_value() const {
  if (is_zero()) return 0.0;
  return std::pow(static_cast<double>(field_->q()), -static_cast<double>(valuation()));
}

GfSym Laurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

Laurent Laurent::operator+(const Laurent& o) const {
  require_same_field(field_, o.field_);
  std::vector<std::pair<int, GfSym>> merged = terms_;
  merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
  return Laurent(field_, std::move(merged));
}

Laurent Laurent::operator-() const {
  std::vector<std::pair<int, GfSym>> out = terms_;
  for (auto& t : out) t.second = field_->gf_neg(t.second);
  return Laurent(field_, std::move(out));
}

Laurent Laurent::operator*(const Laurent& o) const {
  require_same_field(field_, o.field_);
  std::map<int, GfSym> acc;
  for (const auto& [e1, a] : terms_)
    for (const auto& [e2, b] : o.terms_) {
      GfSym& slot = acc[e1 + e2];
      slot = field_->gf_add(slot, field_->gf_mul(a, b));
    }
  std::vector<std::pair<int, GfSym>> out(acc.begin(), acc.end());
  return Laurent(field_, std::move(out));
}

bool Laurent::operator==(const Laurent& o) const {
  require_same_field(field_, o.field_);
  return terms_ == o.terms_;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, a] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string coeff;
    if (field_->c() == 1) {
      coeff = std::to_string(a);
    } else {
      const auto co = field_->gf_coeffs(a);
      std::ostringstream cs;
      bool cfirst = true;
      for (int mu = 0; mu < field_->c(); ++mu) {
        if (co[mu] == 0) continue;
        if (!cfirst) cs << "+";
        cfirst = false;
        if (mu == 0) {
          cs << co[mu];
        } else {
          if (co[mu] != 1) cs << co[mu] << "*";
          cs << "e" << (mu == 1 ? "" : "^" + std::to_string(mu));
        }
      }
      coeff = "(" + cs.str() + ")";
    }
    if (e == 0) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << "pr^" << e;
    }
  }
  return os.str();
}

}  // namespace lfw
