#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "lfw/lattice.hpp"

using namespace lfw;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

const std::vector<FieldRef>& test_fields() {
  static const std::vector<FieldRef> fields = {
      FieldParams::make(2, 1), FieldParams::make(3, 1), FieldParams::make(2, 2)};
  return fields;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("lattice point frozen examples") {
  const FieldRef f = FieldParams::make(2, 1);
  CHECK(lattice_point(f, 0).is_zero());
  CHECK(lattice_point(f, 1) == Laurent::prime_power(f, -1));
  CHECK(lattice_point(f, 3) ==
        Laurent(f, {{-2, 1}, {-1, 1}}));  // digit expansion of 3 base 2
}

TEST_CASE("lattice index inverts the point map") {
  for (const FieldRef& f : test_fields()) {
    const std::uint64_t limit = ipow(f->q(), 4);
    std::map<std::uint64_t, std::uint64_t> seen;
    for (std::uint64_t n = 0; n < limit; ++n)
      CHECK(lattice_index(lattice_point(f, n)) == n);
  }
  const FieldRef f = FieldParams::make(2, 1);
  CHECK(lattice_index(Laurent(f)) == 0);
  CHECK(lattice_index(Laurent::prime_power(f, -2)) == 2);
  CHECK_THROWS_AS(lattice_index(Laurent::one(f)), DomainError);
  CHECK_THROWS_AS(lattice_index(Laurent(f, {{-1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("valuation law: |u(n)| = q^k iff q^{k-1} <= n < q^k") {
  for (const FieldRef& f : test_fields()) {
    const double q = f->q();
    for (std::uint64_t n = 1; n < ipow(f->q(), 4); ++n) {
      const int k = scale_of(f, n);
      CHECK(ipow(f->q(), k - 1) <= n);
      CHECK(n < ipow(f->q(), k));
      CHECK(lattice_point(f, n).abs_value() == doctest::Approx(std::pow(q, k)));
    }
    CHECK(lattice_point(f, 0).abs_value() == 0.0);
  }
}

TEST_CASE("lattice is closed under negation and addition") {
  for (const FieldRef& f : test_fields()) {
    const std::uint64_t limit = ipow(f->q(), 4);
    std::set<std::uint64_t> all;
    for (std::uint64_t n = 0; n < limit; ++n) all.insert(n);
    // negation permutes the range {u(k) : k < q^4}
    std::set<std::uint64_t> negs;
    for (std::uint64_t n = 0; n < limit; ++n) {
      const std::uint64_t m = lattice_neg(f, n);
      CHECK((-lattice_point(f, n)) == lattice_point(f, m));
      negs.insert(m);
    }
    CHECK(negs == all);
    // u(l) + u(k) is always some u(m), consistently with index addition
    const std::uint64_t small = ipow(f->q(), 2);
    for (std::uint64_t l = 0; l < small; ++l)
      for (std::uint64_t k = 0; k < limit; k += 7) {
        const Laurent sum = lattice_point(f, l) + lattice_point(f, k);
        CHECK(sum == lattice_point(f, lattice_add(f, l, k)));
        CHECK(lattice_index(sum) < 2 * limit);  // stays on the lattice
      }
  }
}

TEST_CASE("digit shift identity u(r q^k + s) = u(r) pr^{-k} + u(s)") {
  for (const FieldRef& f : test_fields()) {
    for (std::uint64_t r = 0; r < ipow(f->q(), 2); ++r)
      for (int k = 0; k <= 3; ++k)
        for (std::uint64_t s = 0; s < ipow(f->q(), k); ++s) {
          const Laurent lhs = lattice_point(f, r * ipow(f->q(), k) + s);
          const Laurent rhs =
              lattice_point(f, r) * Laurent::prime_power(f, -k) + lattice_point(f, s);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("scale translation sets") {
  const FieldRef f = FieldParams::make(2, 1);
  CHECK(scale_translation_set(f, 2) == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(scale_translation_set(f, -1) == std::vector<std::uint64_t>{0});
  CHECK(scale_translation_set(f, 0) == std::vector<std::uint64_t>{0});
}

TEST_CASE("character frozen examples") {
  const FieldRef f = FieldParams::make(2, 1);
  CHECK(character(Laurent::one(f)) == RootOfUnity{2, 0});
  CHECK(character(Laurent::prime_power(f, 2)) == RootOfUnity{2, 0});
  CHECK(character(Laurent::prime_power(f, -1)).value() ==
        std::complex<double>(-1.0, 0.0));
  CHECK(character(Laurent::prime_power(f, -2)) == RootOfUnity{2, 0});

  // trivial on the ring of integers, nontrivial on its inverse ideal
  const FieldRef f3 = FieldParams::make(3, 1);
  CHECK(character(Laurent(f3, {{0, 2}, {3, 1}})) == RootOfUnity{3, 0});
  CHECK(character(Laurent(f3, {{-1, 2}})) == RootOfUnity{3, 2});
  // higher epsilon coordinates contribute trivially
  const FieldRef f4 = FieldParams::make(2, 2);
  CHECK(character(Laurent(f4, {{-1, 2}})) == RootOfUnity{2, 0});
  CHECK(character(Laurent(f4, {{-1, 3}})) == RootOfUnity{2, 1});
}

TEST_CASE("character is additive") {
  for (const FieldRef& f : test_fields()) {
    std::mt19937_64 rng(31 * f->q());
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<int> coeff(0, f->q() - 1);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<std::pair<int, GfSym>> tx, ty;
      for (int i = 0; i < 3; ++i) {
        tx.emplace_back(expo(rng), static_cast<GfSym>(coeff(rng)));
        ty.emplace_back(expo(rng), static_cast<GfSym>(coeff(rng)));
      }
      const Laurent x(f, std::move(tx)), y(f, std::move(ty));
      CHECK(character(x + y) == character(x) * character(y));
    }
  }
}

TEST_CASE("products of lattice points are character-trivial") {
  for (const FieldRef& f : test_fields()) {
    const std::uint64_t limit = ipow(f->q(), 3);
    for (std::uint64_t k = 0; k < limit; ++k)
      for (std::uint64_t l = k; l < limit; ++l)
        CHECK(character(lattice_point(f, k) * lattice_point(f, l)).t == 0);
  }
}

TEST_CASE("character_n frozen examples") {
  const FieldRef f = FieldParams::make(2, 1);
  const Laurent pr = Laurent::prime_power(f, 1);
  for (int i = -2; i <= 2; ++i)
    CHECK(character_n(f, 0, Laurent::prime_power(f, i)) == RootOfUnity{2, 0});
  CHECK(character_n(f, 1, pr) == RootOfUnity{2, 0});
  CHECK(character_n(f, 1, lattice_point(f, 1)) == RootOfUnity{2, 0});  // chi(pr^-2)
  CHECK(character_n(f, 1, Laurent::one(f)) == RootOfUnity{2, 1});
}

TEST_CASE("character sum kernel equals the congruence indicator") {
  for (const FieldRef& f : {FieldParams::make(2, 1), FieldParams::make(3, 1),
                            FieldParams::make(2, 2)}) {
    for (int j = 0; j <= 3; ++j) {
      const std::uint64_t range = ipow(f->q(), j + 1);
      const std::uint64_t modulus = ipow(f->q(), j);
      for (std::uint64_t pidx = 0; pidx < range; ++pidx)
        for (std::uint64_t kidx = 0; kidx < range; ++kidx) {
          const double expected = pidx % modulus == kidx % modulus ? 1.0 : 0.0;
          CHECK(character_sum_kernel(f, pidx, kidx, j) ==
                doctest::Approx(expected).epsilon(1e-12));
        }
    }
  }
}

TEST_CASE("kernel hand examples") {
  const FieldRef f = FieldParams::make(2, 1);
  CHECK(character_sum_kernel(f, 3, 1, 1) == doctest::Approx(1.0));
  CHECK(character_sum_kernel(f, 2, 1, 1) == doctest::Approx(0.0));
  CHECK(character_sum_kernel(f, 5, 3, 0) == doctest::Approx(1.0));  // j=0 always 1
}

TEST_CASE("ring and lattice parts split every element") {
  const FieldRef f = FieldParams::make(3, 1);
  const Laurent x(f, {{-3, 2}, {-1, 1}, {0, 2}, {2, 1}});
  CHECK(ring_part(x) + lattice_part(x) == x);
  CHECK(ring_part(x).valuation() >= 0);
  CHECK(lattice_index(lattice_part(x)) == 2 * 9 + 1 * 1 + 0);  // digits 2,0,1? see below
}

}  // TEST_SUITE
