#include <doctest.h>

#include <random>

#include "aswt/cyclotomic.hpp"

using namespace aswt;

namespace {
CycInt zeta_pow(long p, unsigned m, long e) { return psi_char(p, m, Int(e)); }

CycInt random_cyc(long p, unsigned m, std::mt19937& rng) {
  CycInt a = cyc_zero(p, m);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (Int& x : a.c) x = dist(rng);
  return a;
}
}  // namespace

TEST_CASE("psi_char values") {
  // c = 0 -> 1
  CHECK(cyc_equal(psi_char(2, 2, Int(0)), cyc_one(2, 2)));
  // p = 2, m = 1: zeta_2 = -1
  CycInt minus_one = cyc_from_int(2, 1, Int(-1));
  CHECK(cyc_equal(psi_char(2, 1, Int(1)), minus_one));
  // p = 2, m = 2: zeta^3 = -zeta mod (zeta^2 + 1)
  CycInt z3 = psi_char(2, 2, Int(3));
  CHECK(z3.c == std::vector<Int>{Int(0), Int(-1)});
  // periodicity mod p^m
  CHECK(cyc_equal(psi_char(3, 2, Int(11)), psi_char(3, 2, Int(2))));
}

TEST_CASE("ring arithmetic") {
  // (1 + zeta)(1 - zeta) = 1 - zeta^2 = 2 in Z[i]
  CycInt one = cyc_one(2, 2);
  CycInt z = zeta_pow(2, 2, 1);
  CycInt prod = cyc_mul(cyc_add(one, z), cyc_sub(one, z));
  CHECK(cyc_equal(prod, cyc_from_int(2, 2, Int(2))));

  // alpha * 1 = alpha
  std::mt19937 rng(3);
  CycInt a = random_cyc(3, 2, rng);
  CHECK(cyc_equal(cyc_mul(a, cyc_one(3, 2)), a));

  // exact_div: (2 + 4 zeta)/2 = 1 + 2 zeta
  CycInt v = cyc_add(cyc_from_int(2, 2, Int(2)), cyc_scale(zeta_pow(2, 2, 1), Int(4)));
  CycInt d = cyc_exact_div_int(v, Int(2));
  CHECK(d.c == std::vector<Int>{Int(1), Int(2)});
  CHECK_THROWS_AS(cyc_exact_div_int(cyc_one(2, 2), Int(2)), error);
}

TEST_CASE("pi-adic valuation via resultant norm") {
  // alpha = p has ord_pi = (p-1)p^{m-1}
  for (long p : {2L, 3L}) {
    for (unsigned m = 1; m <= (p == 2 ? 3u : 2u); ++m) {
      Valuation v = pi_valuation(cyc_from_int(p, m, Int(p)));
      CHECK(!v.is_infinite);
      CHECK(v.value == Rat(cyc_phi(p, m)));
    }
  }
  // p = 2, m = 2: zeta - 1 has norm Res(x^2+1, x-1) = 2, ord_pi = 1
  CycInt zm1 = cyc_sub(zeta_pow(2, 2, 1), cyc_one(2, 2));
  CHECK(cyc_norm(zm1) == 2);
  CHECK(pi_valuation(zm1).value == 1);
  // units and zero
  CHECK(pi_valuation(cyc_one(2, 2)).value == 0);
  CHECK(pi_valuation(cyc_zero(2, 2)).is_infinite);
}

TEST_CASE("ord_q normalization") {
  // ord_q(q) = 1
  CHECK(ord_q_valuation(cyc_from_int(2, 1, Int(4)), 2).value == 1);
  CHECK(ord_q_valuation(cyc_from_int(2, 1, Int(2)), 1).value == 1);
  // p=2, m=2, a=1: ord_q(zeta - 1) = 1/2
  CycInt zm1 = cyc_sub(zeta_pow(2, 2, 1), cyc_one(2, 2));
  CHECK(ord_q_valuation(zm1, 1).value == Rat(1, 2));
  // ord_p = ord_pi / phi
  CHECK(ord_p_valuation(cyc_from_int(3, 2, Int(3))).value == 1);
}

TEST_CASE("valuation properties") {
  std::mt19937 rng(5);
  SUBCASE("multiplicativity") {
    for (int trial = 0; trial < 20; ++trial) {
      CycInt a = random_cyc(2, 2, rng), b = random_cyc(2, 2, rng);
      if (a.is_zero() || b.is_zero()) continue;
      Valuation va = pi_valuation(a), vb = pi_valuation(b);
      Valuation vab = pi_valuation(cyc_mul(a, b));
      CHECK(vab.value == va.value + vb.value);
    }
  }
  SUBCASE("ultrametric inequality with equality off-diagonal") {
    for (int trial = 0; trial < 20; ++trial) {
      CycInt a = random_cyc(3, 2, rng), b = random_cyc(3, 2, rng);
      if (a.is_zero() || b.is_zero()) continue;
      CycInt s = cyc_add(a, b);
      if (s.is_zero()) continue;
      Valuation va = pi_valuation(a), vb = pi_valuation(b), vs = pi_valuation(s);
      CHECK(vs.value >= std::min(va.value, vb.value));
      if (va.value != vb.value) CHECK(vs.value == std::min(va.value, vb.value));
    }
  }
  SUBCASE("ord_pi(psi(1) - 1) = 1 across the grid") {
    for (long p : {2L, 3L}) {
      for (unsigned m = 1; m <= (p == 2 ? 4u : 3u); ++m) {
        CycInt zm1 = cyc_sub(psi_char(p, m, Int(1)), cyc_one(p, m));
        CHECK(pi_valuation(zm1).value == 1);
      }
    }
  }
  SUBCASE("galois invariance of ord_pi") {
    for (int trial = 0; trial < 15; ++trial) {
      CycInt a = random_cyc(2, 3, rng);
      if (a.is_zero()) continue;
      Valuation va = pi_valuation(a);
      for (long u : {3L, 5L, 7L}) {
        CycInt au = cyc_galois(a, Int(u));
        CHECK(pi_valuation(au).value == va.value);
      }
    }
    for (int trial = 0; trial < 15; ++trial) {
      CycInt a = random_cyc(3, 2, rng);
      if (a.is_zero()) continue;
      Valuation va = pi_valuation(a);
      for (long u : {2L, 4L, 5L, 7L, 8L}) {
        CycInt au = cyc_galois(a, Int(u));
        CHECK(pi_valuation(au).value == va.value);
      }
    }
  }
  SUBCASE("galois action is a ring map and respects zeta -> zeta^u") {
    CycInt z = zeta_pow(2, 3, 1);
    CHECK(cyc_equal(cyc_galois(z, Int(3)), zeta_pow(2, 3, 3)));
    for (int trial = 0; trial < 10; ++trial) {
      CycInt a = random_cyc(2, 3, rng), b = random_cyc(2, 3, rng);
      CHECK(cyc_equal(cyc_galois(cyc_mul(a, b), Int(5)),
                      cyc_mul(cyc_galois(a, Int(5)), cyc_galois(b, Int(5)))));
    }
  }
}
