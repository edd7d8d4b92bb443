#include <doctest.h>

#include "aswt/tower.hpp"

using namespace aswt;

TEST_CASE("tower constants: cubic baseline") {
  TowerSpec cubic = make_tower_fp(2, {{0, {0, 0, 0, 1}}});
  const TowerConstants& k = cubic.consts;
  CHECK(k.D == 3);
  CHECK(k.m_tilde == 1);
  CHECK(k.delta == Rat(3));
  CHECK(k.delta1 == 3);
  CHECK(k.m0 == 1);  // 1 + ceil(log_2(2/3)) = 1
  CHECK_FALSE(k.m0_clamped);
  CHECK(degree_d(cubic, 1) == 3);
  CHECK(degree_d(cubic, 2) == 6);
  CHECK(degree_d(cubic, 3) == 12);
}

TEST_CASE("tower constants: two-row tower") {
  // f_0 = x^3, f_1 = x^4
  TowerSpec t = make_tower_fp(2, {{0, {0, 0, 0, 1}}, {1, {0, 0, 0, 0, 1}}});
  CHECK(t.consts.D == 4);
  CHECK(t.consts.m_tilde == 2);
  CHECK(t.consts.delta == Rat(3));  // max(3, 4/2)
  CHECK(t.consts.delta1 == 6);      // p^{m~-1} delta = max(2*3, 4)
  CHECK(degree_d(t, 2) == 6);
}

TEST_CASE("tower constants: single linear term over F_3") {
  TowerSpec t = make_tower_fp(3, {{0, {0, 1}}});
  CHECK(t.consts.D == 1);
  CHECK(t.consts.m_tilde == 1);
  CHECK(t.consts.delta == Rat(1));
  CHECK(t.consts.delta1 == 1);
  for (unsigned m = 1; m <= 4; ++m)
    CHECK(degree_d(t, m) == to_long(pow_int(3, m - 1)));
}

TEST_CASE("m0 clamp flag") {
  // delta1 = 1 makes the log argument 1/p + 0 < 1, so the formula gives
  // m~ + negative for p >= 3; the clamp snaps to m~.
  TowerSpec t = make_tower_fp(3, {{0, {0, 1}}});
  CHECK(t.consts.m0 == 1);
  CHECK(t.consts.m0_clamped);
}

TEST_CASE("degenerate specs rejected") {
  // d_0 = 0: constant-only first row
  CHECK_THROWS_AS(make_tower_fp(2, {{0, {1}}}), error);
  // no row 0
  CHECK_THROWS_AS(make_tower_fp(2, {{1, {0, 1}}}), error);
  // leading zeros trim away to a constant
  CHECK_THROWS_AS(make_tower_fp(2, {{0, {1, 0, 0}}}), error);
  // composite p
  CHECK_THROWS_AS(make_tower_fp(6, {{0, {0, 1}}}), error);
  // duplicate row index
  CHECK_THROWS_AS(make_tower_fp(2, {{0, {0, 1}}, {0, {0, 1}}}), error);
}

TEST_CASE("nondegeneracy") {
  // f_0 = x^3, p = 2, m = 1: sum = 3 * 1 = 1 in F_2
  TowerSpec cubic = make_tower_fp(2, {{0, {0, 0, 0, 1}}});
  CHECK(nondegenerate(cubic, 1));
  CHECK(nondegenerate(cubic, 2));
  CHECK(nondegenerate(cubic, 3));

  // f_0 = x^p: coefficient p kills the sum
  TowerSpec xp2 = make_tower_fp(2, {{0, {0, 0, 1}}});
  CHECK_FALSE(nondegenerate(xp2, 1));
  TowerSpec xp3 = make_tower_fp(3, {{0, {0, 0, 0, 1}}});
  CHECK_FALSE(nondegenerate(xp3, 1));

  // single-row towers with p not dividing d_0 are always nondegenerate
  for (unsigned m = 1; m <= 3; ++m) {
    TowerSpec lin = make_tower_fp(3, {{0, {0, 2}}});
    CHECK(nondegenerate(lin, m));
    TowerSpec quad = make_tower_fp(3, {{0, {0, 0, 1}}});
    CHECK(nondegenerate(quad, m));
  }

  // mixed cancellation over F_2: f_0 = x^2, f_1 = x at m = 2 has
  // d(2) = 2 attained twice with sum 2*1 + 1*1 = 1 in F_2
  TowerSpec mix = make_tower_fp(2, {{0, {0, 0, 1}}, {1, {0, 1}}});
  CHECK(degree_d(mix, 2) == 2);
  CHECK(nondegenerate(mix, 2));
}

TEST_CASE("json round trip") {
  TowerSpec t = make_tower_fp(2, {{0, {0, 0, 0, 1}}, {1, {0, 1}}});
  std::string text = tower_to_json_text(t);
  TowerSpec back = tower_from_json_text(text);
  CHECK(back.p == 2);
  CHECK(back.a == 1);
  CHECK(back.rows.size() == 2);
  CHECK(back.consts.delta1 == t.consts.delta1);
  // byte-identical re-serialization
  CHECK(tower_to_json_text(back) == text);
}

TEST_CASE("a > 1 coefficient tuples") {
  // f_0 = g x^3 over F_4 with g the generator (0,1)
  TowerSpec t = make_tower(2, 2, {{0, {{0}, {0}, {0}, {0, 1}}}});
  CHECK(t.a == 2);
  CHECK(t.consts.D == 3);
  CHECK(nondegenerate(t, 1));
  std::string text = tower_to_json_text(t);
  TowerSpec back = tower_from_json_text(text);
  CHECK(back.consts.D == 3);
  CHECK(gr_equal(back.rows[0].coeffs[3], t.rows[0].coeffs[3]));
}
