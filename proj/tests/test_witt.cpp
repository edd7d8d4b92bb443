#include <doctest.h>

#include <random>

#include "aswt/tower.hpp"
#include "aswt/witt.hpp"

using namespace aswt;

namespace {

GRElem fe(const GRContext& f, long v) { return gr_from_int(f, Int(v)); }

WittVecGR wv(const GRContext& f, std::vector<long> coords) {
  WittVecGR out;
  for (long c : coords) out.push_back(fe(f, c));
  return out;
}

// independent ghost-identity oracle: w_n(S_0..S_n) == w_n(X) + w_n(Y)
bool ghost_holds(const WittStructurePolys& polys) {
  const unsigned nv = 2 * polys.m;
  for (unsigned n = 0; n < polys.m; ++n) {
    MPoly lhs_sum = mp_zero(nv);
    MPoly lhs_prod = mp_zero(nv);
    for (unsigned i = 0; i <= n; ++i) {
      Int pi = pow_int(polys.p, i);
      unsigned long e = pow_int(polys.p, n - i).get_ui();
      lhs_sum = mp_add(lhs_sum, mp_scale(mp_pow(polys.sum_polys[i], e), pi));
      lhs_prod = mp_add(lhs_prod, mp_scale(mp_pow(polys.prod_polys[i], e), pi));
    }
    MPoly wx = ghost_component(polys.p, nv, 0, n);
    MPoly wy = ghost_component(polys.p, nv, polys.m, n);
    if (!mp_equal(lhs_sum, mp_add(wx, wy))) return false;
    if (!mp_equal(lhs_prod, mp_mul(wx, wy))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("structure polynomials: base cases") {
  WittStructurePolys w21 = build_structure_polys(2, 1);
  // S_0 = X_0 + Y_0, P_0 = X_0 Y_0
  MPoly x0 = mp_var(2, 0), y0 = mp_var(2, 1);
  CHECK(mp_equal(w21.sum_polys[0], mp_add(x0, y0)));
  CHECK(mp_equal(w21.prod_polys[0], mp_mul(x0, y0)));

  // S_1 for p = 2: X_1 + Y_1 - X_0 Y_0 over Z (the ghost recursion fixes the
  // sign; over F_2 it evaluates the same as +X_0 Y_0)
  WittStructurePolys w22 = build_structure_polys(2, 2);
  {
    MPoly X0 = mp_var(4, 0), X1 = mp_var(4, 1), Y0 = mp_var(4, 2), Y1 = mp_var(4, 3);
    MPoly expect = mp_sub(mp_add(X1, Y1), mp_mul(X0, Y0));
    CHECK(mp_equal(w22.sum_polys[1], expect));
  }

  // S_1 for p = 3: X_1 + Y_1 - X_0^2 Y_0 - X_0 Y_0^2
  WittStructurePolys w32 = build_structure_polys(3, 2);
  {
    MPoly X0 = mp_var(4, 0), X1 = mp_var(4, 1), Y0 = mp_var(4, 2), Y1 = mp_var(4, 3);
    MPoly expect = mp_sub(mp_sub(mp_add(X1, Y1), mp_mul(mp_mul(X0, X0), Y0)),
                          mp_mul(X0, mp_mul(Y0, Y0)));
    CHECK(mp_equal(w32.sum_polys[1], expect));
  }
}

TEST_CASE("structure polynomials: ghost identity oracle") {
  for (long p : {2L, 3L}) {
    for (unsigned m = 1; m <= (p == 2 ? 4u : 3u); ++m) {
      CAPTURE(p);
      CAPTURE(m);
      CHECK(ghost_holds(witt_structure(p, m)));
    }
  }
  CHECK(ghost_holds(witt_structure(5, 2)));
}

TEST_CASE("structure polynomials: m cap") {
  CHECK_THROWS_AS(build_structure_polys(2, 5), error);
  CHECK_THROWS_AS(build_structure_polys(4, 2), error);  // 4 not prime
}

TEST_CASE("witt add/mul specific values") {
  const GRContext& f2 = gr_context(2, 1, 1);
  const WittStructurePolys& polys = witt_structure(2, 2);
  GRRingOps ops{&f2};

  // (1,0) + (1,0) = (0,1) in W_2(F_2)
  WittVecGR one = wv(f2, {1, 0});
  WittVecGR sum = witt_add(one, one, polys, ops);
  CHECK(gr_equal(sum[0], fe(f2, 0)));
  CHECK(gr_equal(sum[1], fe(f2, 1)));

  // additive identity
  WittVecGR zero = wv(f2, {0, 0});
  WittVecGR same = witt_add(one, zero, polys, ops);
  CHECK(gr_equal(same[0], one[0]));
  CHECK(gr_equal(same[1], one[1]));

  // multiplicative identity (1, 0)
  WittVecGR prod = witt_mul(one, one, polys, ops);
  CHECK(gr_equal(prod[0], fe(f2, 1)));
  CHECK(gr_equal(prod[1], fe(f2, 0)));

  CHECK_THROWS_AS(witt_add(one, wv(f2, {1}), polys, ops), error);
}

TEST_CASE("ring axioms exhaustive over W_m(F_p)") {
  for (long p : {2L, 3L}) {
    for (unsigned m = 1; m <= 3; ++m) {
      const GRContext& fp = gr_context(p, 1, 1);
      const WittStructurePolys& polys = witt_structure(p, m);
      GRRingOps ops{&fp};
      const long pm = to_long(pow_int(p, m));

      auto decode = [&](long idx) {
        WittVecGR v;
        for (unsigned i = 0; i < m; ++i) {
          v.push_back(fe(fp, idx % p));
          idx /= p;
        }
        return v;
      };
      auto eq = [&](const WittVecGR& a, const WittVecGR& b) {
        for (unsigned i = 0; i < m; ++i)
          if (!gr_equal(a[i], b[i])) return false;
        return true;
      };

      bool ok = true;
      for (long ia = 0; ia < pm && ok; ++ia)
        for (long ib = 0; ib < pm && ok; ++ib)
          for (long ic = 0; ic < pm && ok; ++ic) {
            WittVecGR A = decode(ia), B = decode(ib), C = decode(ic);
            // commutativity
            ok = ok && eq(witt_add(A, B, polys, ops), witt_add(B, A, polys, ops));
            ok = ok && eq(witt_mul(A, B, polys, ops), witt_mul(B, A, polys, ops));
            // associativity
            ok = ok && eq(witt_add(witt_add(A, B, polys, ops), C, polys, ops),
                          witt_add(A, witt_add(B, C, polys, ops), polys, ops));
            ok = ok && eq(witt_mul(witt_mul(A, B, polys, ops), C, polys, ops),
                          witt_mul(A, witt_mul(B, C, polys, ops), polys, ops));
            // distributivity
            ok = ok && eq(witt_mul(A, witt_add(B, C, polys, ops), polys, ops),
                          witt_add(witt_mul(A, B, polys, ops), witt_mul(A, C, polys, ops),
                                   polys, ops));
          }
      CAPTURE(p);
      CAPTURE(m);
      CHECK(ok);
    }
  }
}

TEST_CASE("ring axioms randomized over F_{q^k}") {
  const GRContext& f9 = gr_context(3, 1, 2);
  const WittStructurePolys& polys = witt_structure(3, 2);
  GRRingOps ops{&f9};
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> dist(0, 2);
  auto rnd = [&]() {
    WittVecGR v;
    for (int i = 0; i < 2; ++i)
      v.push_back(gr_from_coords(f9, {Int(dist(rng)), Int(dist(rng))}));
    return v;
  };
  auto eq = [&](const WittVecGR& a, const WittVecGR& b) {
    return gr_equal(a[0], b[0]) && gr_equal(a[1], b[1]);
  };
  for (int trial = 0; trial < 40; ++trial) {
    WittVecGR A = rnd(), B = rnd(), C = rnd();
    CHECK(eq(witt_add(A, B, polys, ops), witt_add(B, A, polys, ops)));
    CHECK(eq(witt_mul(witt_mul(A, B, polys, ops), C, polys, ops),
             witt_mul(A, witt_mul(B, C, polys, ops), polys, ops)));
    CHECK(eq(witt_mul(A, witt_add(B, C, polys, ops), polys, ops),
             witt_add(witt_mul(A, B, polys, ops), witt_mul(A, C, polys, ops), polys, ops)));
  }
}

TEST_CASE("witt frobenius") {
  const GRContext& f2 = gr_context(2, 1, 1);
  // (x, x^2) -> (x^2, x^4) over F_2[x]
  FqPoly x = fqp_monomial(f2, gr_one(f2), 1);
  FqPoly x2 = fqp_monomial(f2, gr_one(f2), 2);
  FqPoly x4 = fqp_monomial(f2, gr_one(f2), 4);
  WittVecPoly u{x, x2};
  WittVecPoly fu = witt_frobenius(u);
  CHECK(fqp_equal(fu[0], x2));
  CHECK(fqp_equal(fu[1], x4));

  // F_p elements are fixed
  WittVecGR over_fp = wv(f2, {1, 1});
  WittVecGR same = witt_frobenius(over_fp);
  CHECK(gr_equal(same[0], over_fp[0]));
  CHECK(gr_equal(same[1], over_fp[1]));

  // generator of F_4 maps to its square
  const GRContext& f4 = gr_context(2, 1, 2);
  WittVecGR g{gr_from_coords(f4, {Int(0), Int(1)}), gr_zero(f4)};
  WittVecGR fg = witt_frobenius(g);
  CHECK(gr_equal(fg[0], gr_from_coords(f4, {Int(1), Int(1)})));  // x^2 = x+1
  CHECK(fg[1].is_zero());
}

TEST_CASE("build_fm") {
  const GRContext& f2 = gr_context(2, 1, 1);

  // f_0 = x^3, m = 2: single summand, no carries
  TowerSpec cubic = make_tower_fp(2, {{0, {0, 0, 0, 1}}});
  WittVecPoly fm = build_fm(cubic, 2);
  CHECK(fqp_equal(fm[0], fqp_monomial(f2, gr_one(f2), 3)));
  CHECK(fm[1].is_zero());

  // f_0 = x, f_1 = x: disjoint coordinates, cross-term vanishes
  TowerSpec two_rows = make_tower_fp(2, {{0, {0, 1}}, {1, {0, 1}}});
  WittVecPoly fm2 = build_fm(two_rows, 2);
  CHECK(fqp_equal(fm2[0], fqp_monomial(f2, gr_one(f2), 1)));
  CHECK(fqp_equal(fm2[1], fqp_monomial(f2, gr_one(f2), 1)));

  // m = 1: plain field addition of the row
  TowerSpec quad = make_tower_fp(2, {{0, {0, 1, 1}}});
  WittVecPoly fm1 = build_fm(quad, 1);
  CHECK(fm1.size() == 1);
  CHECK(fm1[0].c.size() == 3);

  // carries do appear: f_0 = x + x^2 at m = 2 has a nonzero second coordinate
  WittVecPoly fmc = build_fm(quad, 2);
  // S_1 cross term of iota_0(x) + iota_0(x^2) is x * x^2 = x^3
  CHECK(fqp_equal(fmc[0], fqp_add(fqp_monomial(f2, gr_one(f2), 1),
                                  fqp_monomial(f2, gr_one(f2), 2))));
  CHECK(fqp_equal(fmc[1], fqp_monomial(f2, gr_one(f2), 3)));
}

TEST_CASE("witt trace") {
  // over F_p with ak = 1: identity
  const GRContext& f2 = gr_context(2, 1, 1);
  WittVecGR w = wv(f2, {1});
  WittVecGR t = witt_trace(w, 1);
  CHECK(gr_equal(t[0], fe(f2, 1)));

  // p=2, m=1, k=2: g + g^2 = 1 for g generating F_4
  const GRContext& f4 = gr_context(2, 1, 2);
  WittVecGR wg{gr_from_coords(f4, {Int(0), Int(1)})};
  WittVecGR tg = witt_trace(wg, 2);
  CHECK(gr_equal(tg[0], gr_one(f4)));

  // zero maps to zero
  WittVecGR z{gr_zero(f4), gr_zero(f4)};
  WittVecGR tz = witt_trace(z, 2);
  CHECK(tz[0].is_zero());
  CHECK(tz[1].is_zero());

  SUBCASE("invariance under pre-composed frobenius") {
    const GRContext& f8 = gr_context(2, 1, 3);
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> dist(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
      WittVecGR v;
      for (int i = 0; i < 2; ++i)
        v.push_back(gr_from_coords(f8, {Int(dist(rng)), Int(dist(rng)), Int(dist(rng))}));
      WittVecGR t1 = witt_trace(v, 3);
      WittVecGR t2 = witt_trace(witt_frobenius(v), 3);
      CHECK(gr_equal(t1[0], t2[0]));
      CHECK(gr_equal(t1[1], t2[1]));
    }
  }
}

TEST_CASE("nu_to_zmod") {
  CHECK(nu_to_zmod({1, 1}, 2, 2) == 3);
  CHECK(nu_to_zmod({0, 0, 0}, 2, 3) == 0);
  CHECK(nu_to_zmod({2, 0}, 3, 2) == 8);  // omega(2) = 8 in Z/9

  SUBCASE("ring isomorphism exhaustively for p = 2, 3 and m <= 3") {
    for (long p : {2L, 3L}) {
      for (unsigned m = 1; m <= 3; ++m) {
        const GRContext& fp = gr_context(p, 1, 1);
        const WittStructurePolys& polys = witt_structure(p, m);
        GRRingOps ops{&fp};
        const Int pm = pow_int(p, m);
        const long total = to_long(pm);

        auto decode = [&](long idx) {
          WittVecGR v;
          for (unsigned i = 0; i < m; ++i) {
            v.push_back(fe(fp, idx % p));
            idx /= p;
          }
          return v;
        };
        auto nu = [&](const WittVecGR& v) { return nu_to_zmod(witt_fp_coords(v), p, m); };

        bool add_ok = true, mul_ok = true, bijective = true;
        std::vector<bool> seen(total, false);
        for (long ia = 0; ia < total; ++ia) {
          WittVecGR A = decode(ia);
          seen[to_long(nu(A))] = true;
          for (long ib = 0; ib < total; ++ib) {
            WittVecGR B = decode(ib);
            Int lhs_add = nu(witt_add(A, B, polys, ops));
            Int lhs_mul = nu(witt_mul(A, B, polys, ops));
            add_ok = add_ok && lhs_add == mod_positive(nu(A) + nu(B), pm);
            mul_ok = mul_ok && lhs_mul == mod_positive(nu(A) * nu(B), pm);
          }
        }
        for (bool s : seen) bijective = bijective && s;
        CAPTURE(p);
        CAPTURE(m);
        CHECK(add_ok);
        CHECK(mul_ok);
        CHECK(bijective);
      }
    }
  }
}

TEST_CASE("structure polynomial dump is readable") {
  const WittStructurePolys& w = witt_structure(2, 2);
  std::string s = mp_to_string(w.sum_polys[1], 2);
  CHECK(s.find("X1") != std::string::npos);
  CHECK(s.find("Y1") != std::string::npos);
}
