#include <doctest.h>

#include <random>

#include "aswt/galois_ring.hpp"

using namespace aswt;

namespace {
GRElem elem(const GRContext& ctx, std::vector<long> coords) {
  std::vector<Int> c(coords.begin(), coords.end());
  return gr_from_coords(ctx, std::move(c));
}

GRElem random_elem(const GRContext& ctx, std::mt19937& rng) {
  std::vector<Int> c(ctx.n);
  std::uniform_int_distribution<long> dist(0, to_long(ctx.pm) - 1);
  for (Int& x : c) x = dist(rng);
  return gr_from_coords(ctx, std::move(c));
}
}  // namespace

TEST_CASE("canonical moduli") {
  // GR(4, 2): lex-smallest irreducible of degree 2 over F_2 is x^2+x+1
  const GRContext& gr42 = gr_context(2, 2, 2);
  CHECK(gr42.modulus == std::vector<long>{1, 1, 1});
  CHECK(gr42.pm == 4);

  // n = 1: the ring Z/2^m with modulus x
  const GRContext& z8 = gr_context(2, 3, 1);
  CHECK(z8.modulus == std::vector<long>{0, 1});
  GRElem five = gr_from_int(z8, Int(13));
  CHECK(five.c[0] == 5);  // reduced mod 8

  // F_9: x^2 + 1 is the first irreducible in the (c_0, c_1) scan over F_3
  const GRContext& f9 = gr_context(3, 1, 2);
  CHECK(f9.modulus == std::vector<long>{1, 0, 1});

  // F_8: x^3 + x + 1 comes before x^3 + x^2 + 1
  CHECK(gr_context(2, 1, 3).modulus == std::vector<long>{1, 1, 0, 1});
}

TEST_CASE("ring arithmetic basics") {
  const GRContext& gr = gr_context(2, 2, 2);
  GRElem x = elem(gr, {0, 1});
  // x^2 = 3x + 3 modulo the lifted modulus
  CHECK(gr_equal(gr_mul(x, x), elem(gr, {3, 3})));
  // x^3 = 1 in GR(4,2)
  CHECK(gr_equal(gr_pow(x, Int(3)), gr_one(gr)));
  CHECK(gr_equal(gr_add(x, gr_neg(x)), gr_zero(gr)));
}

TEST_CASE("teichmuller lifts") {
  const GRContext& gr42 = gr_context(2, 2, 2);
  CHECK(gr_equal(teichmuller(gr42, {0, 0}), gr_zero(gr42)));
  CHECK(gr_equal(teichmuller(gr42, {1, 0}), gr_one(gr42)));
  // class of x already satisfies x^4 = x (x^3 = 1)
  CHECK(gr_equal(teichmuller(gr42, {0, 1}), elem(gr42, {0, 1})));

  // GR(9, 1): teich(2) = 8
  const GRContext& z9 = gr_context(3, 2, 1);
  CHECK(teichmuller(z9, {2}).c[0] == 8);

  SUBCASE("multiplicative on random pairs") {
    const GRContext& gr = gr_context(3, 2, 2);
    const GRContext& f9 = gr_context(3, 1, 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<long> dist(0, 2);
      std::vector<long> ra{dist(rng), dist(rng)}, rb{dist(rng), dist(rng)};
      GRElem ta = teichmuller(gr, ra), tb = teichmuller(gr, rb);
      GRElem rab = gr_mul(elem(f9, ra), elem(f9, rb));
      CHECK(gr_equal(gr_mul(ta, tb), teichmuller(gr, gr_residue(rab))));
    }
  }
}

TEST_CASE("frobenius") {
  const GRContext& gr = gr_context(2, 2, 2);
  // fixed on the prime subring
  CHECK(gr_equal(gr_frobenius(gr_from_int(gr, Int(3))), gr_from_int(gr, Int(3))));
  // frobenius(x) = x^2 = 3x+3 (x is Teichmuller)
  CHECK(gr_equal(gr_frobenius(elem(gr, {0, 1})), elem(gr, {3, 3})));

  SUBCASE("order n and digit-map agreement on random elements") {
    const GRContext& big = gr_context(2, 3, 4);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      GRElem a = random_elem(big, rng);
      GRElem b = a;
      for (unsigned j = 0; j < big.n; ++j) b = gr_frobenius(b);
      CHECK(gr_equal(b, a));
      CHECK(gr_equal(gr_frobenius(a), gr_frobenius_digits(a)));
      CHECK(gr_equal(gr_frobenius(gr_frobenius_inv(a)), a));
    }
  }

  SUBCASE("ring homomorphism on random pairs") {
    const GRContext& gr33 = gr_context(3, 3, 2);
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
      GRElem a = random_elem(gr33, rng), b = random_elem(gr33, rng);
      CHECK(gr_equal(gr_frobenius(gr_add(a, b)), gr_add(gr_frobenius(a), gr_frobenius(b))));
      CHECK(gr_equal(gr_frobenius(gr_mul(a, b)), gr_mul(gr_frobenius(a), gr_frobenius(b))));
    }
  }
}

TEST_CASE("trace") {
  const GRContext& gr = gr_context(2, 2, 2);
  CHECK(gr_trace(gr_one(gr)) == 2);  // n mod p^m
  CHECK(gr_trace(elem(gr, {0, 1})) == 3);

  SUBCASE("frobenius invariance and linearity") {
    const GRContext& big = gr_context(3, 2, 3);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      GRElem a = random_elem(big, rng), b = random_elem(big, rng);
      CHECK(gr_trace(gr_frobenius(a)) == gr_trace(a));
      CHECK(gr_trace(gr_add(a, b)) == mod_positive(gr_trace(a) + gr_trace(b), big.pm));
      Int k(5);
      CHECK(gr_trace(gr_scale(a, k)) == mod_positive(k * gr_trace(a), big.pm));
      CHECK(gr_trace_fast(a) == gr_trace(a));
    }
  }
}

TEST_CASE("embeddings") {
  // prime field: constant inclusion
  const GRContext& f2 = gr_context(2, 1, 1);
  const GRContext& f8 = gr_context(2, 1, 3);
  EmbedMap inc = embed(f2, f8);
  CHECK(gr_equal(inc.apply(gr_one(f2)), gr_one(f8)));
  CHECK(gr_equal(inc.apply(gr_zero(f2)), gr_zero(f8)));

  // F_4 into itself: the least root of x^2+x+1 among {x, x+1} is x
  const GRContext& f4 = gr_context(2, 1, 2);
  EmbedMap idem = embed(f4, f4);
  CHECK(gr_equal(idem.apply(elem(f4, {0, 1})), elem(f4, {0, 1})));
  CHECK(embed_root_count(f4, f4) == 2);
  // the other conjugate root is x+1 = x^2
  EmbedMap conj = embed(f4, f4, 1);
  CHECK(gr_equal(conj.apply(elem(f4, {0, 1})), elem(f4, {1, 1})));

  SUBCASE("trace compatibility: Tr_sup(embed(y)) = k Tr_sub(y)") {
    const GRContext& f16 = gr_context(2, 1, 4);  // k = 2
    EmbedMap e = embed(f4, f16);
    std::vector<long> coords(2, 0);
    do {
      GRElem y = elem(f4, coords);
      CHECK(gr_trace(e.apply(y)) == mod_positive(Int(2) * gr_trace(y), Int(2)));
    } while (next_residue_tuple(coords, 2));

    const GRContext& f9 = gr_context(3, 1, 2);
    const GRContext& f729 = gr_context(3, 1, 6);  // k = 3
    EmbedMap e3 = embed(f9, f729);
    std::vector<long> c9(2, 0);
    do {
      GRElem y = elem(f9, c9);
      CHECK(gr_trace(e3.apply(y)) == mod_positive(Int(3) * gr_trace(y), Int(3)));
    } while (next_residue_tuple(c9, 3));
  }

  SUBCASE("homomorphism on all of F_4") {
    const GRContext& f16 = gr_context(2, 1, 4);
    EmbedMap e = embed(f4, f16);
    std::vector<long> ca(2, 0);
    do {
      std::vector<long> cb(2, 0);
      do {
        GRElem a = elem(f4, ca), b = elem(f4, cb);
        CHECK(gr_equal(e.apply(gr_mul(a, b)), gr_mul(e.apply(a), e.apply(b))));
        CHECK(gr_equal(e.apply(gr_add(a, b)), gr_add(e.apply(a), e.apply(b))));
      } while (next_residue_tuple(cb, 2));
    } while (next_residue_tuple(ca, 2));
  }
}

TEST_CASE("generators scan in canonical order") {
  // F_4: x is the first element of order 3
  CHECK(gr_context(2, 1, 2).generator == std::vector<long>{0, 1});
  // F_5 = GR(5,1,1): 2 is the least primitive root mod 5
  CHECK(gr_context(5, 1, 1).generator == std::vector<long>{2});
  // order check on a bigger field
  const GRContext& f81 = gr_context(3, 1, 4);
  GRElem g = elem(f81, std::vector<long>(f81.generator));
  long order = 1;
  GRElem acc = g;
  while (!gr_equal(acc, gr_one(f81))) {
    acc = gr_mul(acc, g);
    ++order;
  }
  CHECK(order == 80);
}
