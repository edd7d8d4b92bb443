#include "aswt/tseries.hpp"

#include <algorithm>

namespace aswt {

TSeries ts_zero(long p, unsigned Np, unsigned NT) {
  TSeries a;
  a.p = p;
  a.Np = Np;
  a.NT = NT;
  a.pNp = pow_int(p, Np);
  a.c.assign(NT, Int(0));
  return a;
}

TSeries ts_const(long p, unsigned Np, unsigned NT, const Int& v) {
  TSeries a = ts_zero(p, Np, NT);
  a.c[0] = mod_positive(v, a.pNp);
  return a;
}

TSeries ts_from_coeffs(long p, unsigned Np, unsigned NT, std::vector<Int> coeffs) {
  TSeries a = ts_zero(p, Np, NT);
  ASWT_REQUIRE(coeffs.size() <= NT, "ts_from_coeffs: too many coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) a.c[i] = mod_positive(coeffs[i], a.pNp);
  return a;
}

TSeries ts_reduce(const TSeries& a, unsigned Np, unsigned NT) {
  ASWT_REQUIRE(Np <= a.Np && NT <= a.NT, "ts_reduce: cannot extend precision");
  TSeries out = ts_zero(a.p, Np, NT);
  for (unsigned i = 0; i < NT; ++i) out.c[i] = mod_positive(a.c[i], out.pNp);
  return out;
}

bool ts_equal(const TSeries& a, const TSeries& b) {
  return a.p == b.p && a.Np == b.Np && a.NT == b.NT && a.c == b.c;
}

namespace {
std::pair<unsigned, unsigned> common_header(const TSeries& a, const TSeries& b) {
  ASWT_REQUIRE(a.p == b.p, "tseries: prime mismatch");
  return {std::min(a.Np, b.Np), std::min(a.NT, b.NT)};
}
}  // namespace

TSeries ts_add(const TSeries& a, const TSeries& b) {
  auto [Np, NT] = common_header(a, b);
  TSeries out = ts_zero(a.p, Np, NT);
  for (unsigned i = 0; i < NT; ++i) out.c[i] = mod_positive(a.c[i] + b.c[i], out.pNp);
  return out;
}

TSeries ts_sub(const TSeries& a, const TSeries& b) {
  auto [Np, NT] = common_header(a, b);
  TSeries out = ts_zero(a.p, Np, NT);
  for (unsigned i = 0; i < NT; ++i) out.c[i] = mod_positive(a.c[i] - b.c[i], out.pNp);
  return out;
}

TSeries ts_neg(const TSeries& a) {
  TSeries out = a;
  for (Int& x : out.c) if (x != 0) x = a.pNp - x;
  return out;
}

TSeries ts_mul(const TSeries& a, const TSeries& b) {
  auto [Np, NT] = common_header(a, b);
  TSeries out = ts_zero(a.p, Np, NT);
  for (unsigned i = 0; i < NT; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; i + j < NT; ++j) {
      if (b.c[j] == 0) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  for (Int& x : out.c) x = mod_positive(x, out.pNp);
  return out;
}

TSeries ts_scale(const TSeries& a, const Int& k) {
  TSeries out = a;
  Int kk = mod_positive(k, a.pNp);
  for (Int& x : out.c) x = mod_positive(x * kk, a.pNp);
  return out;
}

TSeries ts_shift(const TSeries& a, unsigned j) {
  TSeries out = ts_zero(a.p, a.Np, a.NT);
  for (unsigned i = 0; i + j < a.NT; ++i) out.c[i + j] = a.c[i];
  return out;
}

TSeries ts_pow(const TSeries& a, unsigned long e) {
  TSeries result = ts_const(a.p, a.Np, a.NT, 1);
  TSeries base = a;
  while (e > 0) {
    if (e & 1) result = ts_mul(result, base);
    e >>= 1;
    if (e > 0) base = ts_mul(base, base);
  }
  return result;
}

TSeries ts_exact_div_int(const TSeries& a, const Int& n) {
  ASWT_REQUIRE(n != 0, "ts_exact_div_int by zero");
  Int nn = abs(n);
  unsigned long v = (nn == 1) ? 0 : padic_val(nn, Int(a.p));
  Int pv = pow_int(a.p, v);
  Int unit = nn / pv;
  ASWT_REQUIRE(v < a.Np, "ts_exact_div_int: dividing away all precision");
  TSeries out = ts_zero(a.p, a.Np - static_cast<unsigned>(v), a.NT);
  Int inv_unit = mod_inverse(unit, out.pNp);
  for (unsigned i = 0; i < a.NT; ++i) {
    ASWT_REQUIRE(a.c[i] % pv == 0,
                 "ts_exact_div_int: coefficient not divisible (integrality guard)");
    out.c[i] = mod_positive((a.c[i] / pv) * inv_unit, out.pNp);
  }
  if (n < 0) out = ts_neg(out);
  return out;
}

unsigned ts_order(const TSeries& a) {
  for (unsigned i = 0; i < a.NT; ++i)
    if (a.c[i] != 0) return i;
  return a.NT;
}

// --- GRSeries ---

GRSeries grs_zero(const GRContext& gr, unsigned NT) {
  GRSeries a;
  a.gr = &gr;
  a.NT = NT;
  a.c.assign(NT, gr_zero(gr));
  return a;
}

GRSeries grs_one(const GRContext& gr, unsigned NT) {
  GRSeries a = grs_zero(gr, NT);
  a.c[0] = gr_one(gr);
  return a;
}

GRSeries grs_from_ts(const GRContext& gr, const TSeries& a) {
  ASWT_REQUIRE(gr.p == a.p && gr.m == a.Np, "grs_from_ts: header mismatch");
  GRSeries out = grs_zero(gr, a.NT);
  for (unsigned i = 0; i < a.NT; ++i) out.c[i] = gr_from_int(gr, a.c[i]);
  return out;
}

bool grs_equal(const GRSeries& a, const GRSeries& b) {
  if (a.gr != b.gr || a.NT != b.NT) return false;
  for (unsigned i = 0; i < a.NT; ++i)
    if (!gr_equal(a.c[i], b.c[i])) return false;
  return true;
}

GRSeries grs_add(const GRSeries& a, const GRSeries& b) {
  ASWT_REQUIRE(a.gr == b.gr, "grs_add: context mismatch");
  GRSeries out = grs_zero(*a.gr, std::min(a.NT, b.NT));
  for (unsigned i = 0; i < out.NT; ++i) out.c[i] = gr_add(a.c[i], b.c[i]);
  return out;
}

GRSeries grs_sub(const GRSeries& a, const GRSeries& b) {
  ASWT_REQUIRE(a.gr == b.gr, "grs_sub: context mismatch");
  GRSeries out = grs_zero(*a.gr, std::min(a.NT, b.NT));
  for (unsigned i = 0; i < out.NT; ++i) out.c[i] = gr_sub(a.c[i], b.c[i]);
  return out;
}

GRSeries grs_mul(const GRSeries& a, const GRSeries& b) {
  ASWT_REQUIRE(a.gr == b.gr, "grs_mul: context mismatch");
  GRSeries out = grs_zero(*a.gr, std::min(a.NT, b.NT));
  GRElem t;
  for (unsigned i = 0; i < out.NT; ++i) {
    if (a.c[i].is_zero()) continue;
    for (unsigned j = 0; i + j < out.NT; ++j) {
      if (b.c[j].is_zero()) continue;
      gr_mul_into(t, a.c[i], b.c[j]);
      out.c[i + j] = gr_add(out.c[i + j], t);
    }
  }
  return out;
}

GRSeries grs_scale_elem(const GRSeries& a, const GRElem& k) {
  GRSeries out = grs_zero(*a.gr, a.NT);
  GRElem t;
  for (unsigned i = 0; i < a.NT; ++i) {
    if (a.c[i].is_zero()) continue;
    gr_mul_into(t, a.c[i], k);
    out.c[i] = t;
  }
  return out;
}

GRSeries grs_frobenius_inv(const GRSeries& a) {
  GRSeries out = a;
  for (GRElem& x : out.c)
    if (!x.is_zero()) x = gr_frobenius_inv(x);
  return out;
}

unsigned grs_order(const GRSeries& a) {
  for (unsigned i = 0; i < a.NT; ++i)
    if (!a.c[i].is_zero()) return i;
  return a.NT;
}

TSeries grs_to_prime(const GRSeries& a) {
  TSeries out = ts_zero(a.gr->p, a.gr->m, a.NT);
  for (unsigned i = 0; i < a.NT; ++i) {
    for (unsigned j = 1; j < a.gr->n; ++j)
      ASWT_REQUIRE(a.c[i].c[j] == 0, "grs_to_prime: coefficient not in prime subring");
    out.c[i] = a.c[i].c[0];
  }
  return out;
}

}  // namespace aswt
