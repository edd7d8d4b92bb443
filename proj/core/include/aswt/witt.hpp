#pragma once

// Truncated Witt vectors W_m(R) for coefficient rings R of characteristic p.
// Addition and multiplication go through the universal structure polynomials
// S_n, P_n, generated once per (p, m) by the ghost-component recursion
//
//   S_n = (w_n(X) + w_n(Y) - sum_{i<n} p^i S_i^{p^{n-i}}) / p^n
//
// over exact integers, with the division asserted exact.  m is capped at 4:
// the symbolic tables grow superexponentially beyond that.

#include <map>
#include <string>
#include <vector>

#include "aswt/galois_ring.hpp"
#include "aswt/numeric.hpp"

namespace aswt {

struct TowerSpec;  // tower.hpp

// --- sparse multivariate polynomial over Z ---

struct MPoly {
  unsigned nvars = 0;
  std::map<std::vector<unsigned>, Int> terms;  // exponent vector -> coefficient
};

MPoly mp_zero(unsigned nvars);
MPoly mp_const(unsigned nvars, const Int& c);
MPoly mp_var(unsigned nvars, unsigned i);
MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_sub(const MPoly& a, const MPoly& b);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_pow(const MPoly& a, unsigned long e);
MPoly mp_scale(const MPoly& a, const Int& c);
// divides every coefficient, throws on non-exact division
MPoly mp_exact_div(const MPoly& a, const Int& c);
bool mp_equal(const MPoly& a, const MPoly& b);
// human-readable dump with variables named X0..X{m-1}, Y0..Y{m-1}
std::string mp_to_string(const MPoly& f, unsigned m);

// Generic evaluation.  Ops provides: value_type, zero(), add(a,b), mul(a,b),
// from_int(Int) (reduction into the char-p ring included).
template <typename Ops>
typename Ops::value_type mp_eval(const MPoly& f,
                                 const std::vector<typename Ops::value_type>& vals,
                                 const Ops& ops) {
  using R = typename Ops::value_type;
  // power tables per variable
  std::vector<unsigned> maxe(f.nvars, 0);
  for (const auto& [e, c] : f.terms)
    for (unsigned i = 0; i < f.nvars; ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<R>> pows(f.nvars);
  for (unsigned i = 0; i < f.nvars; ++i) {
    if (maxe[i] == 0) continue;
    pows[i].resize(maxe[i] + 1);
    pows[i][1] = vals[i];
    for (unsigned e = 2; e <= maxe[i]; ++e) pows[i][e] = ops.mul(pows[i][e - 1], vals[i]);
  }
  R acc = ops.zero();
  for (const auto& [e, c] : f.terms) {
    R t = ops.from_int(c);
    for (unsigned i = 0; i < f.nvars; ++i)
      if (e[i] > 0) t = ops.mul(t, pows[i][e[i]]);
    acc = ops.add(acc, t);
  }
  return acc;
}

// --- structure polynomials ---

struct WittStructurePolys {
  long p = 0;
  unsigned m = 0;
  // S_0..S_{m-1} and P_0..P_{m-1} in variables X_0..X_{m-1} (indices 0..m-1)
  // and Y_0..Y_{m-1} (indices m..2m-1)
  std::vector<MPoly> sum_polys;
  std::vector<MPoly> prod_polys;
};

WittStructurePolys build_structure_polys(long p, unsigned m);
// interned cache (write-once, then read-only)
const WittStructurePolys& witt_structure(long p, unsigned m);

// ghost component w_n(Z_0..Z_n) = sum p^i Z_i^{p^{n-i}} with Z_i = var(offset+i)
MPoly ghost_component(long p, unsigned nvars, unsigned offset, unsigned n);

// --- Witt vector operations over a generic char-p ring ---

template <typename Ops>
std::vector<typename Ops::value_type> witt_add(
    const std::vector<typename Ops::value_type>& u,
    const std::vector<typename Ops::value_type>& v,
    const WittStructurePolys& polys, const Ops& ops) {
  ASWT_REQUIRE(u.size() == v.size() && u.size() == polys.m, "witt_add: length mismatch");
  std::vector<typename Ops::value_type> vals;
  vals.reserve(2 * polys.m);
  vals.insert(vals.end(), u.begin(), u.end());
  vals.insert(vals.end(), v.begin(), v.end());
  std::vector<typename Ops::value_type> out(polys.m);
  for (unsigned i = 0; i < polys.m; ++i) out[i] = mp_eval(polys.sum_polys[i], vals, ops);
  return out;
}

template <typename Ops>
std::vector<typename Ops::value_type> witt_mul(
    const std::vector<typename Ops::value_type>& u,
    const std::vector<typename Ops::value_type>& v,
    const WittStructurePolys& polys, const Ops& ops) {
  ASWT_REQUIRE(u.size() == v.size() && u.size() == polys.m, "witt_mul: length mismatch");
  std::vector<typename Ops::value_type> vals;
  vals.reserve(2 * polys.m);
  vals.insert(vals.end(), u.begin(), u.end());
  vals.insert(vals.end(), v.begin(), v.end());
  std::vector<typename Ops::value_type> out(polys.m);
  for (unsigned i = 0; i < polys.m; ++i) out[i] = mp_eval(polys.prod_polys[i], vals, ops);
  return out;
}

// --- concrete coefficient rings ---

// field F_{p^n} (a GR context with m == 1)
struct GRRingOps {
  const GRContext* ctx;
  using value_type = GRElem;
  GRElem zero() const { return gr_zero(*ctx); }
  GRElem add(const GRElem& a, const GRElem& b) const { return gr_add(a, b); }
  GRElem mul(const GRElem& a, const GRElem& b) const { return gr_mul(a, b); }
  GRElem from_int(const Int& c) const { return gr_from_int(*ctx, c); }
};

// dense polynomials over F_q
struct FqPoly {
  const GRContext* field = nullptr;
  std::vector<GRElem> c;  // c[0] + c[1] x + ...

  bool is_zero() const { return c.empty(); }
};

FqPoly fqp_zero(const GRContext& field);
FqPoly fqp_monomial(const GRContext& field, const GRElem& a, unsigned u);
FqPoly fqp_add(const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const FqPoly& a, const FqPoly& b);
// coordinatewise p-th power: (sum a_i x^i)^p = sum a_i^p x^{ip} in char p
FqPoly fqp_pow_p(const FqPoly& a);
bool fqp_equal(const FqPoly& a, const FqPoly& b);
// evaluate with coefficients pushed through an embedding F_q -> F_{q^k}
GRElem fqp_eval(const FqPoly& f, const EmbedMap& emb, const GRElem& x);

struct FqPolyOps {
  const GRContext* field;
  using value_type = FqPoly;
  FqPoly zero() const { return fqp_zero(*field); }
  FqPoly add(const FqPoly& a, const FqPoly& b) const { return fqp_add(a, b); }
  FqPoly mul(const FqPoly& a, const FqPoly& b) const { return fqp_mul(a, b); }
  FqPoly from_int(const Int& c) const {
    GRElem e = gr_from_int(*field, c);
    return e.is_zero() ? fqp_zero(*field) : fqp_monomial(*field, e, 0);
  }
};

using WittVecGR = std::vector<GRElem>;
using WittVecPoly = std::vector<FqPoly>;

// coordinatewise p-th power (Witt-vector Frobenius F)
WittVecGR witt_frobenius(const WittVecGR& u);
WittVecPoly witt_frobenius(const WittVecPoly& u);

// f^{(m)} = tau_m(sum_i iota_i(f_i)) computed with witt_add over F_q[x]
WittVecPoly build_fm(const TowerSpec& spec, unsigned m);

// Tr_{W_m(F_{q^k})/W_m(F_p)}: Witt-sum of F^j(w), j < deg; coordinates of the
// result must land in F_p (checked).
WittVecGR witt_trace(const WittVecGR& w, unsigned ext_degree);

// nu_{m,k} restricted to W_m(F_p): sum omega(a_i) p^i mod p^m with omega the
// Teichmuller lift of F_p into Z/p^m.
Int nu_to_zmod(const std::vector<long>& coords, long p, unsigned m);
// convenience: check coordinates lie in F_p and convert
std::vector<long> witt_fp_coords(const WittVecGR& w);

}  // namespace aswt
