#include "aswt/lseries.hpp"

#include <algorithm>

namespace aswt {

LPolynomial lstar_from_sums(const ExpSumTable& sums, long p, long d, bool nondegen) {
  ASWT_REQUIRE(d >= 1, "lstar_from_sums: degree must be positive");
  const unsigned m = sums.m;
  const long n_max = nondegen ? d + 2 : std::min<long>(d, static_cast<long>(sums.sums.size()));
  ASWT_REQUIRE(static_cast<long>(sums.sums.size()) >= n_max,
               "lstar_from_sums: not enough exponential sums");

  LPolynomial L;
  L.p = p;
  L.m = m;
  L.expected_degree = d;
  L.nondegen = nondegen;
  L.coeffs.push_back(cyc_one(p, m));
  for (long n = 1; n <= n_max; ++n) {
    CycInt acc = cyc_zero(p, m);
    for (long k = 1; k <= n; ++k)
      acc = cyc_add(acc, cyc_mul(sums.sums[k - 1], L.coeffs[n - k]));
    try {
      L.coeffs.push_back(cyc_exact_div_int(acc, Int(n)));
    } catch (const error&) {
      throw error("lstar_from_sums: integrality of L* fails at n = " + std::to_string(n));
    }
  }
  if (nondegen) {
    for (long n = d + 1; n <= d + 2; ++n)
      ASWT_REQUIRE(L.coeffs[n].is_zero(),
                   "Liu-Wei degree oracle violated: c_" + std::to_string(n) + " != 0");
    L.coeffs.resize(d + 1);
    L.degree_confirmed = true;
  }
  return L;
}

CycInt psi_frob0(const TowerSpec& spec, unsigned m) {
  const GRContext& gr = gr_context(spec.p, m, spec.a);
  GRElem acc = gr_zero(gr);
  for (const TowerRow& r : spec.rows) {
    if (r.index >= m) continue;
    if (r.coeffs[0].is_zero()) continue;
    GRElem t = teichmuller(gr, gr_residue(r.coeffs[0]));
    acc = gr_add(acc, gr_scale(t, pow_int(spec.p, r.index)));
  }
  return psi_char(spec.p, m, gr_trace(acc));
}

LPolynomial l_from_lstar(const LPolynomial& lstar, const CycInt& frob0) {
  // L* = (1 - w s) L: synthetic division l_i = c_i + w l_{i-1}
  LPolynomial L;
  L.p = lstar.p;
  L.m = lstar.m;
  L.expected_degree = lstar.expected_degree - 1;
  L.nondegen = lstar.nondegen;
  L.degree_confirmed = lstar.degree_confirmed;
  const long d = static_cast<long>(lstar.coeffs.size()) - 1;
  std::vector<CycInt> l(d + 1, cyc_zero(lstar.p, lstar.m));
  l[0] = cyc_one(lstar.p, lstar.m);
  for (long i = 1; i <= d; ++i)
    l[i] = cyc_add(lstar.coeffs[i], cyc_mul(frob0, l[i - 1]));
  ASWT_REQUIRE(l[d].is_zero(),
               "l_from_lstar: L* not divisible by (1 - psi(Frob_0) s)");
  l.pop_back();
  L.coeffs = std::move(l);
  return L;
}

unsigned default_cstar_Np(long d) {
  return static_cast<unsigned>(std::max<long>(d * d, 8));
}

CStarTruncation cstar_truncated(const LPolynomial& lstar, unsigned a_ext,
                                unsigned Ns, unsigned Np) {
  const long p = lstar.p;
  const unsigned m = lstar.m;
  CStarTruncation out;
  out.p = p;
  out.a = a_ext;
  out.m = m;
  out.Ns = Ns;
  out.Np = Np;
  out.pNp = pow_int(p, Np);

  const Int q = pow_int(p, a_ext);
  unsigned J = (Np + a_ext - 1) / a_ext;  // least J with a*J >= Np

  std::vector<CycInt> prod(Ns + 1, cyc_zero(p, m));
  prod[0] = cyc_one(p, m);
  for (unsigned j = 0; j <= J; ++j) {
    // factor L*(q^j s) truncated at s^Ns, coefficients mod p^Np
    Int qj;
    mpz_powm(qj.get_mpz_t(), q.get_mpz_t(), Int(j).get_mpz_t(), out.pNp.get_mpz_t());
    std::vector<CycInt> factor;
    Int scale = 1;
    for (std::size_t i = 0; i < lstar.coeffs.size() && i <= Ns; ++i) {
      factor.push_back(cyc_reduce_coeffs(cyc_scale(lstar.coeffs[i], scale), out.pNp));
      scale = mod_positive(scale * qj, out.pNp);
    }
    std::vector<CycInt> next(Ns + 1, cyc_zero(p, m));
    for (unsigned s1 = 0; s1 <= Ns; ++s1) {
      if (prod[s1].is_zero()) continue;
      for (unsigned s2 = 0; s1 + s2 <= Ns && s2 < factor.size(); ++s2) {
        if (factor[s2].is_zero()) continue;
        next[s1 + s2] = cyc_add(next[s1 + s2], cyc_mul(prod[s1], factor[s2]));
      }
    }
    for (CycInt& c : next) c = cyc_reduce_coeffs(c, out.pNp);
    prod = std::move(next);
  }

  const Int trust_cap = (Int(Np) - 1) * Int(cyc_phi(p, m));
  out.coeffs = std::move(prod);
  out.trusted.resize(Ns + 1, false);
  out.ord_pi.resize(Ns + 1);
  for (unsigned n = 0; n <= Ns; ++n) {
    Valuation v = pi_valuation(out.coeffs[n]);
    if (v.is_infinite) continue;  // residue 0: valuation >= Np levels, untrusted
    Int ord = v.value.get_num();
    out.ord_pi[n] = ord;
    out.trusted[n] = ord < trust_cap;
  }
  return out;
}

}  // namespace aswt
