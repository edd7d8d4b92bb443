#include "aswt/dwork.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace aswt {

TSeries artin_hasse(long p, unsigned NX, unsigned Np) {
  // exact rational recurrence n e_n = sum_{p^i <= n} e_{n - p^i}
  std::vector<Rat> e(NX);
  e[0] = 1;
  for (unsigned long n = 1; n < NX; ++n) {
    Rat acc(0);
    for (Int pi = 1; pi <= n; pi *= p) acc += e[n - to_long(pi)];
    e[n] = acc / Rat(n);
  }
  TSeries out = ts_zero(p, Np, NX);
  for (unsigned n = 0; n < NX; ++n) {
    const Int den = e[n].get_den();
    ASWT_REQUIRE(den % p != 0,
                 "artin_hasse: coefficient not p-integral (integrality falsified)");
    out.c[n] = mod_positive(e[n].get_num() * mod_inverse(den, out.pNp), out.pNp);
  }
  return out;
}

TSeries pi_series(long p, unsigned i, unsigned NT, unsigned Np) {
  const TSeries E = artin_hasse(p, NT, Np);
  TSeries target = ts_zero(p, Np, NT);
  const Int pe = pow_int(p, i);
  for (unsigned j = 0; j < NT; ++j) {
    if (pe < j) break;  // C(p^i, j) = 0 beyond p^i
    Int bin;
    mpz_bin_ui(bin.get_mpz_t(), pe.get_mpz_t(), j);
    target.c[j] = mod_positive(bin, target.pNp);
  }

  auto compose_E = [&](const TSeries& s) {
    TSeries comp = ts_zero(p, Np, NT);
    for (unsigned v = NT; v-- > 0;) {
      comp = ts_mul(comp, s);
      comp.c[0] = mod_positive(comp.c[0] + E.c[v], comp.pNp);
    }
    return comp;
  };

  TSeries pi = ts_zero(p, Np, NT);
  for (unsigned j = 1; j < NT; ++j) {
    TSeries comp = compose_E(pi);
    // E has linear coefficient 1, so the T^j slot responds with unit slope
    pi.c[j] = mod_positive(target.c[j] - comp.c[j], pi.pNp);
  }
  ASWT_REQUIRE(ts_equal(compose_E(pi), target), "pi_series: reversion failed");

  ASWT_REQUIRE(pi.c[0] == 0, "pi_series: constant term nonzero");
  ASWT_REQUIRE(pi.c[1] == mod_positive(pe, pi.pNp), "pi_series: linear term != p^i");
  // binomial decay: T^j coefficient has p-order >= i - floor(log_p j)
  for (unsigned j = 1; j < NT; ++j) {
    long lg = 0;
    for (Int pw = p; pw <= j; pw *= p) ++lg;
    long need = static_cast<long>(i) - lg;
    if (need <= 0) continue;
    Int pneed = pow_int(p, std::min<long>(need, Np));
    ASWT_REQUIRE(pi.c[j] % pneed == 0, "pi_series: binomial decay violated");
  }
  return pi;
}

DworkParams default_dwork_params(const TowerSpec& spec, unsigned Ns) {
  const TowerConstants& K = spec.consts;
  DworkParams P;
  P.Ns = Ns;
  // Lambda_Ns = a(p-1)Ns(Ns-1)/(2 delta), rounded up
  Rat L = Rat(Int(spec.a) * (spec.p - 1) * Ns * (Ns - 1)) / (Rat(2) * K.delta);
  Int Lceil = (L.get_num() + L.get_den() - 1) / L.get_den();
  P.NT = static_cast<unsigned>(to_long(Lceil)) + static_cast<unsigned>(K.delta1) + 2;
  if (K.m_tilde == 1) {
    P.Np = P.NT;
  } else {
    Int denom = pow_int(spec.p, K.m_tilde - 2) * (spec.p - 1);
    P.Np = static_cast<unsigned>(to_long((Int(P.NT) + denom - 1) / denom)) + 2;
  }
  unsigned pad = 0;  // v_p(Ns!)
  for (Int pw = spec.p; pw <= Ns; pw *= spec.p) pad += Ns / to_long(pw);
  P.Np_internal = P.Np + pad;
  P.B = static_cast<unsigned>(K.D * P.NT + K.D);
  P.Umax = spec.p * static_cast<long>(P.B);
  return P;
}

EfCoefficients build_Ef(const TowerSpec& spec, unsigned NT, unsigned Np, long Umax) {
  const long p = spec.p;
  const GRContext& gr = gr_context(p, Np, spec.a);
  const TSeries E = artin_hasse(p, NT, Np);

  using XPoly = std::map<long, GRSeries>;  // x-degree -> Z_q[[T]] coefficient

  auto xmul = [&](const XPoly& A, const XPoly& B) {
    XPoly out;
    for (const auto& [da, ca] : A) {
      for (const auto& [db, cb] : B) {
        if (da + db > Umax) break;  // map iterates in increasing degree
        GRSeries prod = grs_mul(ca, cb);
        if (prod.is_zero()) continue;
        auto it = out.find(da + db);
        if (it == out.end())
          out.emplace(da + db, std::move(prod));
        else
          it->second = grs_add(it->second, prod);
      }
    }
    return out;
  };

  XPoly ef;
  ef.emplace(0, grs_one(gr, NT));
  for (const TowerRow& row : spec.rows) {
    TSeries piT = pi_series(p, row.index, NT, Np);
    std::vector<TSeries> pipow(NT);
    pipow[0] = ts_const(p, Np, NT, 1);
    for (unsigned v = 1; v < NT; ++v) pipow[v] = ts_mul(pipow[v - 1], piT);

    for (std::size_t u = 0; u < row.coeffs.size(); ++u) {
      if (row.coeffs[u].is_zero()) continue;
      GRElem that = teichmuller(gr, gr_residue(row.coeffs[u]));
      XPoly factor;
      GRElem tpow = gr_one(gr);
      for (unsigned v = 0; v < NT; ++v) {
        long xdeg = static_cast<long>(u) * v;
        if (xdeg > Umax) break;
        TSeries s = ts_scale(pipow[v], E.c[v]);  // e_v pi_i^v
        GRSeries coef = grs_scale_elem(grs_from_ts(gr, s), tpow);
        if (!coef.is_zero()) {
          auto it = factor.find(xdeg);
          if (it == factor.end())
            factor.emplace(xdeg, std::move(coef));
          else
            it->second = grs_add(it->second, coef);
        }
        if (v + 1 < NT) tpow = gr_mul(tpow, that);
      }
      ef = xmul(ef, factor);
    }
  }

  EfCoefficients out;
  out.gr = &gr;
  out.NT = NT;
  out.Umax = Umax;
  out.alpha.assign(Umax + 1, grs_zero(gr, NT));
  for (auto& [deg, coef] : ef) out.alpha[deg] = std::move(coef);

  // Lemma 2 in T-form: ord_T(alpha_u) >= ceil(u/D)
  const long D = spec.consts.D;
  for (long u = 0; u <= Umax; ++u) {
    unsigned need = static_cast<unsigned>((u + D - 1) / D);
    unsigned ord = grs_order(out.alpha[u]);
    ASWT_REQUIRE(ord >= std::min(need, NT), "build_Ef: alpha decay bound violated (Lemma falsified)");
  }
  return out;
}

DworkMatrix dwork_matrix(const TowerSpec& spec, unsigned NT, unsigned Np, unsigned B) {
  const long Umax = spec.p * static_cast<long>(B);
  EfCoefficients ef = build_Ef(spec, NT, Np, Umax);
  DworkMatrix M;
  M.spec = &spec;
  M.gr = ef.gr;
  M.B = B;
  M.NT = NT;
  M.Np = Np;
  M.entry.assign(B, std::vector<GRSeries>(B, grs_zero(*ef.gr, NT)));
  for (unsigned u = 0; u < B; ++u) {
    for (unsigned v = 0; v < B; ++v) {
      long idx = spec.p * static_cast<long>(u) - static_cast<long>(v);
      if (idx < 0 || idx > Umax) continue;  // alpha_u = 0 for u < 0
      if (ef.alpha[idx].is_zero()) continue;
      M.entry[u][v] = grs_frobenius_inv(ef.alpha[idx]);
    }
  }
  return M;
}

namespace {

using Mat = std::vector<std::vector<GRSeries>>;

Mat mat_mul(const Mat& X, const Mat& Y, const GRContext& gr, unsigned NT) {
  const std::size_t B = X.size();
  // zero-entry masks make the band structure pay off
  std::vector<std::vector<bool>> xz(B, std::vector<bool>(B)), yz(B, std::vector<bool>(B));
  for (std::size_t i = 0; i < B; ++i)
    for (std::size_t j = 0; j < B; ++j) {
      xz[i][j] = X[i][j].is_zero();
      yz[i][j] = Y[i][j].is_zero();
    }
  Mat out(B, std::vector<GRSeries>(B, grs_zero(gr, NT)));
  for (std::size_t i = 0; i < B; ++i) {
    for (std::size_t k = 0; k < B; ++k) {
      if (xz[i][k]) continue;
      for (std::size_t j = 0; j < B; ++j) {
        if (yz[k][j]) continue;
        out[i][j] = grs_add(out[i][j], grs_mul(X[i][k], Y[k][j]));
      }
    }
  }
  return out;
}

void certify_truncation(const DworkMatrix& M) {
  const TowerSpec& spec = *M.spec;
  // any trace path through an index >= B has ord_T >= (p-1)B/D
  ASWT_REQUIRE(Int(spec.p - 1) * M.B >= Int(spec.consts.D) * M.NT,
               "trace truncation not certified: enlarge B");
}

}  // namespace

std::vector<TSeries> operator_traces(const DworkMatrix& M, unsigned kmax) {
  certify_truncation(M);
  const TowerSpec& spec = *M.spec;
  const GRContext& gr = *M.gr;

  // matrix of phi^a: M sigma^{-1}(M) ... sigma^{-(a-1)}(M)
  Mat A = M.entry;
  if (spec.a > 1) {
    Mat twisted = M.entry;
    for (unsigned j = 1; j < spec.a; ++j) {
      for (auto& rowv : twisted)
        for (GRSeries& e : rowv)
          if (!e.is_zero()) e = grs_frobenius_inv(e);
      A = mat_mul(A, twisted, gr, M.NT);
    }
  }

  std::vector<TSeries> traces;
  Mat P = A;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) P = mat_mul(P, A, gr, M.NT);
    GRSeries diag = grs_zero(gr, M.NT);
    for (unsigned u = 0; u < M.B; ++u) diag = grs_add(diag, P[u][u]);
    traces.push_back(grs_to_prime(diag));  // asserts the trace is rational
  }
  return traces;
}

FredholmResult fredholm(const DworkMatrix& M, unsigned Ns, unsigned Np_report) {
  ASWT_REQUIRE(2 * Ns <= M.B, "fredholm: Ns <= B/2 required");
  FredholmResult out;
  out.Ns = Ns;
  out.NT = M.NT;
  out.Np = Np_report;
  out.Np_internal = M.Np;
  out.traces = operator_traces(M, Ns);

  const long p = M.spec->p;
  std::vector<TSeries> b(Ns + 1);
  b[0] = ts_const(p, M.Np, M.NT, 1);
  for (unsigned n = 1; n <= Ns; ++n) {
    TSeries acc = ts_zero(p, M.Np, M.NT);
    for (unsigned k = 1; k <= n; ++k)
      acc = ts_add(acc, ts_mul(out.traces[k - 1], b[n - k]));
    b[n] = ts_exact_div_int(ts_neg(acc), Int(n));
  }
  for (unsigned n = 0; n <= Ns; ++n) {
    ASWT_REQUIRE(b[n].Np >= Np_report,
                 "fredholm: internal precision exhausted (enlarge Np padding)");
    out.b.push_back(ts_reduce(b[n], Np_report, M.NT));
  }
  return out;
}

OrdR ord_R(const TSeries& b, unsigned m_tilde) {
  OrdR r;
  if (m_tilde == 1) {
    unsigned j = ts_order(b);
    if (j < b.NT) {
      r.has_value = true;
      r.value = Rat(static_cast<unsigned long>(j));
    } else {
      r.floor = Rat(static_cast<unsigned long>(b.NT));
    }
    return r;
  }
  const Int theta = pow_int(b.p, m_tilde - 2) * (b.p - 1);
  std::optional<Int> vis;
  std::optional<Int> inv_floor;
  for (unsigned j = 0; j < b.NT; ++j) {
    if (b.c[j] == 0) {
      if (!inv_floor) inv_floor = theta * b.Np + j;
    } else {
      Int cand = theta * padic_val(b.c[j], Int(b.p)) + j;
      if (!vis || cand < *vis) vis = cand;
    }
  }
  if (vis && (!inv_floor || *vis <= *inv_floor)) {
    r.has_value = true;
    r.value = Rat(*vis);
  } else if (inv_floor) {
    r.floor = Rat(vis ? std::min(*vis, *inv_floor) : *inv_floor);
  }
  return r;
}

OrdR ord_R_grs(const GRSeries& a, unsigned m_tilde) {
  const long p = a.gr->p;
  const unsigned Np = a.gr->m;
  OrdR r;
  if (m_tilde == 1) {
    unsigned j = grs_order(a);
    if (j < a.NT) {
      r.has_value = true;
      r.value = Rat(static_cast<unsigned long>(j));
    } else {
      r.floor = Rat(static_cast<unsigned long>(a.NT));
    }
    return r;
  }
  const Int theta = pow_int(p, m_tilde - 2) * (p - 1);
  std::optional<Int> vis;
  std::optional<Int> inv_floor;
  for (unsigned j = 0; j < a.NT; ++j) {
    if (a.c[j].is_zero()) {
      if (!inv_floor) inv_floor = theta * Np + j;
    } else {
      Int vmin(-1);
      for (const Int& coord : a.c[j].c) {
        if (coord == 0) continue;
        Int v = padic_val(coord, Int(p));
        if (vmin < 0 || v < vmin) vmin = v;
      }
      Int cand = theta * vmin + j;
      if (!vis || cand < *vis) vis = cand;
    }
  }
  if (vis && (!inv_floor || *vis <= *inv_floor)) {
    r.has_value = true;
    r.value = Rat(*vis);
  } else if (inv_floor) {
    r.floor = Rat(vis ? std::min(*vis, *inv_floor) : *inv_floor);
  }
  return r;
}

OrderReport order_report(const FredholmResult& fr, const TowerSpec& spec) {
  const long p = spec.p;
  const TowerConstants& K = spec.consts;
  OrderReport rep;
  for (unsigned n = 1; n <= fr.Ns; ++n) {
    const TSeries& b = fr.b[n];
    OrderRecord rec;
    rec.n = n;
    unsigned lam = ts_order(b);
    rec.lambda = lam < b.NT ? static_cast<long>(lam) : -1;
    rec.lambda_prime = -1;
    for (unsigned j = 0; j < b.NT; ++j) {
      if (b.c[j] % p != 0) {
        rec.lambda_prime = j;
        break;
      }
    }
    ASWT_REQUIRE(rec.lambda == -1 || rec.lambda_prime == -1 ||
                     rec.lambda <= rec.lambda_prime,
                 "order_report: lambda > lambda' (internal bug)");
    rec.ord = ord_R(b, K.m_tilde);
    rec.hodge_bound =
        Rat(Int(spec.a) * (p - 1) * n * (n - 1)) / (Rat(2) * K.delta);
    if (rec.ord.has_value) {
      rec.hodge_pass = rec.ord.value >= rec.hodge_bound;
    } else if (rec.ord.floor >= rec.hodge_bound) {
      rec.hodge_pass = true;
    } else {
      rec.hodge_shortfall = true;
    }
    long res = n % K.delta1;
    rec.t6_applies = (res == 0 || res == 1);
    if (rec.t6_applies) {
      rec.Lambda = rec.hodge_bound;
      rec.t6_integral = rec.Lambda.get_den() == 1;
      bool unit_at_Lambda = false;
      if (rec.t6_integral && rec.Lambda.get_num() < b.NT) {
        unsigned j = static_cast<unsigned>(rec.Lambda.get_num().get_ui());
        unit_at_Lambda = (b.c[j] % p != 0);
      }
      rec.t6_pass = rec.t6_integral && rec.ord.has_value &&
                    rec.ord.value == rec.Lambda && unit_at_Lambda;
      if (!rec.t6_pass) rep.t6_all_pass = false;
    }
    if (!rec.hodge_pass) rep.hodge_all_pass = false;
    if (rec.hodge_shortfall) rep.hodge_any_shortfall = true;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

CycInt specialize_T(const TSeries& b, unsigned m) {
  const long p = b.p;
  CycInt zeta1 = cyc_sub(psi_char(p, m, 1), cyc_one(p, m));
  CycInt acc = cyc_zero(p, m);
  for (unsigned j = b.NT; j-- > 0;) {
    acc = cyc_mul(acc, zeta1);
    acc.c[0] += b.c[j];
    acc = cyc_reduce_coeffs(acc, b.pNp);
  }
  return acc;
}

Int specialize_cap(long p, unsigned m, unsigned NT, unsigned Np) {
  Int e = (Int(p) - 1) * pow_int(p, m - 1);
  return std::min(Int(NT), Int(Int(Np) * e));
}

bool congruent_to_cap(const CycInt& x, const CycInt& y, unsigned NT, unsigned Np) {
  ASWT_REQUIRE(x.p == y.p && x.m == y.m, "congruent_to_cap: ring mismatch");
  const Int pNp = pow_int(x.p, Np);
  CycInt diff = cyc_reduce_coeffs(cyc_sub(x, y), pNp);
  if (diff.is_zero()) return true;
  Valuation v = pi_valuation(diff);
  return v.value >= Rat(specialize_cap(x.p, x.m, NT, Np));
}

bool lf_quotient_identity(const FredholmResult& fr, long p, unsigned a) {
  const Int q = pow_int(p, a);
  const unsigned Ns = fr.Ns;
  // route 1: L_f = exp(sum S_f(T,k) s^k / k) with S_f(T,k) = (q^k - 1) Tr
  std::vector<TSeries> l1(Ns + 1);
  l1[0] = ts_const(p, fr.Np_internal, fr.NT, 1);
  for (unsigned n = 1; n <= Ns; ++n) {
    TSeries acc = ts_zero(p, fr.Np_internal, fr.NT);
    for (unsigned k = 1; k <= n; ++k) {
      TSeries sk = ts_scale(fr.traces[k - 1], pow_int(q, k) - 1);
      acc = ts_add(acc, ts_mul(sk, l1[n - k]));
    }
    l1[n] = ts_exact_div_int(acc, Int(n));
  }
  // route 2: division-free from L_f(T,s) C_f(T,qs) = C_f(T,s)
  std::vector<TSeries> l2(Ns + 1);
  l2[0] = ts_const(p, fr.Np, fr.NT, 1);
  for (unsigned n = 1; n <= Ns; ++n) {
    TSeries acc = fr.b[n];
    for (unsigned k = 1; k <= n; ++k) {
      TSeries term = ts_mul(ts_scale(fr.b[k], pow_int(q, k)), l2[n - k]);
      acc = ts_sub(acc, term);
    }
    l2[n] = acc;
  }
  for (unsigned n = 0; n <= Ns; ++n) {
    unsigned Np_common = std::min(l1[n].Np, l2[n].Np);
    if (!ts_equal(ts_reduce(l1[n], Np_common, fr.NT), ts_reduce(l2[n], Np_common, fr.NT)))
      return false;
  }
  return true;
}

DworkRun run_dwork(const TowerSpec& spec, const DworkParams& params) {
  DworkRun run;
  run.params = params;
  DworkMatrix M = dwork_matrix(spec, params.NT, params.Np_internal, params.B);
  run.fred = fredholm(M, params.Ns, params.Np);
  run.report = order_report(run.fred, spec);
  return run;
}

}  // namespace aswt
