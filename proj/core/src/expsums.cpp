#include "aswt/expsums.hpp"

#include <cstdlib>
#include <thread>

#include "aswt/witt.hpp"

namespace aswt {

unsigned thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("ASWT_THREADS")) {
    long v = std::atol(env);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

namespace {

// fhat^{(m)} coefficient vector: chat_u = sum_{i<m} p^i teich(embed(a_iu))
std::vector<GRElem> fhat_coeffs(const TowerSpec& spec, unsigned m,
                                const GRContext& grk, const EmbedMap& emb) {
  long D = 0;
  for (const TowerRow& r : spec.rows)
    if (r.index < m) D = std::max(D, r.degree());
  std::vector<GRElem> chat(D + 1, gr_zero(grk));
  for (const TowerRow& r : spec.rows) {
    if (r.index >= m) continue;
    Int pi = pow_int(spec.p, r.index);
    for (std::size_t u = 0; u < r.coeffs.size(); ++u) {
      if (r.coeffs[u].is_zero()) continue;
      GRElem image = emb.apply(r.coeffs[u]);
      GRElem t = teichmuller(grk, gr_residue(image));
      chat[u] = gr_add(chat[u], gr_scale(t, pi));
    }
  }
  return chat;
}

std::vector<unsigned long> histogram_galois(const TowerSpec& spec, unsigned m,
                                            unsigned k, const ExpSumOptions& opt) {
  const unsigned n = spec.a * k;
  const GRContext& fqk = gr_context(spec.p, 1, n);
  const GRContext& grk = gr_context(spec.p, m, n);
  EmbedMap emb = embed(*spec.fq, fqk, opt.embed_rank);
  std::vector<GRElem> chat = fhat_coeffs(spec, m, grk, emb);

  GRElem ghat = teichmuller(grk, fqk.generator);
  const Int order = pow_int(spec.p, n) - 1;
  const unsigned long count = to_long(order);  // |mu_{q^k-1}|
  const unsigned long pm = to_long(grk.pm);

  unsigned nthreads = opt.threads ? opt.threads : thread_count();
  if (nthreads > count) nthreads = 1;

  // parallel reduction over disjoint generator-power ranges; integer
  // histograms merge associatively, so the result is schedule-independent
  std::vector<std::vector<unsigned long>> partial(nthreads,
                                                  std::vector<unsigned long>(pm, 0));
  auto work = [&](unsigned tid) {
    unsigned long lo = count * tid / nthreads;
    unsigned long hi = count * (tid + 1) / nthreads;
    if (lo >= hi) return;
    GRElem t = gr_pow(ghat, Int(static_cast<unsigned long>(lo)));
    GRElem val, tmp;
    std::vector<unsigned long>& hist = partial[tid];
    for (unsigned long j = lo; j < hi; ++j) {
      // Horner: val = chat(t)
      val = chat.back();
      for (std::size_t u = chat.size() - 1; u-- > 0;) {
        gr_mul_into(tmp, val, t);
        val = gr_add(tmp, chat[u]);
      }
      hist[to_long(gr_trace_fast(val))]++;
      if (j + 1 < hi) {
        gr_mul_into(tmp, t, ghat);
        t = tmp;
      }
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
    for (std::thread& th : pool) th.join();
  }
  std::vector<unsigned long> hist(pm, 0);
  for (const auto& part : partial)
    for (unsigned long c = 0; c < pm; ++c) hist[c] += part[c];
  return hist;
}

std::vector<unsigned long> histogram_witt(const TowerSpec& spec, unsigned m,
                                          unsigned k, const ExpSumOptions& opt) {
  ASWT_REQUIRE(m <= 4, "witt route: m <= 4 required");
  const unsigned n = spec.a * k;
  const GRContext& fqk = gr_context(spec.p, 1, n);
  EmbedMap emb = embed(*spec.fq, fqk, opt.embed_rank);
  WittVecPoly fm = build_fm(spec, m);

  const unsigned long pm = to_long(pow_int(spec.p, m));
  std::vector<unsigned long> hist(pm, 0);
  std::vector<long> coords(n, 0);
  while (next_residue_tuple(coords, spec.p)) {
    std::vector<Int> cc(coords.begin(), coords.end());
    GRElem x = gr_from_coords(fqk, std::move(cc));
    WittVecGR w;
    w.reserve(m);
    for (const FqPoly& coord : fm) w.push_back(fqp_eval(coord, emb, x));
    WittVecGR tr = witt_trace(w, n);
    Int c = nu_to_zmod(witt_fp_coords(tr), spec.p, m);
    hist[to_long(c)]++;
  }
  return hist;
}

CycInt sum_from_histogram(const std::vector<unsigned long>& hist, long p,
                          unsigned m, unsigned conductor) {
  // psi of conductor p^{m'} sees residues mod p^{m'} only
  const Int pc = pow_int(p, conductor);
  CycInt acc = cyc_zero(p, conductor);
  for (unsigned long c = 0; c < hist.size(); ++c) {
    if (hist[c] == 0) continue;
    CycInt term = psi_char(p, conductor, mod_positive(Int(c), pc));
    acc = cyc_add(acc, cyc_scale(term, Int(hist[c])));
  }
  return acc;
}

}  // namespace

std::vector<unsigned long> trace_histogram(const TowerSpec& spec, unsigned m,
                                           unsigned k, SumRoute route,
                                           const ExpSumOptions& opt) {
  ASWT_REQUIRE(k >= 1, "exp_sum: k >= 1 required");
  return route == SumRoute::galois ? histogram_galois(spec, m, k, opt)
                                   : histogram_witt(spec, m, k, opt);
}

CycInt exp_sum(const TowerSpec& spec, unsigned m, unsigned k, SumRoute route,
               const ExpSumOptions& opt) {
  unsigned conductor = opt.conductor ? opt.conductor : m;
  ASWT_REQUIRE(conductor <= m, "exp_sum: conductor above level");
  std::vector<unsigned long> hist = trace_histogram(spec, m, k, route, opt);
  return sum_from_histogram(hist, spec.p, m, conductor);
}

ExpSumTable exp_sum_table(const TowerSpec& spec, unsigned m, unsigned k_max,
                          SumRoute route, const ExpSumOptions& opt) {
  ExpSumTable table;
  table.m = opt.conductor ? opt.conductor : m;
  const Int q = pow_int(spec.p, spec.a);
  for (unsigned k = 1; k <= k_max; ++k) {
    CycInt s = exp_sum(spec, m, k, route, opt);
    // rationality bound: power-basis coefficients of a sum of q^k - 1 roots
    // of unity stay below q^k
    Int qk = pow_int(q, k);
    for (const Int& x : s.c)
      ASWT_REQUIRE(abs(x) < qk, "exp sum exceeds rationality bound (internal bug)");
    table.sums.push_back(std::move(s));
  }
  return table;
}

}  // namespace aswt
