#include "aswt/galois_ring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace aswt {

namespace {

// --- dense F_p[x] helpers for the modulus scan (long coefficients) ---

using FpPoly = std::vector<long>;  // c[0] + c[1] x + ...

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, long p) {
  std::vector<long> t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t n = mod.size() - 1;
  for (std::size_t e = t.size(); e-- > n;) {
    long ce = t[e] % p;
    if (ce == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      t[e - n + j] = ((t[e - n + j] - ce * mod[j]) % p + p) % p;
    t[e] = 0;
  }
  t.resize(n);
  fp_trim(t);
  return t;
}

FpPoly fp_powmod_p(const FpPoly& a, long p, const FpPoly& mod) {
  // a^p mod `mod` by square-and-multiply on the exponent p
  FpPoly result{1};
  FpPoly base = a;
  long e = p;
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, mod, p);
    base = fp_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // a mod b
    long inv_lead = 1;
    {  // inverse of b's leading coefficient mod p (p prime, Fermat)
      long lb = b.back() % p;
      long acc = 1, base = lb, e = p - 2;
      while (e > 0) {
        if (e & 1) acc = (acc * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      inv_lead = acc;
    }
    while (a.size() >= b.size()) {
      long q = (a.back() * inv_lead) % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = ((a[shift + j] - q * b[j]) % p + p) % p;
      fp_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool fp_is_irreducible(const FpPoly& mod, long p) {
  const std::size_t n = mod.size() - 1;
  if (n == 1) return true;
  // gcd(x^{p^i} - x, f) = 1 for i < n, and x^{p^n} = x mod f
  FpPoly x{0, 1};
  FpPoly h = x;
  for (std::size_t i = 1; i <= n; ++i) {
    h = fp_powmod_p(h, p, mod);  // x^{p^i} mod f
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    if (i < n) {
      FpPoly g = fp_gcd(diff, mod, p);
      if (!(g.size() == 1)) return false;
    } else {
      if (!diff.empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree n over F_p.
std::vector<long> canonical_modulus(long p, unsigned n) {
  std::vector<long> coeffs(n, 0);  // c_0 .. c_{n-1}; leading 1 implicit
  if (n >= 2) coeffs[0] = 1;       // c_0 = 0 forces x | f, reducible for n >= 2
  while (true) {
    FpPoly mod = coeffs;
    mod.push_back(1);
    if (fp_is_irreducible(mod, p)) return mod;
    // next tuple in lexicographic order (last coordinate fastest)
    ASWT_REQUIRE(next_residue_tuple(coeffs, p), "no monic irreducible found");
  }
}

std::vector<Int> prime_factors(Int q) {
  std::vector<Int> out;
  for (Int d = 2; d * d <= q; d += (d == 2 ? 1 : 2)) {
    if (q % d == 0) {
      out.push_back(d);
      while (q % d == 0) q /= d;
    }
  }
  if (q > 1) out.push_back(q);
  return out;
}

std::vector<Int> apply_columns(const std::vector<std::vector<Int>>& cols,
                               const std::vector<Int>& v, const Int& pm) {
  const std::size_t n = v.size();
  std::vector<Int> out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += v[j] * cols[j][i];
  }
  for (Int& x : out) x = mod_positive(x, pm);
  return out;
}

}  // namespace

bool next_residue_tuple(std::vector<long>& coords, long p) {
  for (std::size_t k = coords.size(); k-- > 0;) {
    if (++coords[k] < p) return true;
    coords[k] = 0;
  }
  return false;
}

GRContext::GRContext(long p_, unsigned m_, unsigned n_) : p(p_), m(m_), n(n_) {
  ASWT_REQUIRE(p >= 2 && m >= 1 && n >= 1, "gr_context: bad parameters");
  pm = pow_int(p, m);
  modulus = canonical_modulus(p, n);

  // Frobenius columns via the Teichmuller digit construction on the basis.
  frob_columns.resize(n);
  GRElem xpow = gr_one(*this);
  GRElem xclass = n == 1 ? gr_zero(*this)
                         : gr_from_coords(*this, [&] {
                             std::vector<Int> c(n, 0);
                             c[1] = 1;
                             return c;
                           }());
  for (unsigned j = 0; j < n; ++j) {
    frob_columns[j] = gr_frobenius_digits(xpow).c;
    if (j + 1 < n) xpow = gr_mul(xpow, xclass);
  }
  // sigma is multiplicative on the basis: sigma(x^j) = sigma(x)^j.
  if (n >= 2) {
    GRElem sx = GRElem{this, frob_columns[1]};
    GRElem acc = gr_one(*this);
    for (unsigned j = 0; j < n; ++j) {
      ASWT_REQUIRE(acc.c == frob_columns[j], "frobenius digit map is not multiplicative");
      if (j + 1 < n) acc = gr_mul(acc, sx);
    }
  }

  // sigma^{-1} = sigma^{n-1} columnwise; sigma^n = id is checked on the way.
  frob_inv_columns.resize(n);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Int> v(n, 0);
    v[j] = 1;
    std::vector<Int> w = v;
    for (unsigned r = 0; r + 1 < n; ++r) w = apply_columns(frob_columns, w, pm);
    frob_inv_columns[j] = w;
    std::vector<Int> back = apply_columns(frob_columns, w, pm);
    ASWT_REQUIRE(back == v, "frobenius does not have order n");
  }

  // Trace form Tr(x^j); the trace of any basis monomial must be rational.
  trace_form.resize(n);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Int> v(n, 0);
    v[j] = 1;
    std::vector<Int> acc = v;
    std::vector<Int> w = v;
    for (unsigned r = 1; r < n; ++r) {
      w = apply_columns(frob_columns, w, pm);
      for (unsigned i = 0; i < n; ++i) acc[i] += w[i];
    }
    for (unsigned i = 0; i < n; ++i) acc[i] = mod_positive(acc[i], pm);
    for (unsigned i = 1; i < n; ++i)
      ASWT_REQUIRE(acc[i] == 0, "trace of basis element not in prime subring");
    trace_form[j] = acc[0];
  }

  // Canonical generator of the unit group (field contexts only).
  if (m == 1) {
    Int q1 = pow_int(p, n) - 1;
    std::vector<Int> factors = prime_factors(q1);
    std::vector<long> cand(n, 0);
    while (next_residue_tuple(cand, p)) {
      std::vector<Int> cc(cand.begin(), cand.end());
      GRElem g = gr_from_coords(*this, cc);
      bool ok = true;
      for (const Int& ell : factors) {
        if (gr_pow(g, q1 / ell).c == gr_one(*this).c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator = cand;
        break;
      }
    }
    ASWT_REQUIRE(!generator.empty(), "no generator found");
  }
}

const GRContext& gr_context(long p, unsigned m, unsigned n) {
  static std::mutex mu;
  static std::map<std::tuple<long, unsigned, unsigned>, std::unique_ptr<GRContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, m, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<GRContext>(p, m, n)).first;
  return *it->second;
}

GRElem gr_zero(const GRContext& ctx) { return GRElem{&ctx, std::vector<Int>(ctx.n, 0)}; }

GRElem gr_one(const GRContext& ctx) {
  GRElem e = gr_zero(ctx);
  e.c[0] = 1;
  return e;
}

GRElem gr_from_int(const GRContext& ctx, const Int& v) {
  GRElem e = gr_zero(ctx);
  e.c[0] = mod_positive(v, ctx.pm);
  return e;
}

GRElem gr_from_coords(const GRContext& ctx, std::vector<Int> coords) {
  ASWT_REQUIRE(coords.size() == ctx.n, "gr_from_coords: wrong coordinate count");
  for (Int& x : coords) x = mod_positive(x, ctx.pm);
  return GRElem{&ctx, std::move(coords)};
}

std::vector<long> gr_residue(const GRElem& a) {
  std::vector<long> r(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i)
    r[i] = to_long(mod_positive(a.c[i], Int(a.ctx->p)));
  return r;
}

bool gr_equal(const GRElem& a, const GRElem& b) {
  return a.ctx == b.ctx && a.c == b.c;
}

GRElem gr_add(const GRElem& a, const GRElem& b) {
  ASWT_REQUIRE(a.ctx == b.ctx, "gr_add: context mismatch");
  GRElem out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    out.c[i] += b.c[i];
    if (out.c[i] >= a.ctx->pm) out.c[i] -= a.ctx->pm;
  }
  return out;
}

GRElem gr_sub(const GRElem& a, const GRElem& b) {
  ASWT_REQUIRE(a.ctx == b.ctx, "gr_sub: context mismatch");
  GRElem out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    out.c[i] -= b.c[i];
    if (out.c[i] < 0) out.c[i] += a.ctx->pm;
  }
  return out;
}

GRElem gr_neg(const GRElem& a) {
  GRElem out = a;
  for (Int& x : out.c)
    if (x != 0) x = a.ctx->pm - x;
  return out;
}

void gr_mul_into(GRElem& out, const GRElem& a, const GRElem& b) {
  const GRContext& ctx = *a.ctx;
  const std::size_t n = ctx.n;
  static thread_local std::vector<Int> t;
  t.assign(2 * n - 1, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c[j] == 0) continue;
      t[i + j] += a.c[i] * b.c[j];
    }
  }
  for (std::size_t e = 2 * n - 1; e-- > n;) {
    Int ce = mod_positive(t[e], ctx.pm);
    if (ce == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (ctx.modulus[j] == 0) continue;
      t[e - n + j] -= ce * ctx.modulus[j];
    }
  }
  out.ctx = &ctx;
  out.c.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.c[i] = mod_positive(t[i], ctx.pm);
}

GRElem gr_mul(const GRElem& a, const GRElem& b) {
  ASWT_REQUIRE(a.ctx == b.ctx, "gr_mul: context mismatch");
  GRElem out;
  gr_mul_into(out, a, b);
  return out;
}

GRElem gr_scale(const GRElem& a, const Int& k) {
  GRElem out = a;
  Int kk = mod_positive(k, a.ctx->pm);
  for (Int& x : out.c) x = mod_positive(x * kk, a.ctx->pm);
  return out;
}

GRElem gr_pow(const GRElem& a, const Int& e) {
  ASWT_REQUIRE(e >= 0, "gr_pow: negative exponent");
  GRElem result = gr_one(*a.ctx);
  GRElem base = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = gr_mul(result, base);
    if (i + 1 < bits) base = gr_mul(base, base);
  }
  return result;
}

namespace {
GRElem pow_p_iterated(const GRElem& a, unsigned times) {
  GRElem r = a;
  for (unsigned i = 0; i < times; ++i) r = gr_pow(r, Int(a.ctx->p));
  return r;
}
}  // namespace

GRElem teichmuller(const GRContext& ctx, const std::vector<long>& residue) {
  ASWT_REQUIRE(residue.size() == ctx.n, "teichmuller: wrong residue length");
  std::vector<Int> lift(residue.begin(), residue.end());
  GRElem z = gr_from_coords(ctx, std::move(lift));
  for (unsigned it = 0; it < ctx.m; ++it) {
    GRElem z2 = pow_p_iterated(z, ctx.n);  // z^{p^n}
    if (gr_equal(z2, z)) return z;
    z = z2;
  }
  ASWT_REQUIRE(gr_equal(pow_p_iterated(z, ctx.n), z),
               "teichmuller: no fixpoint within m iterations");
  return z;
}

bool is_teichmuller(const GRElem& a) {
  return gr_equal(pow_p_iterated(a, a.ctx->n), a);
}

GRElem gr_frobenius_digits(const GRElem& a) {
  const GRContext& ctx = *a.ctx;
  std::vector<Int> work = a.c;
  GRElem result = gr_zero(ctx);
  GRElem recon = gr_zero(ctx);
  Int pi = 1;
  for (unsigned i = 0; i < ctx.m; ++i) {
    std::vector<long> r(ctx.n);
    for (unsigned j = 0; j < ctx.n; ++j)
      r[j] = to_long(mod_positive(work[j], Int(ctx.p)));
    GRElem t = teichmuller(ctx, r);
    for (unsigned j = 0; j < ctx.n; ++j) {
      Int d = mod_positive(work[j] - t.c[j], ctx.pm);
      ASWT_REQUIRE(d % ctx.p == 0, "frobenius digit extraction failed");
      work[j] = d / ctx.p;
    }
    GRElem tp = gr_pow(t, Int(ctx.p));
    result = gr_add(result, gr_scale(tp, pi));
    recon = gr_add(recon, gr_scale(t, pi));
    pi *= ctx.p;
  }
  ASWT_REQUIRE(gr_equal(recon, a), "teichmuller digits do not reconstruct input");
  return result;
}

GRElem gr_frobenius(const GRElem& a) {
  return GRElem{a.ctx, apply_columns(a.ctx->frob_columns, a.c, a.ctx->pm)};
}

GRElem gr_frobenius_inv(const GRElem& a) {
  return GRElem{a.ctx, apply_columns(a.ctx->frob_inv_columns, a.c, a.ctx->pm)};
}

Int gr_trace(const GRElem& a) {
  const GRContext& ctx = *a.ctx;
  GRElem acc = a;
  GRElem w = a;
  for (unsigned r = 1; r < ctx.n; ++r) {
    w = gr_frobenius(w);
    acc = gr_add(acc, w);
  }
  for (unsigned i = 1; i < ctx.n; ++i)
    ASWT_REQUIRE(acc.c[i] == 0, "gr_trace: result not in prime subring");
  return acc.c[0];
}

Int gr_trace_fast(const GRElem& a) {
  const GRContext& ctx = *a.ctx;
  Int acc = 0;
  for (unsigned j = 0; j < ctx.n; ++j) {
    if (a.c[j] == 0 || ctx.trace_form[j] == 0) continue;
    acc += a.c[j] * ctx.trace_form[j];
  }
  return mod_positive(acc, ctx.pm);
}

GRElem EmbedMap::apply(const GRElem& a) const {
  ASWT_REQUIRE(a.ctx == sub, "embed: element not from subfield");
  GRElem out = gr_zero(*sup);
  for (std::size_t j = 0; j < root_powers.size(); ++j) {
    if (a.c[j] == 0) continue;
    out = gr_add(out, gr_scale(root_powers[j], a.c[j]));
  }
  return out;
}

GRElem EmbedMap::apply_residue(const std::vector<long>& coords) const {
  std::vector<Int> c(coords.begin(), coords.end());
  return apply(gr_from_coords(*sub, std::move(c)));
}

namespace {
// roots of sub's modulus in sup, in canonical element order
std::vector<GRElem> modulus_roots(const GRContext& sub, const GRContext& sup) {
  ASWT_REQUIRE(sub.p == sup.p && sub.m == 1 && sup.m == 1, "embed: field contexts required");
  ASWT_REQUIRE(sup.n % sub.n == 0, "embed: subfield degree must divide");
  std::vector<GRElem> roots;
  std::vector<long> cand(sup.n, 0);
  do {
    std::vector<Int> cc(cand.begin(), cand.end());
    GRElem z = gr_from_coords(sup, std::move(cc));
    // Horner on the monic modulus of sub
    GRElem acc = gr_one(sup);
    for (std::size_t j = sub.n; j-- > 0;) {
      acc = gr_mul(acc, z);
      acc = gr_add(acc, gr_from_int(sup, Int(sub.modulus[j])));
    }
    if (acc.is_zero()) roots.push_back(z);
  } while (next_residue_tuple(cand, sub.p));
  ASWT_REQUIRE(roots.size() == sub.n, "embed: wrong number of modulus roots");
  return roots;
}
}  // namespace

std::size_t embed_root_count(const GRContext& sub, const GRContext& sup) {
  return modulus_roots(sub, sup).size();
}

EmbedMap embed(const GRContext& sub, const GRContext& sup, std::size_t root_rank) {
  std::vector<GRElem> roots = modulus_roots(sub, sup);
  ASWT_REQUIRE(root_rank < roots.size(), "embed: root_rank out of range");
  EmbedMap map;
  map.sub = &sub;
  map.sup = &sup;
  map.root_powers.resize(sub.n);
  GRElem acc = gr_one(sup);
  for (unsigned j = 0; j < sub.n; ++j) {
    map.root_powers[j] = acc;
    if (j + 1 < sub.n) acc = gr_mul(acc, roots[root_rank]);
  }
  // ring homomorphism spot check: powers of the subfield generator map to
  // powers of its image
  if (sub.n >= 2) {
    std::vector<Int> g(sub.generator.begin(), sub.generator.end());
    GRElem gs = gr_from_coords(sub, std::move(g));
    GRElem img = map.apply(gs);
    ASWT_REQUIRE(gr_equal(map.apply(gr_mul(gs, gs)), gr_mul(img, img)),
                 "embed: image fails multiplicativity");
  }
  return map;
}

}  // namespace aswt
