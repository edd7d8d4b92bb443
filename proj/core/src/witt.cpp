#include "aswt/witt.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "aswt/tower.hpp"

namespace aswt {

// --- MPoly ---

MPoly mp_zero(unsigned nvars) { return MPoly{nvars, {}}; }

MPoly mp_const(unsigned nvars, const Int& c) {
  MPoly f{nvars, {}};
  if (c != 0) f.terms[std::vector<unsigned>(nvars, 0)] = c;
  return f;
}

MPoly mp_var(unsigned nvars, unsigned i) {
  MPoly f{nvars, {}};
  std::vector<unsigned> e(nvars, 0);
  e[i] = 1;
  f.terms[e] = 1;
  return f;
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b.terms) {
    Int& slot = out.terms[e];
    slot += c;
    if (slot == 0) out.terms.erase(e);
  }
  return out;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b.terms) {
    Int& slot = out.terms[e];
    slot -= c;
    if (slot == 0) out.terms.erase(e);
  }
  return out;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly out{a.nvars, {}};
  std::vector<unsigned> e(a.nvars);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (unsigned i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      Int& slot = out.terms[e];
      slot += ca * cb;
      if (slot == 0) out.terms.erase(e);
    }
  }
  return out;
}

MPoly mp_pow(const MPoly& a, unsigned long n) {
  MPoly result = mp_const(a.nvars, 1);
  MPoly base = a;
  while (n > 0) {
    if (n & 1) result = mp_mul(result, base);
    n >>= 1;
    if (n > 0) base = mp_mul(base, base);
  }
  return result;
}

MPoly mp_scale(const MPoly& a, const Int& c) {
  if (c == 0) return mp_zero(a.nvars);
  MPoly out = a;
  for (auto& [e, coef] : out.terms) coef *= c;
  return out;
}

MPoly mp_exact_div(const MPoly& a, const Int& c) {
  ASWT_REQUIRE(c != 0, "mp_exact_div by zero");
  MPoly out = a;
  for (auto& [e, coef] : out.terms) {
    ASWT_REQUIRE(coef % c == 0, "ghost recursion: non-exact division (internal bug)");
    coef /= c;
  }
  return out;
}

bool mp_equal(const MPoly& a, const MPoly& b) {
  return a.nvars == b.nvars && a.terms == b.terms;
}

std::string mp_to_string(const MPoly& f, unsigned m) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = abs(c);
    bool printed = false;
    if (ac != 1) {
      os << ac.get_str();
      printed = true;
    }
    for (unsigned i = 0; i < f.nvars; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << (i < m ? "X" : "Y") << (i < m ? i : i - m);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

// --- structure polynomials ---

MPoly ghost_component(long p, unsigned nvars, unsigned offset, unsigned n) {
  MPoly w = mp_zero(nvars);
  for (unsigned i = 0; i <= n; ++i) {
    MPoly zi = mp_var(nvars, offset + i);
    MPoly t = mp_pow(zi, pow_int(p, n - i).get_ui());
    w = mp_add(w, mp_scale(t, pow_int(p, i)));
  }
  return w;
}

WittStructurePolys build_structure_polys(long p, unsigned m) {
  ASWT_REQUIRE(m >= 1 && m <= 4, "build_structure_polys: 1 <= m <= 4 required");
  ASWT_REQUIRE(p >= 2, "build_structure_polys: bad prime");
  for (long d = 2; d * d <= p; ++d)
    ASWT_REQUIRE(p % d != 0, "build_structure_polys: p not prime");

  const unsigned nv = 2 * m;
  WittStructurePolys polys;
  polys.p = p;
  polys.m = m;

  for (unsigned n = 0; n < m; ++n) {
    MPoly wx = ghost_component(p, nv, 0, n);
    MPoly wy = ghost_component(p, nv, m, n);
    // sum polynomials
    {
      MPoly rhs = mp_add(wx, wy);
      for (unsigned i = 0; i < n; ++i) {
        MPoly t = mp_pow(polys.sum_polys[i], pow_int(p, n - i).get_ui());
        rhs = mp_sub(rhs, mp_scale(t, pow_int(p, i)));
      }
      polys.sum_polys.push_back(mp_exact_div(rhs, pow_int(p, n)));
    }
    // product polynomials
    {
      MPoly rhs = mp_mul(wx, wy);
      for (unsigned i = 0; i < n; ++i) {
        MPoly t = mp_pow(polys.prod_polys[i], pow_int(p, n - i).get_ui());
        rhs = mp_sub(rhs, mp_scale(t, pow_int(p, i)));
      }
      polys.prod_polys.push_back(mp_exact_div(rhs, pow_int(p, n)));
    }
  }
  return polys;
}

const WittStructurePolys& witt_structure(long p, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<long, unsigned>, std::unique_ptr<WittStructurePolys>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<WittStructurePolys>(build_structure_polys(p, m))).first;
  return *it->second;
}

// --- FqPoly ---

namespace {
void fqp_trim(FqPoly& f) {
  while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
}
}  // namespace

FqPoly fqp_zero(const GRContext& field) { return FqPoly{&field, {}}; }

FqPoly fqp_monomial(const GRContext& field, const GRElem& a, unsigned u) {
  if (a.is_zero()) return fqp_zero(field);
  FqPoly f{&field, std::vector<GRElem>(u + 1, gr_zero(field))};
  f.c[u] = a;
  return f;
}

FqPoly fqp_add(const FqPoly& a, const FqPoly& b) {
  ASWT_REQUIRE(a.field == b.field, "fqp_add: field mismatch");
  FqPoly out = a;
  if (b.c.size() > out.c.size()) out.c.resize(b.c.size(), gr_zero(*a.field));
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = gr_add(out.c[i], b.c[i]);
  fqp_trim(out);
  return out;
}

FqPoly fqp_mul(const FqPoly& a, const FqPoly& b) {
  ASWT_REQUIRE(a.field == b.field, "fqp_mul: field mismatch");
  if (a.c.empty() || b.c.empty()) return fqp_zero(*a.field);
  FqPoly out{a.field, std::vector<GRElem>(a.c.size() + b.c.size() - 1, gr_zero(*a.field))};
  GRElem t;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      gr_mul_into(t, a.c[i], b.c[j]);
      out.c[i + j] = gr_add(out.c[i + j], t);
    }
  }
  fqp_trim(out);
  return out;
}

FqPoly fqp_pow_p(const FqPoly& a) {
  const long p = a.field->p;
  if (a.c.empty()) return a;
  FqPoly out{a.field, std::vector<GRElem>((a.c.size() - 1) * p + 1, gr_zero(*a.field))};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    out.c[i * p] = gr_pow(a.c[i], Int(p));
  fqp_trim(out);
  return out;
}

bool fqp_equal(const FqPoly& a, const FqPoly& b) {
  if (a.field != b.field || a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!gr_equal(a.c[i], b.c[i])) return false;
  return true;
}

GRElem fqp_eval(const FqPoly& f, const EmbedMap& emb, const GRElem& x) {
  GRElem acc = gr_zero(*emb.sup);
  for (std::size_t j = f.c.size(); j-- > 0;) {
    acc = gr_mul(acc, x);
    if (!f.c[j].is_zero()) acc = gr_add(acc, emb.apply(f.c[j]));
  }
  return acc;
}

// --- Witt vector operations ---

WittVecGR witt_frobenius(const WittVecGR& u) {
  WittVecGR out;
  out.reserve(u.size());
  for (const GRElem& x : u) out.push_back(gr_pow(x, Int(x.ctx->p)));
  return out;
}

WittVecPoly witt_frobenius(const WittVecPoly& u) {
  WittVecPoly out;
  out.reserve(u.size());
  for (const FqPoly& f : u) out.push_back(fqp_pow_p(f));
  return out;
}

WittVecPoly build_fm(const TowerSpec& spec, unsigned m) {
  ASWT_REQUIRE(m >= 1, "build_fm: m >= 1");
  const GRContext& fq = *spec.fq;
  const WittStructurePolys& polys = witt_structure(spec.p, m);
  FqPolyOps ops{&fq};

  WittVecPoly acc(m, fqp_zero(fq));
  for (const TowerRow& row : spec.rows) {
    if (row.index >= m) continue;  // truncated away by tau_m
    for (std::size_t u = 0; u < row.coeffs.size(); ++u) {
      if (row.coeffs[u].is_zero()) continue;
      WittVecPoly summand(m, fqp_zero(fq));
      summand[row.index] = fqp_monomial(fq, row.coeffs[u], static_cast<unsigned>(u));
      acc = witt_add(acc, summand, polys, ops);
    }
  }
  return acc;
}

WittVecGR witt_trace(const WittVecGR& w, unsigned ext_degree) {
  ASWT_REQUIRE(!w.empty(), "witt_trace: empty vector");
  const GRContext& field = *w[0].ctx;
  ASWT_REQUIRE(field.m == 1, "witt_trace: coefficients must be field elements");
  ASWT_REQUIRE(ext_degree == field.n, "witt_trace: extension degree mismatch");
  const WittStructurePolys& polys = witt_structure(field.p, static_cast<unsigned>(w.size()));
  GRRingOps ops{&field};

  WittVecGR acc = w;
  WittVecGR fr = w;
  for (unsigned j = 1; j < ext_degree; ++j) {
    fr = witt_frobenius(fr);
    acc = witt_add(acc, fr, polys, ops);
  }
  // trace result must be Frobenius-fixed, i.e. have F_p coordinates
  for (const GRElem& x : acc)
    ASWT_REQUIRE(gr_equal(gr_pow(x, Int(field.p)), x), "witt_trace: result not fixed by Frobenius");
  return acc;
}

std::vector<long> witt_fp_coords(const WittVecGR& w) {
  std::vector<long> out;
  out.reserve(w.size());
  for (const GRElem& x : w) {
    for (std::size_t i = 1; i < x.c.size(); ++i)
      ASWT_REQUIRE(x.c[i] == 0, "witt_fp_coords: coordinate not in F_p");
    out.push_back(to_long(x.c[0]));
  }
  return out;
}

Int nu_to_zmod(const std::vector<long>& coords, long p, unsigned m) {
  ASWT_REQUIRE(coords.size() == m, "nu_to_zmod: wrong length");
  const Int pm = pow_int(p, m);
  Int acc = 0;
  Int pi = 1;
  for (unsigned i = 0; i < m; ++i) {
    // omega: Teichmuller lift of F_p into Z/p^m by repeated p-th powering
    Int w = mod_positive(Int(coords[i]), pm);
    for (unsigned it = 1; it < m; ++it) {
      Int next;
      mpz_powm(next.get_mpz_t(), w.get_mpz_t(), Int(p).get_mpz_t(), pm.get_mpz_t());
      if (next == w) break;
      w = next;
    }
    acc = mod_positive(acc + pi * w, pm);
    pi *= p;
  }
  return acc;
}

}  // namespace aswt
