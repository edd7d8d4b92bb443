#include "aswt/polygon.hpp"

#include <algorithm>

namespace aswt {

namespace {
Rat cross(const std::pair<long, Rat>& A, const std::pair<long, Rat>& B,
          const std::pair<long, Rat>& C) {
  return Rat(B.first - A.first) * (C.second - A.second) -
         (B.second - A.second) * Rat(C.first - A.first);
}
}  // namespace

NewtonPolygon newton_polygon(const std::vector<PolygonPoint>& pts) {
  NewtonPolygon np;
  for (const PolygonPoint& p : pts)
    if (p.v) np.points.emplace_back(p.n, *p.v);
  std::sort(np.points.begin(), np.points.end());
  bool anchored = !np.points.empty() && np.points.front().first == 0 &&
                  np.points.front().second == 0;
  ASWT_REQUIRE(anchored, "newton_polygon: missing (0, 0) anchor point");

  for (const auto& pt : np.points) {
    while (np.hull.size() >= 2 &&
           cross(np.hull[np.hull.size() - 2], np.hull.back(), pt) <= 0)
      np.hull.pop_back();
    np.hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < np.hull.size(); ++i) {
    long run = np.hull[i + 1].first - np.hull[i].first;
    Rat slope = (np.hull[i + 1].second - np.hull[i].second) / Rat(run);
    for (long r = 0; r < run; ++r) np.slopes.push_back(slope);
  }
  return np;
}

NewtonPolygon polygon_of(const LPolynomial& L, unsigned a_ext) {
  std::vector<PolygonPoint> pts;
  for (std::size_t n = 0; n < L.coeffs.size(); ++n) {
    Valuation v = ord_q_valuation(L.coeffs[n], a_ext);
    PolygonPoint pt;
    pt.n = static_cast<long>(n);
    if (!v.is_infinite) pt.v = v.value;
    pts.push_back(pt);
  }
  return newton_polygon(pts);
}

Rat hull_value(const NewtonPolygon& np, const Rat& x) {
  ASWT_REQUIRE(!np.hull.empty(), "hull_value: empty polygon");
  ASWT_REQUIRE(x >= Rat(np.hull.front().first) && x <= Rat(np.hull.back().first),
               "hull_value: abscissa outside polygon");
  for (std::size_t i = 0; i + 1 < np.hull.size(); ++i) {
    Rat x0(np.hull[i].first), x1(np.hull[i + 1].first);
    if (x > x1) continue;
    Rat t = (x - x0) / (x1 - x0);
    return np.hull[i].second + t * (np.hull[i + 1].second - np.hull[i].second);
  }
  return np.hull.back().second;
}

Rat BoundLines::upper(long n) const {
  long k = n / delta1;
  long r = n % delta1;
  if (r == 0) return Rat(Int(k) * (Int(k) * delta1 - 1)) / Rat(2);
  Rat at1 = Rat(Int(k) * (Int(k) * delta1 + 1)) / Rat(2);
  if (r == 1) return at1;
  // slope k + 1/2 across the remaining delta1 - 1 steps
  return at1 + Rat(Int(r - 1) * (2 * k + 1)) / Rat(2);
}

Rat BoundLines::lower(long n) const {
  return Rat(Int(n) * (n - 1)) / Rat(Int(2) * delta1);
}

BoundCheck check_bounds(const CStarTruncation& cstar, const TowerSpec& spec) {
  const TowerConstants& K = spec.consts;
  BoundLines lines{K.delta1};
  // ord units: pi_psi^{a(p-1)p^{m~-1}}-adic, i.e. ord_pi / (a(p-1)p^{m~-1})
  const Int unit = Int(spec.a) * (spec.p - 1) * pow_int(spec.p, K.m_tilde - 1);

  BoundCheck out;
  std::vector<PolygonPoint> pts;
  std::vector<std::optional<Rat>> val(cstar.Ns + 1);
  for (unsigned n = 0; n <= cstar.Ns; ++n) {
    if (!cstar.trusted[n]) {
      out.untrusted.push_back(n);
      continue;
    }
    Rat u = Rat(*cstar.ord_pi[n]) / Rat(unit);
    val[n] = u;
    pts.push_back(PolygonPoint{static_cast<long>(n), u});
    // pointwise lower bound at every certified abscissa
    if (u < lines.lower(n)) {
      out.violations.push_back(n);
      out.pass = false;
    }
  }

  // Theorem-7 endpoint passage, consecutively from n = 0
  long window = 0;
  for (long k = 0;; ++k) {
    bool stop = false;
    for (long v : {k * K.delta1, k * K.delta1 + 1}) {
      if (v > static_cast<long>(cstar.Ns)) {
        stop = true;
        break;
      }
      if (!val[v]) {
        stop = true;
        break;
      }
      if (*val[v] == lines.upper(v)) {
        out.vertex_hits.push_back(v);
        window = v;
      } else {
        out.violations.push_back(v);
        out.pass = false;
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  out.verified_window = window;

  // hull containment between the two lines on the verified window
  if (window >= 1) {
    std::vector<PolygonPoint> windowed;
    for (const PolygonPoint& pt : pts)
      if (pt.n <= window) windowed.push_back(pt);
    NewtonPolygon hull = newton_polygon(windowed);
    for (long n = 0; n <= window; ++n) {
      Rat h = hull_value(hull, Rat(n));
      if (h < lines.lower(n) || h > lines.upper(n)) {
        out.violations.push_back(n);
        out.pass = false;
      }
    }
  }
  return out;
}

std::vector<Rat> l_slopes(const TowerSpec& spec, unsigned m, SumRoute route) {
  const long d = degree_d(spec, m);
  ASWT_REQUIRE(nondegenerate(spec, m),
               "l_slopes: degenerate tower level (Liu-Wei degree unavailable)");
  ExpSumTable sums = exp_sum_table(spec, m, static_cast<unsigned>(d) + 2, route);
  LPolynomial lstar = lstar_from_sums(sums, spec.p, d, true);
  LPolynomial L = l_from_lstar(lstar, psi_frob0(spec, m));
  return polygon_of(L, spec.a).slopes;
}

std::vector<Rat> progression_multiset(const std::vector<Rat>& gamma, long p,
                                      unsigned m0, unsigned m, unsigned* extra_zeros) {
  ASWT_REQUIRE(m >= m0, "progression_multiset: m >= m0 required");
  const Int P = pow_int(p, m - m0);
  std::vector<Rat> out;
  for (Int i = 0; i < P; ++i) {
    out.push_back(Rat(i) / Rat(P));
    for (const Rat& g : gamma) out.push_back((g + Rat(i)) / Rat(P));
  }
  // remove exactly one zero (the i = 0 progression head)
  auto it = std::find(out.begin(), out.end(), Rat(0));
  ASWT_REQUIRE(it != out.end(), "progression_multiset: zero head missing");
  out.erase(it);
  unsigned zeros = 0;
  for (const Rat& s : out)
    if (s == 0) ++zeros;
  if (extra_zeros) *extra_zeros = zeros;  // flagged for inspection, not removed
  std::sort(out.begin(), out.end());
  return out;
}

StabilityReport verify_stability(const TowerSpec& spec, unsigned m_max, SumRoute route) {
  const TowerConstants& K = spec.consts;
  StabilityReport rep;
  rep.m0 = static_cast<unsigned>(K.m0);
  rep.m0_clamped = K.m0_clamped;
  ASWT_REQUIRE(m_max >= rep.m0, "verify_stability: m_max below m0");

  rep.gamma = l_slopes(spec, rep.m0, route);
  ASWT_REQUIRE(static_cast<long>(rep.gamma.size()) ==
                   K.delta1 * to_long(pow_int(spec.p, rep.m0 - K.m_tilde)) - 1,
               "verify_stability: unexpected base slope count");

  for (unsigned m = rep.m0; m <= m_max; ++m) {
    StabilityLevel lvl;
    lvl.m = m;
    lvl.actual = (m == rep.m0) ? rep.gamma : l_slopes(spec, m, route);
    std::sort(lvl.actual.begin(), lvl.actual.end());
    lvl.expected = progression_multiset(rep.gamma, spec.p, rep.m0, m, &lvl.extra_zero_flags);
    lvl.match = lvl.expected == lvl.actual;
    if (!lvl.match) {
      rep.pass = false;
      std::set_difference(lvl.expected.begin(), lvl.expected.end(),
                          lvl.actual.begin(), lvl.actual.end(),
                          std::back_inserter(lvl.missing));
      std::set_difference(lvl.actual.begin(), lvl.actual.end(),
                          lvl.expected.begin(), lvl.expected.end(),
                          std::back_inserter(lvl.extra));
    }
    rep.levels.push_back(std::move(lvl));
  }
  return rep;
}

}  // namespace aswt
