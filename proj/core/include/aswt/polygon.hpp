#pragma once

// Newton polygons over exact rationals: lower convex hulls of valuation data,
// the two broken bound lines for C*(psi,s), and the slope-stability verifier
// (direct slope multisets against the union-of-progressions prediction).

#include <optional>
#include <vector>

#include "aswt/lseries.hpp"
#include "aswt/tower.hpp"

namespace aswt {

struct PolygonPoint {
  long n = 0;
  std::optional<Rat> v;  // nullopt = +infinity (zero coefficient), skipped
};

struct NewtonPolygon {
  std::vector<std::pair<long, Rat>> points;  // finite points, sorted by n
  std::vector<std::pair<long, Rat>> hull;    // lower-hull vertices
  std::vector<Rat> slopes;                   // multiset, ascending
};

// Monotone-chain lower hull; requires the (0, 0) anchor point.
NewtonPolygon newton_polygon(const std::vector<PolygonPoint>& pts);

// q-adic polygon of an exact L-polynomial: points (n, ord_q(c_n)).
NewtonPolygon polygon_of(const LPolynomial& L, unsigned a_ext);

// polygon value at an abscissa inside the hull range
Rat hull_value(const NewtonPolygon& np, const Rat& x);

// The section-6 broken lines for the C* polygon, in slope units where the
// level-m~ polygon is q-adic.
struct BoundLines {
  long delta1 = 1;
  Rat upper(long n) const;  // vertices (k d1, k(k d1 - 1)/2), (k d1 + 1, k(k d1 + 1)/2)
  Rat lower(long n) const;  // (n, n(n-1)/(2 d1))
};

struct BoundCheck {
  bool pass = true;
  long verified_window = 0;          // bound checks certified on [0, window]
  std::vector<long> vertex_hits;     // abscissas where Theorem-7 passage held
  std::vector<long> violations;      // witness abscissas
  std::vector<long> untrusted;       // abscissas excluded by the certificates
};

// Checks on the C* polygon measured in ord_pi / (a(p-1)p^{m~-1}) units:
// pointwise >= lower line, exact passage through the segment endpoints
// (n delta1, .), (n delta1 + 1, .), and hull containment between the lines
// on the consecutively verified window.
BoundCheck check_bounds(const CStarTruncation& cstar, const TowerSpec& spec);

// Full pipeline at level m: sums -> L* -> L -> q-adic slopes.
std::vector<Rat> l_slopes(const TowerSpec& spec, unsigned m, SumRoute route = SumRoute::galois);

// Slope multiset predicted at level m from the base slopes gamma at m0:
// union over i < p^{m-m0} of {i, gamma_1+i, ...}/p^{m-m0} minus one zero.
std::vector<Rat> progression_multiset(const std::vector<Rat>& gamma, long p,
                                      unsigned m0, unsigned m, unsigned* extra_zeros = nullptr);

struct StabilityLevel {
  unsigned m = 0;
  std::vector<Rat> expected;
  std::vector<Rat> actual;
  bool match = false;
  std::vector<Rat> missing;  // expected \ actual
  std::vector<Rat> extra;    // actual \ expected
  unsigned extra_zero_flags = 0;
};

struct StabilityReport {
  bool pass = true;
  unsigned m0 = 1;
  bool m0_clamped = false;
  std::vector<Rat> gamma;
  std::vector<StabilityLevel> levels;
};

// Theorem-1 verdict: base slopes at m0, then exact multiset comparison of
// direct slopes against the progression prediction for each m in (m0, m_max].
StabilityReport verify_stability(const TowerSpec& spec, unsigned m_max,
                                 SumRoute route = SumRoute::galois);

}  // namespace aswt
