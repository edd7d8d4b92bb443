#pragma once

// Truncated, precision-tracked series: elements of (Z/p^Np)[[T]] / T^NT and
// their GR(p^Np, a)-coefficient counterparts.  Arithmetic never silently
// extends precision; mixed-header operands reduce to the minimum header.

#include <vector>

#include "aswt/galois_ring.hpp"
#include "aswt/numeric.hpp"

namespace aswt {

struct TSeries {
  long p = 0;
  unsigned Np = 1;  // coefficients mod p^Np
  unsigned NT = 1;  // T-degree truncation
  Int pNp;
  std::vector<Int> c;  // size NT, entries in [0, p^Np)

  bool is_zero() const {
    for (const Int& x : c)
      if (x != 0) return false;
    return true;
  }
};

TSeries ts_zero(long p, unsigned Np, unsigned NT);
TSeries ts_const(long p, unsigned Np, unsigned NT, const Int& v);
TSeries ts_from_coeffs(long p, unsigned Np, unsigned NT, std::vector<Int> coeffs);
TSeries ts_reduce(const TSeries& a, unsigned Np, unsigned NT);  // shrink header
bool ts_equal(const TSeries& a, const TSeries& b);

TSeries ts_add(const TSeries& a, const TSeries& b);
TSeries ts_sub(const TSeries& a, const TSeries& b);
TSeries ts_neg(const TSeries& a);
TSeries ts_mul(const TSeries& a, const TSeries& b);
TSeries ts_scale(const TSeries& a, const Int& k);
TSeries ts_shift(const TSeries& a, unsigned j);  // multiply by T^j
TSeries ts_pow(const TSeries& a, unsigned long e);

// Exact division by an integer n = p^v n': every coefficient must be
// divisible by p^v (checked); the p-precision header drops by v.
TSeries ts_exact_div_int(const TSeries& a, const Int& n);

// first index with nonzero residue; NT when none visible
unsigned ts_order(const TSeries& a);

// --- series with GR(p^Np, n) coefficients (the Z_q[[T]] side) ---

struct GRSeries {
  const GRContext* gr = nullptr;
  unsigned NT = 1;
  std::vector<GRElem> c;

  bool is_zero() const {
    for (const GRElem& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
};

GRSeries grs_zero(const GRContext& gr, unsigned NT);
GRSeries grs_one(const GRContext& gr, unsigned NT);
// lift a prime-ring series into GR coefficients
GRSeries grs_from_ts(const GRContext& gr, const TSeries& a);
bool grs_equal(const GRSeries& a, const GRSeries& b);

GRSeries grs_add(const GRSeries& a, const GRSeries& b);
GRSeries grs_sub(const GRSeries& a, const GRSeries& b);
GRSeries grs_mul(const GRSeries& a, const GRSeries& b);
GRSeries grs_scale_elem(const GRSeries& a, const GRElem& k);
GRSeries grs_frobenius_inv(const GRSeries& a);  // sigma^{-1} coefficientwise
unsigned grs_order(const GRSeries& a);

// a GR series whose coefficients all lie in the prime subring collapses to a
// TSeries (checked)
TSeries grs_to_prime(const GRSeries& a);

}  // namespace aswt
