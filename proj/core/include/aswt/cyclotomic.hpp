#pragma once

// Exact arithmetic in Z[zeta_{p^m}], the coefficient domain of L-functions.
// Elements are integer vectors in the power basis 1, zeta, ..., zeta^{phi-1}
// modulo Phi_{p^m}(x) = sum_{j<p} x^{j p^{m-1}}, phi = (p-1)p^{m-1}.
//
// Valuations: the prime above p is unique and totally ramified with residue
// degree 1, so ord_pi(alpha) = v_p(Norm(alpha)) with Norm computed as the
// resultant Res(Phi_{p^m}, rep(alpha)) over exact integers.

#include <optional>
#include <vector>

#include "aswt/numeric.hpp"

namespace aswt {

struct CycInt {
  long p = 0;
  unsigned m = 1;
  std::vector<Int> c;  // length (p-1)p^{m-1}

  bool is_zero() const {
    for (const Int& x : c)
      if (x != 0) return false;
    return true;
  }
};

unsigned long cyc_phi(long p, unsigned m);

CycInt cyc_zero(long p, unsigned m);
CycInt cyc_one(long p, unsigned m);
CycInt cyc_from_int(long p, unsigned m, const Int& v);

// psi(c) = zeta^c for the fixed primitive character psi(1) = zeta.
CycInt psi_char(long p, unsigned m, const Int& c);

bool cyc_equal(const CycInt& a, const CycInt& b);
CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_scale(const CycInt& a, const Int& k);
// coefficientwise exact division; failure is the integrality guard of the
// Newton-identity recurrences and throws aswt::error
CycInt cyc_exact_div_int(const CycInt& a, const Int& n);
// Galois action zeta -> zeta^u, gcd(u, p) = 1
CycInt cyc_galois(const CycInt& a, const Int& u);
// coefficients reduced into [0, mod)
CycInt cyc_reduce_coeffs(const CycInt& a, const Int& mod);

// Norm via Sylvester resultant (exposed for the valuation tests).
Int cyc_norm(const CycInt& a);

struct Valuation {
  bool is_infinite = false;  // the zero element
  Rat value;                 // exact, in the requested normalization
};

// pi-adic integer order; ord_p = ord_pi / ((p-1)p^{m-1}); ord_q divides by a.
Valuation pi_valuation(const CycInt& a);
Valuation ord_p_valuation(const CycInt& a);
Valuation ord_q_valuation(const CycInt& a, unsigned a_ext);

}  // namespace aswt
