#pragma once

// L*(psi,s) assembled exactly from exponential sums through the Newton
// identity n c_n = sum_k S*(psi,k) c_{n-k}, the quotient L = L*/(1 - psi(Frob_0)s),
// and the truncated C*(psi,s) = prod_j L*(psi, q^j s) with per-coefficient
// valuation-trust certificates.

#include <optional>
#include <vector>

#include "aswt/cyclotomic.hpp"
#include "aswt/expsums.hpp"
#include "aswt/tower.hpp"

namespace aswt {

struct LPolynomial {
  long p = 0;
  unsigned m = 1;                // character level
  std::vector<CycInt> coeffs;    // c_0 = 1, ...
  long expected_degree = -1;     // Liu-Wei degree d (or d-1 for L itself)
  bool nondegen = false;
  bool degree_confirmed = false; // c_{d+1} = c_{d+2} = 0 verified

  long actual_degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
      if (!coeffs[i].is_zero()) return static_cast<long>(i);
    return 0;
  }
};

// Newton-identity recurrence with the exact-division integrality guard.
// sums must reach k = d + 2 when nondegen (the degree oracle needs them);
// with nondegen set, c_{d+1} = c_{d+2} = 0 is computed and enforced.
LPolynomial lstar_from_sums(const ExpSumTable& sums, long p, long d, bool nondegen);

// psi(Frob_0) = psi(Tr(sum_i p^i teich(a_{i0}))) in GR(p^m, a).
CycInt psi_frob0(const TowerSpec& spec, unsigned m);

// exact quotient by (1 - psi(Frob_0) s); nonzero remainder is a hard error.
LPolynomial l_from_lstar(const LPolynomial& lstar, const CycInt& frob0);

struct CStarTruncation {
  long p = 0;
  unsigned a = 1;
  unsigned m = 1;
  unsigned Ns = 0;   // coefficients for s^0..s^Ns
  unsigned Np = 0;   // coefficients live mod p^Np
  Int pNp;
  std::vector<CycInt> coeffs;          // reduced into [0, p^Np)
  std::vector<bool> trusted;           // valuation certificate per coefficient
  std::vector<std::optional<Int>> ord_pi;  // measured ord_pi (meaningful when trusted)
};

// Product over j = 0..J with J the least integer satisfying a*J >= Np; beyond
// that q^j kills every non-constant contribution mod p^Np.  A measured
// valuation is trusted only while it sits strictly below (Np-1)(p-1)p^{m-1}
// in ord_pi units, so a mod-p^Np representative cannot lie about it.
CStarTruncation cstar_truncated(const LPolynomial& lstar, unsigned a_ext,
                                unsigned Ns, unsigned Np);

// default p-precision for C* at Liu-Wei degree d (generous at desk scale)
unsigned default_cstar_Np(long d);

}  // namespace aswt
