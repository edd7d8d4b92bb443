#pragma once

// The T-adic side of the theory: Artin-Hasse series, the pi_i(T) expansions,
// E_f coefficients, the nuclear matrix M = (sigma^{-1}(alpha_{pu-v})), the
// Fredholm determinant C_f(T,s) = det(I - s M^a), and the order bounds of
// Theorems 4-6 (Hodge bound, exact Lambda_k order with unit coefficient),
// all at certified (N_s, N_T, N_p) truncation.

#include <vector>

#include "aswt/cyclotomic.hpp"
#include "aswt/tower.hpp"
#include "aswt/tseries.hpp"

namespace aswt {

// E(X) = exp(sum_{i>=0} X^{p^i}/p^i) mod (p^Np, X^NX), computed over exact
// rationals via n e_n = sum_{p^i <= n} e_{n-p^i}; every coefficient must be
// p-integral (hard error otherwise).
TSeries artin_hasse(long p, unsigned NX, unsigned Np);

// pi_i defined by E(pi_i) = (1+T)^{p^i}; pi_0 = pi.  Asserts pi_0 in
// T + T^2 Z_p[[T]] and the binomial decay: the T^j coefficient of pi_i has
// p-order >= i - floor(log_p j).
TSeries pi_series(long p, unsigned i, unsigned NT, unsigned Np);

struct DworkParams {
  unsigned Ns = 0;          // fredholm coefficients b_1..b_Ns
  unsigned NT = 0;          // T-adic truncation
  unsigned Np = 0;          // reported p-adic precision
  unsigned Np_internal = 0; // padded by v_p(Ns!) for the exact divisions
  unsigned B = 0;           // matrix truncation
  long Umax = 0;            // E_f coefficients alpha_0..alpha_Umax
};

// Defaults: NT = ceil(Lambda_Ns) + delta1 + 2; Np = NT for m~ = 1 and
// ceil(NT / (p^{m~-2}(p-1))) + 2 otherwise; B = D NT + D; Umax = p B.
DworkParams default_dwork_params(const TowerSpec& spec, unsigned Ns);

struct EfCoefficients {
  const GRContext* gr = nullptr;  // GR(p^Np, a)
  unsigned NT = 0;
  long Umax = 0;
  std::vector<GRSeries> alpha;    // alpha_0..alpha_Umax
};

// E_f(x) = prod_rows E_{f_i}(x, pi_i) with
// E_{f_i}(x, eta) = prod_u E(eta ahat_{iu} x^u); asserts Lemma 2's decay in
// T-form, ord_T(alpha_u) >= ceil(u/D) (hard error on violation).
EfCoefficients build_Ef(const TowerSpec& spec, unsigned NT, unsigned Np, long Umax);

struct DworkMatrix {
  const TowerSpec* spec = nullptr;
  const GRContext* gr = nullptr;
  unsigned B = 0, NT = 0, Np = 0;
  std::vector<std::vector<GRSeries>> entry;  // entry[u][v] = sigma^{-1}(alpha_{pu-v})
};

DworkMatrix dwork_matrix(const TowerSpec& spec, unsigned NT, unsigned Np, unsigned B);

// Traces of the k-th powers of the a-th operator power, k = 1..kmax.  For
// a > 1 the matrix of phi^a is the Frobenius-twisted product
// M sigma^{-1}(M) ... sigma^{-(a-1)}(M); its traces land in Z_p[[T]]
// (asserted).  Truncation at B is certified by Lemma 2: any path through an
// index >= B carries ord_T >= (p-1)B/D >= NT.
std::vector<TSeries> operator_traces(const DworkMatrix& M, unsigned kmax);

struct FredholmResult {
  unsigned Ns = 0, NT = 0, Np = 0, Np_internal = 0;
  std::vector<TSeries> b;       // b[0] = 1, ..., b[Ns], reduced to Np
  std::vector<TSeries> traces;  // traces[k-1] = Tr((M^a)^k), internal precision
};

// det(I - s M^a) via the trace-power recurrence n b_n = -sum Tr b_{n-k};
// exact division by n is checked and paid for by the internal padding.
FredholmResult fredholm(const DworkMatrix& M, unsigned Ns, unsigned Np_report);

// ord_R with R = (pi) for m~ = 1 and (p^theta, pi) for m~ >= 2,
// theta = 1/(p^{m~-2}(p-1)); in T-form ord_R(b_j T^j) =
// p^{m~-2}(p-1) ord_p(b_j) + j.  A zero residue means ord_p >= Np and
// contributes an uncertainty floor instead of a false infinity.
struct OrdR {
  bool has_value = false;  // visible minimum, certified minimal at precision
  Rat value;               // valid when has_value
  Rat floor;               // otherwise: ord_R >= floor
};

OrdR ord_R(const TSeries& b, unsigned m_tilde);
OrdR ord_R_grs(const GRSeries& a, unsigned m_tilde);

struct OrderRecord {
  unsigned n = 0;
  long lambda = -1;        // first visibly nonzero T-index (-1: none visible)
  long lambda_prime = -1;  // first unit index (-1: not visible at precision NT)
  OrdR ord;
  Rat hodge_bound;         // a(p-1)n(n-1)/(2 delta)
  bool hodge_pass = false;
  bool hodge_shortfall = false;  // could not certify at this precision
  bool t6_applies = false;       // n = 0, 1 mod delta1
  Rat Lambda;                    // target order (when t6_applies)
  bool t6_integral = false;      // Lambda integral
  bool t6_pass = false;          // ord_R exactly Lambda with unit coefficient
};

struct OrderReport {
  std::vector<OrderRecord> records;  // n = 1..Ns
  bool hodge_all_pass = true;
  bool hodge_any_shortfall = false;
  bool t6_all_pass = true;
};

OrderReport order_report(const FredholmResult& fr, const TowerSpec& spec);

// T = psi(1) - 1 = zeta_{p^m} - 1; result reduced mod p^Np.
CycInt specialize_T(const TSeries& b, unsigned m);

// Valuation cap (ord_pi units) to which truncated quantities are comparable
// after specialization: min(NT, Np (p-1) p^{m-1}).
Int specialize_cap(long p, unsigned m, unsigned NT, unsigned Np);

// x = y mod (pi^NT, p^Np) in Z[zeta_{p^m}]
bool congruent_to_cap(const CycInt& x, const CycInt& y, unsigned NT, unsigned Np);

// Formal identity L_f(T,s) = C_f(T,s)/C_f(T,qs): the exp-of-S_f route and the
// C_f-quotient route must agree at the common truncation.
bool lf_quotient_identity(const FredholmResult& fr, long p, unsigned a);

struct DworkRun {
  DworkParams params;
  FredholmResult fred;
  OrderReport report;
};

DworkRun run_dwork(const TowerSpec& spec, const DworkParams& params);

}  // namespace aswt
