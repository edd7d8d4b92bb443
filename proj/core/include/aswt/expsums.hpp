#pragma once

// Exponential sums S*(psi, k) over mu_{q^k - 1}, by two independent routes:
//
//   witt:   psi(nu(Tr_{W_m(F_{q^k})/W_m(F_p)}(f^{(m)}(x)))) summed over x,
//           ground truth through the truncated Witt machinery (m <= 4);
//   galois: psi(Tr_{GR(p^m,ak)/Z_p^m}(fhat^{(m)}(xhat))) over Teichmuller
//           points, the fast route through the nu_{m,k} isomorphism.
//
// psi is the fixed primitive character psi(1) = zeta; all other primitive
// characters of the same conductor give Galois-conjugate sums (property
// tested), so their Newton polygons coincide.

#include <vector>

#include "aswt/cyclotomic.hpp"
#include "aswt/tower.hpp"

namespace aswt {

enum class SumRoute { witt, galois };

struct ExpSumTable {
  unsigned m = 1;             // conductor level of psi
  std::vector<CycInt> sums;   // S*(psi, k), k = 1..k_max at index k-1
};

struct ExpSumOptions {
  unsigned conductor = 0;     // 0 = same as level m
  std::size_t embed_rank = 0; // which conjugate root the F_q embedding uses
  unsigned threads = 0;       // 0 = library default (ASWT_THREADS / hardware)
};

CycInt exp_sum(const TowerSpec& spec, unsigned m, unsigned k, SumRoute route,
               const ExpSumOptions& opt = {});

ExpSumTable exp_sum_table(const TowerSpec& spec, unsigned m, unsigned k_max,
                          SumRoute route, const ExpSumOptions& opt = {});

// histogram of trace residues over Z/p^m (the sum before applying psi);
// exposed because conductor collapse and the psi^u equivariance act on it
std::vector<unsigned long> trace_histogram(const TowerSpec& spec, unsigned m,
                                           unsigned k, SumRoute route,
                                           const ExpSumOptions& opt = {});

// worker-count policy: ASWT_THREADS caps hardware_concurrency
unsigned thread_count();

}  // namespace aswt
