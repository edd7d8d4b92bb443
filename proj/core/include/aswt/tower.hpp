#pragma once

// Tower data f(x) = sum_i iota_i(f_i(x)) with f_i over F_q, plus the derived
// constants D, delta, m~, delta_1, d(m), m_0 driving every bound downstream.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aswt/galois_ring.hpp"
#include "aswt/numeric.hpp"

namespace aswt {

struct TowerRow {
  unsigned index = 0;           // coordinate i the row is placed at
  std::vector<GRElem> coeffs;   // c_0..c_{d_i} in F_q, trailing zeros trimmed

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

struct TowerConstants {
  long D = 0;              // max_i d_i
  Rat delta;               // max_i d_i / p^i
  unsigned m_tilde = 1;    // 1 + first i with d_i = D
  long delta1 = 0;         // p^{m~-1} delta = max_{i<m~} p^{m~-1-i} d_i
  long m0 = 1;             // m~ + ceil(log_p(1/p + a(delta1-1)^2/(8 delta1)))
  bool m0_clamped = false; // true when the formula gave m0 < m~
};

struct TowerSpec {
  long p = 0;
  unsigned a = 1;                  // q = p^a
  const GRContext* fq = nullptr;   // F_{p^a}
  std::vector<TowerRow> rows;      // nonzero rows, sorted by index
  TowerConstants consts;

  long max_row_index() const { return rows.empty() ? -1 : rows.back().index; }
  const TowerRow* row(unsigned i) const {
    for (const TowerRow& r : rows)
      if (r.index == i) return &r;
    return nullptr;
  }
};

// Build and validate a tower; rows give (i, coefficients), each coefficient a
// polynomial-basis tuple over F_p of length a (entries reduced mod p).
// Rejects d_0 = 0 and vanishing leading coefficients.
TowerSpec make_tower(long p, unsigned a,
                     const std::vector<std::pair<unsigned, std::vector<std::vector<long>>>>& rows);
// a = 1 convenience: plain integer coefficients
TowerSpec make_tower_fp(long p, const std::vector<std::pair<unsigned, std::vector<long>>>& rows);

// Config file form: {"p":2,"a":1,"rows":[{"i":0,"coeffs":[0,0,0,1]}]};
// for a > 1 the coeff entries are arrays (tuples over F_p).
TowerSpec tower_from_json_text(const std::string& text);
TowerSpec tower_from_file(const std::string& path);
std::string tower_to_json_text(const TowerSpec& spec);

TowerConstants tower_constants(const TowerSpec& spec);

// d(m) = max_{0<=i<=m-1} p^{m-1-i} d_i, the Liu-Wei degree of L* at level m.
long degree_d(const TowerSpec& spec, unsigned m);

// Non-degeneracy at level m: sum over {i : p^{m-1-i} d_i = d(m)} of
// d_i a_{i,d_i}^{p^{m-1-i}} is nonzero in F_q.
bool nondegenerate(const TowerSpec& spec, unsigned m);

}  // namespace aswt
