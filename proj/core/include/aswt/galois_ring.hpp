#pragma once

// Arithmetic in Galois rings GR(p^m, n) = Z_{p^n}/p^m, the unramified degree-n
// extension of Z/p^m.  The m = 1 case doubles as the finite field F_{p^n}.
//
// One canonical modulus per (p, n): the lexicographically smallest monic
// irreducible of degree n over F_p (coefficient tuple read from the constant
// term upward).  Every precision m reads the same polynomial mod p^m, so
// Teichmuller lifts of a fixed residue are compatible across m.

#include <cstddef>
#include <vector>

#include "aswt/numeric.hpp"

namespace aswt {

struct GRContext {
  long p = 0;
  unsigned m = 1;  // coefficients live in Z/p^m
  unsigned n = 1;  // extension degree
  Int pm;          // p^m

  // Monic irreducible of degree n over F_p, coefficients in [0, p).
  std::vector<long> modulus;

  // sigma(x^j) in power-basis coordinates, j < n (sigma = Frobenius).
  std::vector<std::vector<Int>> frob_columns;
  std::vector<std::vector<Int>> frob_inv_columns;  // sigma^{-1}(x^j)

  // Tr(x^j) as residues in [0, p^m); the trace form used by hot loops.
  std::vector<Int> trace_form;

  // Generator of F_{p^n}^x in canonical order (m == 1 contexts only),
  // as residue coordinates.
  std::vector<long> generator;

  GRContext(long p, unsigned m, unsigned n);
  GRContext(const GRContext&) = delete;
  GRContext& operator=(const GRContext&) = delete;
};

// Interned, write-once context cache; references stay valid for the process
// lifetime, so elements can hold plain pointers.
const GRContext& gr_context(long p, unsigned m, unsigned n);

struct GRElem {
  const GRContext* ctx = nullptr;
  std::vector<Int> c;  // n coordinates, each in [0, p^m)

  bool is_zero() const {
    for (const Int& x : c)
      if (x != 0) return false;
    return true;
  }
};

GRElem gr_zero(const GRContext& ctx);
GRElem gr_one(const GRContext& ctx);
GRElem gr_from_int(const GRContext& ctx, const Int& v);
GRElem gr_from_coords(const GRContext& ctx, std::vector<Int> coords);
// Residue coordinates (coeffs in [0,p)) of an m = 1 element, or of any
// element reduced mod p.
std::vector<long> gr_residue(const GRElem& a);

bool gr_equal(const GRElem& a, const GRElem& b);
GRElem gr_add(const GRElem& a, const GRElem& b);
GRElem gr_sub(const GRElem& a, const GRElem& b);
GRElem gr_neg(const GRElem& a);
GRElem gr_mul(const GRElem& a, const GRElem& b);
GRElem gr_scale(const GRElem& a, const Int& k);
GRElem gr_pow(const GRElem& a, const Int& e);

// In-place kernel for hot loops: out = a * b. out must not alias a or b.
void gr_mul_into(GRElem& out, const GRElem& a, const GRElem& b);

// Teichmuller lift of a residue r in F_{p^n}: the unique t with t^{p^n} = t
// and t = r mod p.  Computed by iterating z -> z^{p^n} (at most m steps;
// fixpoint asserted).
GRElem teichmuller(const GRContext& ctx, const std::vector<long>& residue);
bool is_teichmuller(const GRElem& a);

// Frobenius via Teichmuller digit decomposition: alpha = sum t_i p^i maps to
// sum t_i^p p^i.  gr_frobenius uses the precomputed linear form; the _digits
// variant is the defining construction (they agree; tests enforce it).
GRElem gr_frobenius(const GRElem& a);
GRElem gr_frobenius_digits(const GRElem& a);
GRElem gr_frobenius_inv(const GRElem& a);

// Tr = sum of sigma^j, j < n; result lies in the prime subring (asserted)
// and is returned as a residue in [0, p^m).
Int gr_trace(const GRElem& a);
// Trace as the cached linear form (same value, no assertion overhead).
Int gr_trace_fast(const GRElem& a);

// Embedding F_{p^ns} -> F_{p^nl} (ns | nl) sending the subfield generator to
// a root of the subfield modulus; root_rank = 0 picks the least root in the
// canonical element order, higher ranks pick the other conjugates.
struct EmbedMap {
  const GRContext* sub = nullptr;
  const GRContext* sup = nullptr;
  std::vector<GRElem> root_powers;  // root^j, j < deg(sub)

  GRElem apply(const GRElem& a) const;
  GRElem apply_residue(const std::vector<long>& coords) const;
};

EmbedMap embed(const GRContext& sub, const GRContext& sup, std::size_t root_rank = 0);
std::size_t embed_root_count(const GRContext& sub, const GRContext& sup);

// Odometer stepping residue tuples through the canonical (lexicographic)
// element order; returns false after the last tuple wraps to zero.
bool next_residue_tuple(std::vector<long>& coords, long p);

}  // namespace aswt
