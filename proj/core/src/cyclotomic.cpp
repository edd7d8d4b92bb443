#include "aswt/cyclotomic.hpp"

#include <algorithm>

namespace aswt {

unsigned long cyc_phi(long p, unsigned m) {
  return to_long((Int(p) - 1) * pow_int(p, m - 1));
}

CycInt cyc_zero(long p, unsigned m) {
  return CycInt{p, m, std::vector<Int>(cyc_phi(p, m), 0)};
}

CycInt cyc_one(long p, unsigned m) {
  CycInt a = cyc_zero(p, m);
  a.c[0] = 1;
  return a;
}

CycInt cyc_from_int(long p, unsigned m, const Int& v) {
  CycInt a = cyc_zero(p, m);
  a.c[0] = v;
  return a;
}

namespace {
// reduce an exponent-indexed accumulator of length p^m into the power basis
CycInt reduce_full(long p, unsigned m, std::vector<Int>& acc) {
  const unsigned long phi = cyc_phi(p, m);
  const unsigned long t = to_long(pow_int(p, m - 1));
  CycInt out = cyc_zero(p, m);
  // x^{(p-1)t + s} = -(x^s + x^{t+s} + ... + x^{(p-2)t+s})
  for (unsigned long e = acc.size(); e-- > phi;) {
    if (acc[e] == 0) continue;
    unsigned long s = e - phi;  // e = (p-1)t + s with 0 <= s < t
    for (long j = 0; j < p - 1; ++j) acc[s + j * t] -= acc[e];
    acc[e] = 0;
  }
  for (unsigned long i = 0; i < phi; ++i) out.c[i] = acc[i];
  return out;
}
}  // namespace

CycInt psi_char(long p, unsigned m, const Int& c) {
  const Int P = pow_int(p, m);
  unsigned long e = to_long(mod_positive(c, P));
  std::vector<Int> acc(to_long(P), 0);
  acc[e] = 1;
  return reduce_full(p, m, acc);
}

bool cyc_equal(const CycInt& a, const CycInt& b) {
  return a.p == b.p && a.m == b.m && a.c == b.c;
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  ASWT_REQUIRE(a.p == b.p && a.m == b.m, "cyc_add: ring mismatch");
  CycInt out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  ASWT_REQUIRE(a.p == b.p && a.m == b.m, "cyc_sub: ring mismatch");
  CycInt out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

CycInt cyc_neg(const CycInt& a) {
  CycInt out = a;
  for (Int& x : out.c) x = -x;
  return out;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  ASWT_REQUIRE(a.p == b.p && a.m == b.m, "cyc_mul: ring mismatch");
  const unsigned long phi = a.c.size();
  const unsigned long P = to_long(pow_int(a.p, a.m));
  std::vector<Int> acc(std::max<unsigned long>(2 * phi - 1, P), 0);
  for (unsigned long i = 0; i < phi; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned long j = 0; j < phi; ++j) {
      if (b.c[j] == 0) continue;
      acc[i + j] += a.c[i] * b.c[j];
    }
  }
  // zeta^P = 1
  for (unsigned long e = acc.size(); e-- > P;) {
    if (acc[e] == 0) continue;
    acc[e - P] += acc[e];
    acc[e] = 0;
  }
  acc.resize(P);
  return reduce_full(a.p, a.m, acc);
}

CycInt cyc_scale(const CycInt& a, const Int& k) {
  CycInt out = a;
  for (Int& x : out.c) x *= k;
  return out;
}

CycInt cyc_exact_div_int(const CycInt& a, const Int& n) {
  ASWT_REQUIRE(n != 0, "cyc_exact_div_int by zero");
  CycInt out = a;
  for (Int& x : out.c) {
    ASWT_REQUIRE(x % n == 0,
                 "exact division failed: coefficient not divisible (integrality guard)");
    x /= n;
  }
  return out;
}

CycInt cyc_galois(const CycInt& a, const Int& u) {
  const Int P = pow_int(a.p, a.m);
  ASWT_REQUIRE(gcd(mod_positive(u, P), Int(a.p)) == 1, "cyc_galois: u must be prime to p");
  std::vector<Int> acc(to_long(P), 0);
  for (unsigned long i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    unsigned long e = to_long(mod_positive(Int(i) * u, P));
    acc[e] += a.c[i];
  }
  return reduce_full(a.p, a.m, acc);
}

CycInt cyc_reduce_coeffs(const CycInt& a, const Int& mod) {
  CycInt out = a;
  for (Int& x : out.c) x = mod_positive(x, mod);
  return out;
}

namespace {

// determinant by fraction-free Bareiss elimination
Int bareiss_det(std::vector<std::vector<Int>> M) {
  const std::size_t k = M.size();
  if (k == 0) return Int(1);
  int sign = 1;
  Int prev = 1;
  for (std::size_t r = 0; r + 1 < k; ++r) {
    if (M[r][r] == 0) {
      std::size_t s = r + 1;
      while (s < k && M[s][r] == 0) ++s;
      if (s == k) return Int(0);
      std::swap(M[r], M[s]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < k; ++i) {
      for (std::size_t j = r + 1; j < k; ++j) {
        Int num = M[i][j] * M[r][r] - M[i][r] * M[r][j];
        ASWT_REQUIRE(num % prev == 0, "bareiss: non-exact division (internal bug)");
        M[i][j] = num / prev;
      }
      M[i][r] = 0;
    }
    prev = M[r][r];
  }
  return sign > 0 ? M[k - 1][k - 1] : -M[k - 1][k - 1];
}

}  // namespace

Int cyc_norm(const CycInt& a) {
  ASWT_REQUIRE(!a.is_zero(), "cyc_norm of zero");
  const unsigned long phi = a.c.size();
  const unsigned long t = to_long(pow_int(a.p, a.m - 1));
  // Phi coefficients, degree phi: 1 at exponents j*t
  std::vector<Int> A(phi + 1, 0);
  for (long j = 0; j < a.p; ++j) A[j * t] = 1;
  // representative, trimmed to true degree
  std::vector<Int> B = a.c;
  while (!B.empty() && B.back() == 0) B.pop_back();
  const std::size_t n1 = phi;             // deg A
  const std::size_t n2 = B.size() - 1;    // deg B
  const std::size_t k = n1 + n2;
  // Sylvester matrix: n2 shifted rows of A, then n1 shifted rows of B,
  // coefficients written from the leading term down.
  std::vector<std::vector<Int>> M(k, std::vector<Int>(k, 0));
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t j = 0; j <= n1; ++j) M[r][r + j] = A[n1 - j];
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t j = 0; j <= n2; ++j) M[n2 + r][r + j] = B[n2 - j];
  return bareiss_det(std::move(M));
}

Valuation pi_valuation(const CycInt& a) {
  if (a.is_zero()) return Valuation{true, Rat(0)};
  Int nrm = cyc_norm(a);
  ASWT_REQUIRE(nrm != 0, "pi_valuation: zero norm for nonzero element (internal bug)");
  unsigned long v = padic_val(nrm, Int(a.p));
  return Valuation{false, Rat(static_cast<unsigned long>(v))};
}

Valuation ord_p_valuation(const CycInt& a) {
  Valuation v = pi_valuation(a);
  if (v.is_infinite) return v;
  v.value /= Rat(cyc_phi(a.p, a.m));
  return v;
}

Valuation ord_q_valuation(const CycInt& a, unsigned a_ext) {
  Valuation v = pi_valuation(a);
  if (v.is_infinite) return v;
  v.value /= Rat(Int(a_ext) * Int(cyc_phi(a.p, a.m)));
  v.value.canonicalize();
  return v;
}

}  // namespace aswt
