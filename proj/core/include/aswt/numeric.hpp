#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace aswt {

using Int = mpz_class;
using Rat = mpq_class;

// All invariant violations surface as aswt::error; "hard failure" clauses in
// the arithmetic kernels throw this rather than returning sentinels.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define ASWT_REQUIRE(cond, msg)                       \
  do {                                                \
    if (!(cond)) throw ::aswt::error(msg);            \
  } while (0)

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

// p-adic valuation of a nonzero integer; caller guards the zero case.
inline unsigned long padic_val(const Int& x, const Int& p) {
  ASWT_REQUIRE(x != 0, "padic_val of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

inline Int mod_positive(const Int& x, const Int& mod) {
  Int r = x % mod;
  if (r < 0) r += mod;
  return r;
}

inline Int mod_inverse(const Int& x, const Int& mod) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  ASWT_REQUIRE(ok != 0, "mod_inverse: element not invertible");
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Exact rationals serialize as "num/den"; no floating point anywhere.
inline std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Smallest integer e with p^e >= x (x a positive rational): the exact form of
// ceil(log_p x). Works for x <= 1 (e may be <= 0).
inline long ceil_log(long p, const Rat& x) {
  ASWT_REQUIRE(x > 0, "ceil_log: argument must be positive");
  long e = 0;
  Rat pw(1);
  if (pw >= x) {
    // walk down while p^(e-1) still >= x
    while (true) {
      Rat lower = pw / p;
      if (lower >= x) {
        pw = lower;
        --e;
      } else {
        return e;
      }
    }
  }
  while (pw < x) {
    pw *= p;
    ++e;
  }
  return e;
}

inline long to_long(const Int& x) {
  ASWT_REQUIRE(x.fits_slong_p(), "integer out of long range");
  return x.get_si();
}

}  // namespace aswt
