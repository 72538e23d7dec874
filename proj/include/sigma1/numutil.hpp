/**
 * @file numutil.hpp
 * @brief Small exact integer helpers shared across modules.
 *
 * Everything here is elementary: primality by trial division (inputs are tiny),
 * checked integer powers, floor division/modulo that behave for negative
 * arguments, and polynomial utilities over F_p used to pick defining
 * irreducibles for Galois rings and finite fields.
 */
#ifndef SIGMA1_NUMUTIL_HPP
#define SIGMA1_NUMUTIL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "sigma1/errors.hpp"

namespace sigma1 {

using std::int64_t;
using std::uint32_t;
using std::uint64_t;

/// Trial-division primality test; adequate for the single-digit primes in use.
inline bool is_prime_small(int64_t n) {
  if (n < 2) return false;
  for (int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

/// b^e for nonnegative e with an overflow guard (throws BadParams).
inline int64_t ipow(int64_t b, int64_t e) {
  if (e < 0) throw BadParams("ipow: negative exponent");
  int64_t r = 1;
  for (int64_t i = 0; i < e; ++i) {
    if (b != 0 && r > (int64_t{1} << 62) / (b < 0 ? -b : b))
      throw BadParams("ipow: overflow");
    r *= b;
  }
  return r;
}

/// Floor division (rounds toward minus infinity, unlike C++ '/').
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// Nonnegative remainder in [0, |b|).
inline int64_t floor_mod(int64_t a, int64_t b) { return a - floor_div(a, b) * b; }

/// Inverse of a modulo m (gcd(a, m) = 1 required; throws NonUnit otherwise).
inline int64_t inv_mod(int64_t a, int64_t m) {
  int64_t r0 = m, r1 = floor_mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw NonUnit("inv_mod: not invertible");
  return floor_mod(s0, m);
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, coefficient vectors low degree first.
// Only what ring construction needs: reduce, multiply, remainder, and a
// deterministic search for a monic irreducible of given degree.
// ---------------------------------------------------------------------------

using FpPoly = std::vector<int64_t>;  // c[0] + c[1] x + ...; coefficients in [0, p)

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  fp_trim(r);
  return r;
}

/// Remainder of a modulo monic m (leading coefficient of m must be 1).
inline FpPoly fp_rem(FpPoly a, const FpPoly& m, int64_t p) {
  fp_trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    int64_t c = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i < dm; ++i)
      a[shift + i] = floor_mod(a[shift + i] - c * m[i], p);
    a.pop_back();
    fp_trim(a);
  }
  return a;
}

/// Does monic g divide a exactly over F_p?
inline bool fp_divides(const FpPoly& g, const FpPoly& a, int64_t p) {
  return fp_rem(a, g, p).empty();
}

/**
 * First monic irreducible of degree m over F_p, in lexicographic order of the
 * coefficient tuple (c_0, ..., c_{m-1}).  Tested by trial division against
 * every monic polynomial of degree 1..m/2, which is exhaustive and cheap at
 * the sizes in play.  Deterministic, so the ring encodings it pins down are
 * reproducible across runs.
 */
inline FpPoly find_irreducible(int64_t p, int64_t m) {
  if (m == 1) return FpPoly{0, 1};  // x itself
  const int64_t total = ipow(p, m);
  for (int64_t code = 0; code < total; ++code) {
    FpPoly f(m + 1, 0);
    int64_t t = code;
    for (int64_t i = 0; i < m; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[m] = 1;
    bool irred = true;
    for (int64_t dg = 1; irred && 2 * dg <= m; ++dg) {
      for (int64_t gc = 0; gc < ipow(p, dg); ++gc) {
        FpPoly g(dg + 1, 0);
        int64_t u = gc;
        for (int64_t i = 0; i < dg; ++i) {
          g[i] = u % p;
          u /= p;
        }
        g[dg] = 1;
        if (fp_divides(g, f, p)) {
          irred = false;
          break;
        }
      }
    }
    if (irred) return f;
  }
  throw BadParams("find_irreducible: none found (unreachable)");
}

}  // namespace sigma1

#endif  // SIGMA1_NUMUTIL_HPP
