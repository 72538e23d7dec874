/**
 * @file params.hpp
 * @brief Global parameter pack (p, f, e, d) and the derived constants.
 *
 * The base field K is a finite extension of Q_p with residue degree f and
 * ramification index e; q = p^f is the residue field size and d >= 1 the
 * dimension of the symmetric space.  Two integers drive all the congruence
 * arithmetic downstream:
 *
 *   N  = q^{d+1} - 1      (order of the cyclic covering group),
 *   Nt = N / (q - 1)      (number of rational hyperplane classes at level 1).
 *
 * N is prime to p, and N = (q-1) * Nt exactly; both facts are checked at
 * construction and re-checked by tests.
 */
#ifndef SIGMA1_PARAMS_HPP
#define SIGMA1_PARAMS_HPP

#include <cstdint>

#include "sigma1/numutil.hpp"

namespace sigma1 {

struct Params {
  int64_t p = 0;   ///< residue characteristic (prime)
  int64_t f = 0;   ///< residue degree
  int64_t e = 0;   ///< ramification index
  int64_t d = 0;   ///< dimension of the symmetric space
  int64_t q = 0;   ///< residue field size p^f
  int64_t N = 0;   ///< q^{d+1} - 1
  int64_t Nt = 0;  ///< N / (q - 1)

  static Params make(int64_t p, int64_t f, int64_t e, int64_t d) {
    if (!is_prime_small(p)) throw BadParams("Params: p must be prime");
    if (f < 1 || e < 1 || d < 1) throw BadParams("Params: f, e, d must be >= 1");
    Params P;
    P.p = p;
    P.f = f;
    P.e = e;
    P.d = d;
    P.q = ipow(p, f);
    P.N = ipow(P.q, d + 1) - 1;
    P.Nt = P.N / (P.q - 1);
    // (q-1) | N is the geometric series identity; gcd(N, p) = 1 because
    // N = q^{d+1} - 1 == -1 mod p.  Guard anyway: these two invariants are
    // load-bearing for every congruence below.
    if (P.N != (P.q - 1) * P.Nt) throw BadParams("Params: N != (q-1)*Nt");
    if (std::gcd(P.N, p) != 1) throw BadParams("Params: gcd(N, p) != 1");
    return P;
  }

  bool operator==(const Params& o) const {
    return p == o.p && f == o.f && e == o.e && d == o.d;
  }
};

}  // namespace sigma1

#endif  // SIGMA1_PARAMS_HPP
