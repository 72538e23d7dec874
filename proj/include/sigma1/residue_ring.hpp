/**
 * @file residue_ring.hpp
 * @brief Exact arithmetic in the truncations O_K / pi^n of a p-adic ring of
 *        integers.
 *
 * Three concrete models cover every supported (e, n):
 *
 *   - ZpN      : e = 1, f = 1          ->  Z / p^n
 *   - Galois   : e = 1, f > 1          ->  (Z/p^n)[w] / (h(w)), h monic
 *                                          irreducible of degree f mod p
 *   - Ramified : e >= n                ->  F_q[pi] / (pi^n)
 *
 * For 1 < e < n the truncation depends on the Eisenstein polynomial of K and
 * is not representable by a coefficient convention alone; ring_make refuses
 * with UnsupportedRing.
 *
 * Elements are canonical codes (unsigned integers below size()): the mixed
 * radix encoding of the canonical coefficient vector.  All operations go
 * through the ring object; elements themselves are plain values, so they can
 * be stored, sorted and hashed freely.  Determinism of every encoding choice
 * (including the defining irreducible, picked as the lexicographically first
 * monic irreducible) is part of the contract.
 */
#ifndef SIGMA1_RESIDUE_RING_HPP
#define SIGMA1_RESIDUE_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sigma1/params.hpp"

namespace sigma1 {

enum class RingModel { ZpN, Galois, Ramified };

class ResidueRing {
 public:
  using Elem = uint32_t;

  /// Build O_K/pi^n for the given parameters.  Throws UnsupportedRing when
  /// 1 < e < n, BadParams on nonsense levels.
  static ResidueRing make(const Params& par, int64_t level);

  RingModel model() const { return model_; }
  int64_t p() const { return p_; }
  int64_t f() const { return f_; }
  int64_t e() const { return e_; }
  int64_t q() const { return q_; }
  int64_t level() const { return n_; }
  int64_t size() const { return size_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  /// Image of the uniformizer (p for e = 1, pi for the ramified model).
  Elem pi() const { return pi_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, int64_t k) const;  // k >= 0, or any k for units
  bool is_unit(Elem a) const;
  Elem inv(Elem a) const;  // throws NonUnit

  /// Image of an ordinary integer under Z -> O_K -> O_K/pi^n.
  Elem from_int(int64_t v) const;

  /// Reduction map onto the ring of the same parameters at a lower level.
  Elem reduce_to(const ResidueRing& target, Elem a) const;

  /// Reduction to the residue field (the level-1 ring of the same parameters).
  Elem residue(Elem a) const;

  /**
   * Teichmueller lift of a residue-field element (a code of the level-1
   * ring).  For the unramified models this is the unique x with x^q = x
   * lifting a, computed by iterating the q-power map on any lift until it
   * stabilizes.  For the ramified model the residue field sits inside the
   * ring as the constant coefficients, and the lift is that embedding.
   * The lift is multiplicative and a section of residue().
   */
  Elem teichmuller(Elem residue_code) const;

  /// Canonical coefficient vector (flat, mixed-radix digits of the code).
  std::vector<int64_t> coeff_vector(Elem a) const;

  /// Canonical display string ("7", "1+2w", "(1+w)pi", ...).
  std::string to_string(Elem a) const;

  /// Number of units (size * (q-1) / q for a chain ring).
  int64_t unit_count() const { return size_ - size_ / q_; }

 private:
  RingModel model_ = RingModel::ZpN;
  int64_t p_ = 0, f_ = 0, e_ = 0, q_ = 0;  // q = p^f
  int64_t n_ = 0;                          // truncation level
  int64_t pn_ = 0;                         // p^n (coefficient modulus, e = 1)
  int64_t size_ = 0;
  Elem one_ = 0, pi_ = 0;
  FpPoly h_;  // defining irreducible of degree f over F_p (f > 1)

  // decoded forms: ZpN single value; Galois f coefficients in [0, p^n);
  // Ramified n field codes in [0, q).
  std::vector<int64_t> decode(Elem a) const;
  Elem encode(const std::vector<int64_t>& v) const;

  // F_q arithmetic on codes (digits base p, ramified coefficient field)
  int64_t fq_add(int64_t a, int64_t b) const;
  int64_t fq_mul(int64_t a, int64_t b) const;
  int64_t fq_neg(int64_t a) const;
};

}  // namespace sigma1

#endif  // SIGMA1_RESIDUE_RING_HPP
