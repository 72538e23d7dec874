/**
 * @file divisor.hpp
 * @brief Exponent vectors over hyperplane classes and the Kummer-class
 *        calculus of the first covering.
 *
 * Invertible functions on the symmetric space, up to constants and principal
 * redundancy, are tracked by their divisor of zeroes along the rational
 * hyperplanes: a degree-zero exponent vector over the classes at some level
 * n, with coefficients read modulo a modulus m (m = 0 meaning honest
 * integers).  Kummer classes of cyclic covers of degree N live in
 * pi^{Z/N} x (Z/N)[H_n]^0: a pi-exponent plus a mod-N vector.
 *
 * The distinguished objects:
 *   - canonical_generator(n): coefficient q^{n-1} at every level-n class
 *     (mod Nt), the generator of the invariant classes at level n;
 *   - kummer_class_sigma1(n): pi-exponent 1 and coefficient (q-1) q^n at
 *     every level-(n+1) class (mod N) — the class cutting out the first
 *     covering over the level-n locus.
 *
 * Base points are avoided throughout: degree-zero vectors stand for the
 * ratios l_H / l_{H_0} without choosing H_0.  normalize_to_base() produces a
 * based representative for display only.
 */
#ifndef SIGMA1_DIVISOR_HPP
#define SIGMA1_DIVISOR_HPP

#include <map>
#include <vector>

#include "sigma1/hyperplanes.hpp"

namespace sigma1 {

/// Sparse exponent vector over the hyperplane classes at a fixed level.
/// Coefficients are stored as exact integers and reduced modulo `modulus`
/// only when comparing (modulus 0 = no reduction).
struct DivisorVector {
  int64_t level = 0;
  int64_t modulus = 0;
  std::map<HyperplaneClass, int64_t> c;

  /// Pointwise sum of exponents (product of the underlying functions).
  DivisorVector mul(const DivisorVector& o) const;
  DivisorVector inverse() const;
  DivisorVector pow(int64_t k) const;
  /// Equality mod the common modulus; throws on level/modulus mismatch.
  bool eq(const DivisorVector& o) const;
  /// Exact integer total mass.
  int64_t degree() const;
  /// Degree == 0 mod modulus (== 0 exactly when modulus is 0).
  bool degree_zero() const;
  /// Coefficient lookup (0 when absent).
  int64_t coeff(const HyperplaneClass& H) const;
  /// Multiply every coefficient by k and reinterpret modulo new_modulus.
  /// Legal when k * modulus == 0 mod new_modulus (or the vector is integral),
  /// so the rescaling is independent of the chosen residues.
  DivisorVector scaled(int64_t k, int64_t new_modulus) const;
  /// Drop explicit zero coefficients (exact zeros only).
  void compact();
};

/// Formal unit: a pi-exponent together with a divisor vector.  Multiplicative
/// group written multiplicatively; constants and 1-units are quotiented away.
struct UnitClass {
  int64_t pi_exp = 0;
  DivisorVector div;

  UnitClass mul(const UnitClass& o) const;
  UnitClass inverse() const;
  UnitClass pow(int64_t k) const;
  bool eq(const UnitClass& o) const;
};

/// Kummer class of a degree-N cyclic cover: element of
/// pi^{Z/N} x (Z/N)[H_n]^0.
struct KummerClass {
  int64_t modulus = 0;  // N
  int64_t pi_exp = 0;
  DivisorVector div;    // modulus N

  bool eq(const KummerClass& o) const;
};

/// Coefficient q^{n-1} (mod Nt) at every class of the ring's level.
DivisorVector canonical_generator(const Params& par, const ResidueRing& R);

/// Sum coefficients over the fibers of level reduction.  A divisor at
/// `from`'s level maps to one at `to`'s level with the same modulus.
DivisorVector pushforward(const Params& par, const ResidueRing& from, const ResidueRing& to,
                          const DivisorVector& D);

/// The class of the first covering restricted over the level-n locus:
/// pi-exponent 1 and the (q-1)-st power of the level-(n+1) canonical
/// generator, all modulo N.  The divisor lives at level n + 1.
KummerClass kummer_class_sigma1(const Params& par, int64_t n, const ResidueRing& ring_np1);

/// Does g fix the vector (coefficients permuted along the class action)?
bool is_invariant(const Params& par, const ResidueRing& R, const DivisorVector& D,
                  const GLMatrix& g);
bool is_invariant(const Params& par, const ResidueRing& R, const KummerClass& K,
                  const GLMatrix& g);

/// Exhaustive solution of the invariance constraints across levels
/// 1..n_max: sequences (alpha_1, ..., alpha_{n_max}) in (Z/N)^{n_max} with
/// alpha_k = q^d alpha_{k+1} and Nt * alpha_k = 0.  The solution set is the
/// cyclic group generated by alpha_k = (q-1) q^{k-1}, of order Nt.
struct InvariantEnumeration {
  int64_t n_max = 0;
  std::vector<int64_t> generator;              // ((q-1) q^{k-1} mod N)_k
  std::vector<std::vector<int64_t>> solutions; // sorted tuples
  bool cyclic_match = false;                   // solutions == <generator>
};
InvariantEnumeration invariant_class_enumeration(const Params& par, int64_t n_max);

/// Largest m | N such that the class is an m-th power over C (divisor part
/// only): gcd of N with all coefficients.
int64_t pi0_over_C(const KummerClass& K);

/// Same over K-breve, where pi is not an N-th power: the pi-exponent joins
/// the gcd.
int64_t pi0_over_Kbreve(const KummerClass& K);

/// Based representative for display: subtract deg * delta_{H0} so the result
/// printed against base H0 has degree zero exactly.
DivisorVector normalize_to_base(const DivisorVector& D, const HyperplaneClass& H0);

}  // namespace sigma1

#endif  // SIGMA1_DIVISOR_HPP
