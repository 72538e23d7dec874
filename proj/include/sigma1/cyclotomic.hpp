/**
 * @file cyclotomic.hpp
 * @brief The cyclotomic field Q(zeta_m) in exact rational arithmetic.
 *
 * Elements are coordinate vectors over the power basis 1, z, .., z^{phi(m)-1}
 * modulo the m-th cyclotomic polynomial, with GMP rationals as coefficients,
 * so every identity checked downstream is exact.  Inversion runs the extended
 * Euclidean algorithm against the (irreducible) modulus.
 */
#ifndef SIGMA1_CYCLOTOMIC_HPP
#define SIGMA1_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sigma1 {

/// Monic m-th cyclotomic polynomial over Q, low-degree coefficients first.
std::vector<mpq_class> cyclotomic_polynomial(int64_t m);

class CyclotomicField {
 public:
  using Elem = std::vector<mpq_class>;  ///< power-basis coordinates, fixed length

  static CyclotomicField make(int64_t m);

  int64_t m() const { return m_; }
  int64_t degree() const { return static_cast<int64_t>(phi_.size()) - 1; }
  const std::vector<mpq_class>& modulus() const { return phi_; }

  Elem zero() const;
  Elem one() const;
  Elem zeta() const;  ///< class of X
  Elem zeta_power(int64_t k) const;
  Elem from_rational(const mpq_class& v) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;  // throws NonUnit on zero
  Elem pow(const Elem& a, int64_t k) const;
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const;

  std::string to_string(const Elem& a) const;

 private:
  int64_t m_ = 0;
  std::vector<mpq_class> phi_;  ///< monic modulus, length degree + 1

  Elem reduce(std::vector<mpq_class> poly) const;
};

}  // namespace sigma1

#endif  // SIGMA1_CYCLOTOMIC_HPP
