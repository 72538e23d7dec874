/**
 * @file mpoly.hpp
 * @brief Sparse multivariate polynomials over a small finite field.
 *
 * Terms are kept sorted in descending graded-lex order with no zero
 * coefficients, so equality is plain memberwise comparison.  The coefficient
 * field is passed into each operation rather than stored, keeping the value
 * type trivially copyable.  Exact division implements leading-term
 * elimination, which for a divisibility test by a fixed divisor is complete:
 * the remainder chain stays inside the principal ideal, whose nonzero members
 * always have leading terms divisible by the divisor's.
 */
#ifndef SIGMA1_MPOLY_HPP
#define SIGMA1_MPOLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma1/fq.hpp"

namespace sigma1 {

constexpr int kMaxVars = 4;

struct Mono {
  std::array<uint16_t, kMaxVars> e{0, 0, 0, 0};

  int64_t total() const {
    int64_t t = 0;
    for (auto x : e) t += x;
    return t;
  }
  bool divides(const Mono& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<size_t>(i)] > m.e[static_cast<size_t>(i)]) return false;
    return true;
  }
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[static_cast<size_t>(i)] =
          static_cast<uint16_t>(a.e[static_cast<size_t>(i)] + b.e[static_cast<size_t>(i)]);
    return r;
  }
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[static_cast<size_t>(i)] =
          static_cast<uint16_t>(a.e[static_cast<size_t>(i)] - b.e[static_cast<size_t>(i)]);
    return r;
  }
  friend bool operator==(const Mono& a, const Mono& b) = default;
};

/// Graded-lex order: total degree first, then leftmost differing exponent.
std::strong_ordering grlex(const Mono& a, const Mono& b);

struct MPoly {
  int nvars = 0;
  std::vector<std::pair<Mono, Fq::Elem>> t;  // descending grlex, coeffs nonzero

  bool is_zero() const { return t.empty(); }
  int64_t degree() const { return t.empty() ? -1 : t.front().first.total(); }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;
};

MPoly mp_zero(int nvars);
MPoly mp_const(int nvars, Fq::Elem c);
MPoly mp_var(int nvars, int j);
MPoly mp_add(const Fq& F, const MPoly& a, const MPoly& b);
MPoly mp_sub(const Fq& F, const MPoly& a, const MPoly& b);
MPoly mp_neg(const Fq& F, const MPoly& a);
MPoly mp_scale(const Fq& F, const MPoly& a, Fq::Elem c);
MPoly mp_mul(const Fq& F, const MPoly& a, const MPoly& b);
MPoly mp_pow(const Fq& F, const MPoly& a, int64_t k);

/// Quotient a / b when b divides a exactly, std::nullopt otherwise.
std::optional<MPoly> mp_exact_div(const Fq& F, const MPoly& a, const MPoly& b);

/// Largest k with g^k | a (a nonzero, g nonconstant).
int64_t mp_multiplicity(const Fq& F, const MPoly& a, const MPoly& g);

std::string mp_to_string(const Fq& F, const MPoly& a,
                         const std::vector<std::string>& names);

}  // namespace sigma1

#endif  // SIGMA1_MPOLY_HPP
