/**
 * @file fq.hpp
 * @brief Small finite fields F_{p^m} with deterministic encodings.
 *
 * Elements are codes below p^m: the base-p digits are the coefficients of the
 * canonical representative modulo the lexicographically first monic
 * irreducible of degree m (same convention as the residue rings, so level-1
 * ring codes and field codes coincide).  Everything is computed on the fly —
 * at these sizes (<= a few thousand elements) tables would only obscure.
 */
#ifndef SIGMA1_FQ_HPP
#define SIGMA1_FQ_HPP

#include <string>
#include <vector>

#include "sigma1/numutil.hpp"

namespace sigma1 {

class Fq {
 public:
  using Elem = uint32_t;

  static Fq make(int64_t p, int64_t m);

  int64_t p() const { return p_; }
  int64_t m() const { return m_; }
  int64_t size() const { return size_; }
  const FpPoly& modulus() const { return h_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws NonUnit on zero
  Elem pow(Elem a, int64_t k) const;
  Elem from_int(int64_t v) const;

  /// Evaluate a polynomial with F_p coefficients at x (Horner).
  Elem eval_fp_poly(const FpPoly& c, Elem x) const;

  std::string to_string(Elem a, const std::string& var = "g") const;

  /**
   * Embedding table little -> big for F_{p^s} inside F_{p^m}, s | m:
   * the image of the little generator is the smallest-code root of the
   * little defining polynomial, making the table deterministic.  Entry i is
   * the image of little code i.  Field homomorphism; verified by tests.
   */
  static std::vector<Elem> subfield_embedding(const Fq& little, const Fq& big);

  /// Sorted codes of the n-th roots of unity (requires n | p^m - 1).
  std::vector<Elem> roots_of_unity(int64_t n) const;

 private:
  int64_t p_ = 0, m_ = 0, size_ = 0;
  FpPoly h_;
};

}  // namespace sigma1

#endif  // SIGMA1_FQ_HPP
