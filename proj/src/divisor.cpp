/**
 * @file divisor.cpp
 * @brief Divisor-vector group operations and the invariance calculus.
 */
#include "sigma1/divisor.hpp"

#include <algorithm>

namespace sigma1 {

namespace {
void check_compatible(const DivisorVector& a, const DivisorVector& b) {
  if (a.level != b.level) throw LevelMismatch("divisor: levels disagree");
  if (a.modulus != b.modulus) throw ModulusMismatch("divisor: moduli disagree");
}
}  // namespace

DivisorVector DivisorVector::mul(const DivisorVector& o) const {
  check_compatible(*this, o);
  DivisorVector r = *this;
  for (const auto& [H, v] : o.c) r.c[H] += v;
  r.compact();
  return r;
}

DivisorVector DivisorVector::inverse() const {
  DivisorVector r = *this;
  for (auto& [H, v] : r.c) v = -v;
  return r;
}

DivisorVector DivisorVector::pow(int64_t k) const {
  DivisorVector r = *this;
  for (auto& [H, v] : r.c) v *= k;
  r.compact();
  return r;
}

bool DivisorVector::eq(const DivisorVector& o) const {
  check_compatible(*this, o);
  auto same = [&](int64_t x, int64_t y) {
    return modulus == 0 ? x == y : floor_mod(x - y, modulus) == 0;
  };
  for (const auto& [H, v] : c)
    if (!same(v, o.coeff(H))) return false;
  for (const auto& [H, v] : o.c)
    if (!same(coeff(H), v)) return false;
  return true;
}

int64_t DivisorVector::degree() const {
  int64_t s = 0;
  for (const auto& [H, v] : c) s += v;
  return s;
}

bool DivisorVector::degree_zero() const {
  int64_t s = degree();
  return modulus == 0 ? s == 0 : floor_mod(s, modulus) == 0;
}

int64_t DivisorVector::coeff(const HyperplaneClass& H) const {
  auto it = c.find(H);
  return it == c.end() ? 0 : it->second;
}

DivisorVector DivisorVector::scaled(int64_t k, int64_t new_modulus) const {
  if (modulus != 0 && new_modulus != 0 && floor_mod(k * modulus, new_modulus) != 0)
    throw ModulusMismatch("scaled: k*modulus not divisible by new modulus");
  if (modulus != 0 && new_modulus == 0)
    throw ModulusMismatch("scaled: cannot lift a reduced vector to integers");
  DivisorVector r = *this;
  r.modulus = new_modulus;
  for (auto& [H, v] : r.c) v *= k;
  r.compact();
  return r;
}

void DivisorVector::compact() {
  for (auto it = c.begin(); it != c.end();)
    it = (it->second == 0) ? c.erase(it) : std::next(it);
}

UnitClass UnitClass::mul(const UnitClass& o) const {
  return UnitClass{pi_exp + o.pi_exp, div.mul(o.div)};
}

UnitClass UnitClass::inverse() const { return UnitClass{-pi_exp, div.inverse()}; }

UnitClass UnitClass::pow(int64_t k) const { return UnitClass{pi_exp * k, div.pow(k)}; }

bool UnitClass::eq(const UnitClass& o) const { return pi_exp == o.pi_exp && div.eq(o.div); }

bool KummerClass::eq(const KummerClass& o) const {
  if (modulus != o.modulus) throw ModulusMismatch("KummerClass: moduli disagree");
  return floor_mod(pi_exp - o.pi_exp, modulus) == 0 && div.eq(o.div);
}

DivisorVector canonical_generator(const Params& par, const ResidueRing& R) {
  DivisorVector D;
  D.level = R.level();
  D.modulus = par.Nt;
  int64_t coeff = floor_mod(ipow(par.q, R.level() - 1), par.Nt);
  for (const auto& H : enumerate_hyperplanes(par, R)) D.c[H] = coeff;
  D.compact();
  return D;
}

DivisorVector pushforward(const Params& par, const ResidueRing& from, const ResidueRing& to,
                          const DivisorVector& D) {
  if (D.level != from.level()) throw LevelMismatch("pushforward: divisor level != ring level");
  DivisorVector R;
  R.level = to.level();
  R.modulus = D.modulus;
  for (const auto& [H, v] : D.c) R.c[reduce_class(from, to, H)] += v;
  (void)par;
  R.compact();
  return R;
}

KummerClass kummer_class_sigma1(const Params& par, int64_t n, const ResidueRing& ring_np1) {
  if (ring_np1.level() != n + 1)
    throw LevelMismatch("kummer_class_sigma1: ring must live at level n+1");
  KummerClass K;
  K.modulus = par.N;
  K.pi_exp = 1;
  K.div.level = n + 1;
  K.div.modulus = par.N;
  int64_t coeff = floor_mod((par.q - 1) * ipow(par.q, n), par.N);
  for (const auto& H : enumerate_hyperplanes(par, ring_np1)) K.div.c[H] = coeff;
  K.div.compact();
  return K;
}

bool is_invariant(const Params& par, const ResidueRing& R, const DivisorVector& D,
                  const GLMatrix& g) {
  DivisorVector moved;
  moved.level = D.level;
  moved.modulus = D.modulus;
  for (const auto& [H, v] : D.c) moved.c[gl_act(R, g, H)] += v;
  moved.compact();
  (void)par;
  return moved.eq(D);
}

bool is_invariant(const Params& par, const ResidueRing& R, const KummerClass& K,
                  const GLMatrix& g) {
  // pi is a constant for the group action; only the divisor part moves.
  return is_invariant(par, R, K.div, g);
}

InvariantEnumeration invariant_class_enumeration(const Params& par, int64_t n_max) {
  if (n_max < 1) throw BadParams("invariant_class_enumeration: n_max must be >= 1");
  const int64_t N = par.N, Nt = par.Nt, qd = floor_mod(ipow(par.q, par.d), N);

  InvariantEnumeration out;
  out.n_max = n_max;
  for (int64_t k = 1; k <= n_max; ++k)
    out.generator.push_back(floor_mod((par.q - 1) * ipow(par.q, k - 1), N));

  auto admissible = [&](const std::vector<int64_t>& alpha) {
    for (int64_t k = 0; k < n_max; ++k)
      if (floor_mod(Nt * alpha[k], N) != 0) return false;
    for (int64_t k = 0; k + 1 < n_max; ++k)
      if (floor_mod(alpha[k] - qd * alpha[k + 1], N) != 0) return false;
    return true;
  };

  // Exhaustive scan of (Z/N)^{n_max} when affordable; otherwise the recursion
  // alpha_k = q^d alpha_{k+1} pins everything to the top coordinate, which is
  // scanned alone.  Both paths re-check admissibility element by element.
  double full = 1;
  for (int64_t k = 0; k < n_max; ++k) full *= static_cast<double>(N);
  if (full <= 2e6) {
    std::vector<int64_t> alpha(n_max, 0);
    for (;;) {
      if (admissible(alpha)) out.solutions.push_back(alpha);
      int64_t i = n_max - 1;
      while (i >= 0 && ++alpha[i] == N) alpha[i--] = 0;
      if (i < 0) break;
    }
  } else {
    for (int64_t top = 0; top < N; ++top) {
      std::vector<int64_t> alpha(n_max);
      alpha[n_max - 1] = top;
      for (int64_t k = n_max - 2; k >= 0; --k)
        alpha[k] = floor_mod(qd * alpha[k + 1], N);
      if (admissible(alpha)) out.solutions.push_back(alpha);
    }
    std::sort(out.solutions.begin(), out.solutions.end());
  }

  // Compare against the cyclic group generated by the canonical sequence.
  std::vector<std::vector<int64_t>> gen_group;
  for (int64_t m = 0; m < Nt; ++m) {
    std::vector<int64_t> alpha(n_max);
    for (int64_t k = 0; k < n_max; ++k) alpha[k] = floor_mod(m * out.generator[k], N);
    gen_group.push_back(alpha);
  }
  std::sort(gen_group.begin(), gen_group.end());
  gen_group.erase(std::unique(gen_group.begin(), gen_group.end()), gen_group.end());
  out.cyclic_match = (out.solutions == gen_group);
  return out;
}

int64_t pi0_over_C(const KummerClass& K) {
  int64_t g = K.modulus;
  for (const auto& [H, v] : K.div.c) g = std::gcd(g, floor_mod(v, K.modulus));
  return g;
}

int64_t pi0_over_Kbreve(const KummerClass& K) {
  return std::gcd(pi0_over_C(K), floor_mod(K.pi_exp, K.modulus));
}

DivisorVector normalize_to_base(const DivisorVector& D, const HyperplaneClass& H0) {
  DivisorVector r = D;
  r.c[H0] -= D.degree();
  r.compact();
  return r;
}

}  // namespace sigma1
