#include "sigma1/cover_ring.hpp"

#include <algorithm>

#include "sigma1/residue_ring.hpp"

namespace sigma1 {

Rat::Rat(int64_t num, int64_t den) {
  if (den == 0) throw BadParams("Rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  n = num / g;
  d = den / g;
}

std::string Rat::to_string() const {
  if (d == 1) return std::to_string(n);
  return std::to_string(n) + "/" + std::to_string(d);
}

CoverRing CoverRing::make(const Params& par) {
  CoverRing R;
  R.par = par;
  R.F = Fq::make(par.p, par.f * (par.d + 1));
  R.Fq_small = Fq::make(par.p, par.f);
  R.embed = Fq::subfield_embedding(R.Fq_small, R.F);
  R.nvars = static_cast<int>(par.d);
  if (R.nvars > kMaxVars) throw BadParams("CoverRing::make: too many affine variables");

  ResidueRing ring1 = ResidueRing::make(par, 1);
  std::vector<ResidueRing::Elem> vertical(static_cast<size_t>(par.d + 1), ring1.zero());
  vertical.back() = ring1.one();
  R.P = mp_const(R.nvars, R.F.one());
  for (const HyperplaneClass& h : enumerate_hyperplanes(par, ring1)) {
    if (h.a == vertical) continue;
    MPoly form = mp_const(R.nvars, R.embed[h.a.back()]);
    for (int64_t j = 0; j < par.d; ++j) {
      MPoly term = mp_scale(R.F, mp_var(R.nvars, static_cast<int>(j)),
                            R.embed[h.a[static_cast<size_t>(j)]]);
      form = mp_add(R.F, form, term);
    }
    R.lclasses.push_back(h);
    R.lforms.push_back(form);
    R.P = mp_mul(R.F, R.P, form);
  }
  if (static_cast<int64_t>(R.lforms.size()) != par.Nt - 1)
    throw Error("CoverRing::make: unexpected number of unit forms");
  return R;
}

BaseFrac bf_make(const CoverRing& R, MPoly num, std::vector<int32_t> den) {
  if (den.empty()) den.assign(R.lforms.size(), 0);
  if (den.size() != R.lforms.size()) throw BadParams("bf_make: denominator vector length");
  for (size_t i = 0; i < den.size(); ++i) {
    if (den[i] < 0) {
      num = mp_mul(R.F, num, mp_pow(R.F, R.lforms[i], -den[i]));
      den[i] = 0;
    }
  }
  if (num.is_zero()) return BaseFrac{mp_zero(R.nvars), std::vector<int32_t>(R.lforms.size(), 0)};
  for (size_t i = 0; i < den.size(); ++i) {
    while (den[i] > 0) {
      auto q = mp_exact_div(R.F, num, R.lforms[i]);
      if (!q) break;
      num = *q;
      --den[i];
    }
  }
  return BaseFrac{std::move(num), std::move(den)};
}

BaseFrac bf_poly(const CoverRing& R, MPoly num) { return bf_make(R, std::move(num), {}); }

BaseFrac bf_const(const CoverRing& R, Fq::Elem c) { return bf_poly(R, mp_const(R.nvars, c)); }

bool bf_is_zero(const BaseFrac& a) { return a.num.is_zero(); }

bool bf_eq(const BaseFrac& a, const BaseFrac& b) { return a.num == b.num && a.den == b.den; }

BaseFrac bf_add(const CoverRing& R, const BaseFrac& a, const BaseFrac& b) {
  std::vector<int32_t> den(R.lforms.size(), 0);
  for (size_t i = 0; i < den.size(); ++i) den[i] = std::max(a.den[i], b.den[i]);
  MPoly na = a.num, nb = b.num;
  for (size_t i = 0; i < den.size(); ++i) {
    if (den[i] > a.den[i]) na = mp_mul(R.F, na, mp_pow(R.F, R.lforms[i], den[i] - a.den[i]));
    if (den[i] > b.den[i]) nb = mp_mul(R.F, nb, mp_pow(R.F, R.lforms[i], den[i] - b.den[i]));
  }
  return bf_make(R, mp_add(R.F, na, nb), std::move(den));
}

BaseFrac bf_neg(const CoverRing& R, const BaseFrac& a) {
  return BaseFrac{mp_neg(R.F, a.num), a.den};
}

BaseFrac bf_mul(const CoverRing& R, const BaseFrac& a, const BaseFrac& b) {
  std::vector<int32_t> den(R.lforms.size(), 0);
  for (size_t i = 0; i < den.size(); ++i) den[i] = a.den[i] + b.den[i];
  return bf_make(R, mp_mul(R.F, a.num, b.num), std::move(den));
}

std::string bf_to_string(const CoverRing& R, const BaseFrac& a) {
  std::vector<std::string> names;
  for (int j = 0; j < R.nvars; ++j) names.push_back("X" + std::to_string(j));
  std::string out = mp_to_string(R.F, a.num, names);
  std::string denom;
  for (size_t i = 0; i < a.den.size(); ++i) {
    if (a.den[i] == 0) continue;
    if (!denom.empty()) denom += "*";
    denom += "(" + mp_to_string(R.F, R.lforms[i], names) + ")";
    if (a.den[i] > 1) denom += "^" + std::to_string(a.den[i]);
  }
  if (denom.empty()) return out;
  return "(" + out + ")/(" + denom + ")";
}

CoverElement ce_zero(const CoverRing& R) {
  CoverElement f;
  f.comp.assign(static_cast<size_t>(R.Nt()), bf_poly(R, mp_zero(R.nvars)));
  return f;
}

CoverElement ce_one(const CoverRing& R) {
  CoverElement f = ce_zero(R);
  f.comp[0] = bf_const(R, R.F.one());
  return f;
}

CoverElement ce_t(const CoverRing& R) {
  CoverElement f = ce_zero(R);
  f.comp[1] = bf_const(R, R.F.one());
  return f;
}

CoverElement ce_monomial(const CoverRing& R, int64_t i, BaseFrac c) {
  if (i < 0 || i >= R.Nt()) throw BadParams("ce_monomial: graded index out of range");
  CoverElement f = ce_zero(R);
  f.comp[static_cast<size_t>(i)] = std::move(c);
  return f;
}

bool ce_is_zero(const CoverElement& f) {
  for (const auto& c : f.comp)
    if (!bf_is_zero(c)) return false;
  return true;
}

bool ce_eq(const CoverElement& a, const CoverElement& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t i = 0; i < a.comp.size(); ++i)
    if (!bf_eq(a.comp[i], b.comp[i])) return false;
  return true;
}

CoverElement ce_add(const CoverRing& R, const CoverElement& a, const CoverElement& b) {
  CoverElement f = ce_zero(R);
  for (size_t i = 0; i < f.comp.size(); ++i) f.comp[i] = bf_add(R, a.comp[i], b.comp[i]);
  return f;
}

CoverElement ce_neg(const CoverRing& R, const CoverElement& a) {
  CoverElement f = a;
  for (auto& c : f.comp) c = bf_neg(R, c);
  return f;
}

CoverElement ce_mul(const CoverRing& R, const CoverElement& a, const CoverElement& b) {
  const int64_t Nt = R.Nt();
  const BaseFrac Pfrac = bf_poly(R, R.P);
  CoverElement f = ce_zero(R);
  for (int64_t i = 0; i < Nt; ++i) {
    if (bf_is_zero(a.comp[static_cast<size_t>(i)])) continue;
    for (int64_t j = 0; j < Nt; ++j) {
      if (bf_is_zero(b.comp[static_cast<size_t>(j)])) continue;
      BaseFrac prod =
          bf_mul(R, a.comp[static_cast<size_t>(i)], b.comp[static_cast<size_t>(j)]);
      int64_t k = i + j;
      if (k >= Nt) {
        k -= Nt;
        prod = bf_mul(R, prod, Pfrac);
      }
      f.comp[static_cast<size_t>(k)] = bf_add(R, f.comp[static_cast<size_t>(k)], prod);
    }
  }
  return f;
}

CoverElement ce_pow(const CoverRing& R, const CoverElement& a, int64_t k) {
  if (k < 0) throw BadParams("ce_pow: negative exponent");
  CoverElement acc = ce_one(R), base = a;
  while (k > 0) {
    if (k & 1) acc = ce_mul(R, acc, base);
    if (k >>= 1; k > 0) base = ce_mul(R, base, base);
  }
  return acc;
}

CoverElement ce_twist(const CoverRing& R, const CoverElement& f, Fq::Elem zeta) {
  CoverElement g = f;
  Fq::Elem z = R.F.one();
  for (size_t i = 0; i < g.comp.size(); ++i) {
    if (i > 0) z = R.F.mul(z, zeta);
    g.comp[i].num = mp_scale(R.F, g.comp[i].num, z);
    if (g.comp[i].num.is_zero()) g.comp[i] = bf_poly(R, mp_zero(R.nvars));
  }
  return g;
}

MPoly bareiss_det(const Fq& F, std::vector<std::vector<MPoly>> M) {
  const size_t n = M.size();
  if (n == 0) throw BadParams("bareiss_det: empty matrix");
  const int nvars = M[0][0].nvars;
  int sign = 1;
  MPoly prev = mp_const(nvars, F.one());
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      size_t s = k + 1;
      while (s < n && M[s][k].is_zero()) ++s;
      if (s == n) return mp_zero(nvars);
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPoly top = mp_sub(F, mp_mul(F, M[k][k], M[i][j]), mp_mul(F, M[i][k], M[k][j]));
        if (k == 0) {
          M[i][j] = std::move(top);
        } else {
          auto q = mp_exact_div(F, top, prev);
          if (!q) throw Error("bareiss_det: exact division failed");
          M[i][j] = std::move(*q);
        }
      }
    }
    prev = M[k][k];
  }
  MPoly det = M[n - 1][n - 1];
  return sign < 0 ? mp_neg(F, det) : det;
}

BaseFrac ce_norm_det(const CoverRing& R, const CoverElement& f) {
  const int64_t Nt = R.Nt();
  if (ce_is_zero(f)) return bf_poly(R, mp_zero(R.nvars));
  std::vector<int32_t> D(R.lforms.size(), 0);
  for (const auto& c : f.comp)
    for (size_t i = 0; i < D.size(); ++i) D[i] = std::max(D[i], c.den[i]);
  // Cleared numerators: comp[j].num * prod(lforms^(D - den_j)) is a polynomial.
  std::vector<MPoly> cleared(static_cast<size_t>(Nt), mp_zero(R.nvars));
  for (int64_t j = 0; j < Nt; ++j) {
    const BaseFrac& c = f.comp[static_cast<size_t>(j)];
    if (bf_is_zero(c)) continue;
    MPoly num = c.num;
    for (size_t i = 0; i < D.size(); ++i)
      if (D[i] > c.den[i]) num = mp_mul(R.F, num, mp_pow(R.F, R.lforms[i], D[i] - c.den[i]));
    cleared[static_cast<size_t>(j)] = std::move(num);
  }
  std::vector<std::vector<MPoly>> M(
      static_cast<size_t>(Nt), std::vector<MPoly>(static_cast<size_t>(Nt), mp_zero(R.nvars)));
  for (int64_t r = 0; r < Nt; ++r) {
    for (int64_t c = 0; c < Nt; ++c) {
      MPoly e = cleared[static_cast<size_t>(floor_mod(r - c, Nt))];
      if (c > r && !e.is_zero()) e = mp_mul(R.F, e, R.P);
      M[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::move(e);
    }
  }
  MPoly det = bareiss_det(R.F, std::move(M));
  std::vector<int32_t> den(R.lforms.size(), 0);
  for (size_t i = 0; i < den.size(); ++i)
    den[i] = static_cast<int32_t>(Nt) * D[i];
  return bf_make(R, std::move(det), std::move(den));
}

BaseFrac ce_norm_conjugates(const CoverRing& R, const CoverElement& f) {
  CoverElement acc = ce_one(R);
  for (Fq::Elem zeta : R.F.roots_of_unity(R.Nt()))
    acc = ce_mul(R, acc, ce_twist(R, f, zeta));
  for (size_t i = 1; i < acc.comp.size(); ++i)
    if (!bf_is_zero(acc.comp[i]))
      throw Error("ce_norm_conjugates: product not concentrated in degree zero");
  return acc.comp[0];
}

namespace {

Valuation minimize(const std::vector<std::pair<int64_t, Rat>>& vals) {
  Valuation out;
  bool first = true;
  int64_t count = 0;
  for (const auto& [i, v] : vals) {
    if (first || v < out.v) {
      out.v = v;
      out.arg_comp = i;
      count = 1;
      first = false;
    } else if (v == out.v) {
      ++count;
    }
  }
  out.unique = count == 1;
  return out;
}

}  // namespace

Valuation ce_val_hyperplane(const CoverRing& R, const CoverElement& f, size_t idx) {
  if (idx >= R.lforms.size()) throw BadParams("ce_val_hyperplane: form index out of range");
  if (ce_is_zero(f)) throw ZeroElement("ce_val_hyperplane: zero element has no valuation");
  std::vector<std::pair<int64_t, Rat>> vals;
  for (size_t i = 0; i < f.comp.size(); ++i) {
    const BaseFrac& c = f.comp[i];
    if (bf_is_zero(c)) continue;
    int64_t m = mp_multiplicity(R.F, c.num, R.lforms[idx]);
    vals.emplace_back(static_cast<int64_t>(i),
                      Rat(static_cast<int64_t>(i), R.Nt()) + Rat::integer(m - c.den[idx]));
  }
  return minimize(vals);
}

Valuation ce_val_infinity(const CoverRing& R, const CoverElement& f) {
  if (ce_is_zero(f)) throw ZeroElement("ce_val_infinity: zero element has no valuation");
  std::vector<std::pair<int64_t, Rat>> vals;
  for (size_t i = 0; i < f.comp.size(); ++i) {
    const BaseFrac& c = f.comp[i];
    if (bf_is_zero(c)) continue;
    int64_t dens = 0;
    for (int32_t e : c.den) dens += e;
    vals.emplace_back(static_cast<int64_t>(i),
                      Rat(static_cast<int64_t>(i) * (1 - R.Nt()), R.Nt()) +
                          Rat::integer(-c.num.degree() + dens));
  }
  return minimize(vals);
}

CoverElement ce_random(const CoverRing& R, Rng& rng) {
  const int64_t Nt = R.Nt();
  CoverElement f = ce_zero(R);
  const size_t forced = static_cast<size_t>(rng.below(static_cast<uint64_t>(Nt)));
  for (size_t i = 0; i < static_cast<size_t>(Nt); ++i) {
    if (i != forced && rng.below(2) == 0) continue;
    MPoly num = mp_zero(R.nvars);
    const uint64_t terms = 1 + rng.below(3);
    for (uint64_t tck = 0; tck < terms; ++tck) {
      Mono m;
      for (int j = 0; j < R.nvars; ++j)
        m.e[static_cast<size_t>(j)] = static_cast<uint16_t>(rng.below(3));
      Fq::Elem c =
          static_cast<Fq::Elem>(1 + rng.below(static_cast<uint64_t>(R.F.size() - 1)));
      MPoly term;
      term.nvars = R.nvars;
      term.t.emplace_back(m, c);
      num = mp_add(R.F, num, term);
    }
    if (num.is_zero()) num = mp_const(R.nvars, R.F.one());
    std::vector<int32_t> den(R.lforms.size(), 0);
    if (rng.below(3) == 0)
      den[static_cast<size_t>(rng.below(static_cast<uint64_t>(R.lforms.size())))] = 1;
    f.comp[i] = bf_make(R, std::move(num), std::move(den));
  }
  return f;
}

CoverElement ce_random_monomial_unit(const CoverRing& R, Rng& rng) {
  const int64_t Nt = R.Nt();
  int64_t k = static_cast<int64_t>(rng.below(static_cast<uint64_t>(Nt)));
  std::vector<int32_t> den(R.lforms.size(), 0);
  bool nontrivial = k != 0;
  for (size_t i = 0; i < den.size(); ++i) {
    int32_t e = static_cast<int32_t>(rng.below(3)) - 1;
    den[i] = -e;  // positive e goes into the numerator
    if (e != 0) nontrivial = true;
  }
  if (!nontrivial) {
    den[static_cast<size_t>(rng.below(static_cast<uint64_t>(den.size())))] = -1;
  }
  Fq::Elem c = static_cast<Fq::Elem>(1 + rng.below(static_cast<uint64_t>(R.F.size() - 1)));
  return ce_monomial(R, k, bf_make(R, mp_const(R.nvars, c), std::move(den)));
}

}  // namespace sigma1
