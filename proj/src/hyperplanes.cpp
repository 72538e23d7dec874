/**
 * @file hyperplanes.cpp
 * @brief Projective class enumeration and the GL action.
 */
#include "sigma1/hyperplanes.hpp"

#include <algorithm>

namespace sigma1 {

HyperplaneClass canonicalize(const ResidueRing& R, const UnimodularVector& v) {
  if (v.level != R.level()) throw LevelMismatch("canonicalize: vector level != ring level");
  int64_t j = -1;
  for (size_t i = 0; i < v.a.size(); ++i) {
    if (R.is_unit(v.a[i])) {
      j = static_cast<int64_t>(i);
      break;
    }
  }
  if (j < 0) throw NotUnimodular("canonicalize: no unit coordinate");
  ResidueRing::Elem s = R.inv(v.a[j]);
  HyperplaneClass H;
  H.level = v.level;
  H.a.resize(v.a.size());
  for (size_t i = 0; i < v.a.size(); ++i) H.a[i] = R.mul(v.a[i], s);
  return H;
}

std::vector<HyperplaneClass> enumerate_hyperplanes(const Params& par, const ResidueRing& R) {
  // Canonical forms directly: leading 1 at position j, non-units before it,
  // anything after it.  Distinct tuples are distinct classes.
  std::vector<ResidueRing::Elem> nonunits;
  for (int64_t c = 0; c < R.size(); ++c)
    if (!R.is_unit(static_cast<ResidueRing::Elem>(c)))
      nonunits.push_back(static_cast<ResidueRing::Elem>(c));

  const int64_t dim = par.d + 1;
  std::vector<HyperplaneClass> out;
  std::vector<ResidueRing::Elem> work(dim);
  for (int64_t j = 0; j < dim; ++j) {
    // positions < j run over non-units, position j is 1, positions > j free
    int64_t pre = static_cast<int64_t>(nonunits.size());
    int64_t npre = ipow(pre, j);
    int64_t nfree = ipow(R.size(), dim - 1 - j);
    for (int64_t a = 0; a < npre; ++a) {
      int64_t t = a;
      for (int64_t i = 0; i < j; ++i) {
        work[i] = nonunits[t % pre];
        t /= pre;
      }
      work[j] = R.one();
      for (int64_t b = 0; b < nfree; ++b) {
        int64_t u = b;
        for (int64_t i = j + 1; i < dim; ++i) {
          work[i] = static_cast<ResidueRing::Elem>(u % R.size());
          u /= R.size();
        }
        out.push_back(HyperplaneClass{R.level(), work});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t hyperplane_count(const Params& par, int64_t level) {
  if (level < 1) throw BadParams("hyperplane_count: level must be >= 1");
  return par.Nt * ipow(ipow(par.q, par.d), level - 1);
}

HyperplaneClass reduce_class(const ResidueRing& from, const ResidueRing& to,
                             const HyperplaneClass& H) {
  if (H.level != from.level()) throw LevelMismatch("reduce_class: class level != ring level");
  UnimodularVector v;
  v.level = to.level();
  v.a.resize(H.a.size());
  for (size_t i = 0; i < H.a.size(); ++i) v.a[i] = from.reduce_to(to, H.a[i]);
  return canonicalize(to, v);
}

std::vector<HyperplaneClass> fibers(const Params& par, const ResidueRing& from,
                                    const ResidueRing& to, const HyperplaneClass& H) {
  std::vector<HyperplaneClass> out;
  for (const auto& K : enumerate_hyperplanes(par, from))
    if (reduce_class(from, to, K) == H) out.push_back(K);
  return out;
}

ResidueRing::Elem gl_det(const ResidueRing& R, const GLMatrix& g) {
  // Laplace expansion along the first row of the index submatrix; dim <= 4.
  std::vector<int64_t> cols(g.dim);
  for (int64_t i = 0; i < g.dim; ++i) cols[i] = i;

  auto rec = [&](auto&& self, int64_t row, std::vector<int64_t>& cs) -> ResidueRing::Elem {
    if (cs.size() == 1) return g.at(row, cs[0]);
    ResidueRing::Elem acc = R.zero();
    for (size_t k = 0; k < cs.size(); ++k) {
      ResidueRing::Elem a = g.at(row, cs[k]);
      if (a == R.zero()) continue;
      std::vector<int64_t> sub;
      for (size_t i = 0; i < cs.size(); ++i)
        if (i != k) sub.push_back(cs[i]);
      ResidueRing::Elem minor = self(self, row + 1, sub);
      ResidueRing::Elem term = R.mul(a, minor);
      acc = (k % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

GLMatrix gl_inverse(const ResidueRing& R, const GLMatrix& g) {
  ResidueRing::Elem det = gl_det(R, g);
  if (!R.is_unit(det)) throw SingularMatrix("gl_inverse: determinant is not a unit");
  ResidueRing::Elem dinv = R.inv(det);

  GLMatrix inv;
  inv.level = g.level;
  inv.dim = g.dim;
  inv.m.assign(g.dim * g.dim, R.zero());
  // adjugate: inv[c][r] = (-1)^{r+c} * minor(r, c) / det
  for (int64_t r = 0; r < g.dim; ++r) {
    for (int64_t c = 0; c < g.dim; ++c) {
      GLMatrix sub;
      sub.level = g.level;
      sub.dim = g.dim - 1;
      for (int64_t i = 0; i < g.dim; ++i) {
        if (i == r) continue;
        for (int64_t j = 0; j < g.dim; ++j) {
          if (j == c) continue;
          sub.m.push_back(g.at(i, j));
        }
      }
      ResidueRing::Elem minor = (sub.dim == 0) ? R.one() : gl_det(R, sub);
      ResidueRing::Elem cof = ((r + c) % 2 == 0) ? minor : R.neg(minor);
      inv.at(c, r) = R.mul(cof, dinv);
    }
  }
  return inv;
}

HyperplaneClass gl_act(const ResidueRing& R, const GLMatrix& g, const HyperplaneClass& H) {
  if (g.level != R.level() || H.level != R.level())
    throw LevelMismatch("gl_act: levels disagree");
  GLMatrix gi = gl_inverse(R, g);
  UnimodularVector v;
  v.level = H.level;
  v.a.assign(H.a.size(), R.zero());
  for (int64_t c = 0; c < g.dim; ++c)
    for (int64_t r = 0; r < g.dim; ++r)
      v.a[c] = R.add(v.a[c], R.mul(H.a[r], gi.at(r, c)));
  return canonicalize(R, v);
}

GLMatrix random_gl(const Params& par, const ResidueRing& R, Rng& rng) {
  GLMatrix g;
  g.level = R.level();
  g.dim = par.d + 1;
  g.m.resize(g.dim * g.dim);
  for (;;) {
    for (auto& x : g.m) x = static_cast<ResidueRing::Elem>(rng.below(R.size()));
    if (R.is_unit(gl_det(R, g))) return g;
  }
}

}  // namespace sigma1
