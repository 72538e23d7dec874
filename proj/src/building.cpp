/**
 * @file building.cpp
 * @brief Construction of the standard simplex presentations.
 */
#include "sigma1/building.hpp"

#include <sstream>

namespace sigma1 {

SimplexType SimplexType::make(const Params& par, std::vector<int64_t> blocks) {
  int64_t sum = 0;
  for (int64_t b : blocks) {
    if (b < 1) throw InvalidType("SimplexType: blocks must be positive");
    sum += b;
  }
  if (sum != par.d + 1) throw InvalidType("SimplexType: blocks must sum to d+1");
  SimplexType t;
  t.e = std::move(blocks);
  return t;
}

std::vector<int64_t> SimplexType::dvec() const {
  std::vector<int64_t> dv;
  int64_t acc = 0;
  for (int64_t b : e) {
    acc += b;
    dv.push_back(acc - 1);
  }
  return dv;
}

int64_t rep_count_formula(const Params& par, int64_t block_size) {
  return (ipow(par.q, block_size) - 1) * ipow(par.q, par.d + 1 - block_size) / (par.q - 1);
}

namespace {

/// All q^m tuples of residue-field codes, least-significant position first.
std::vector<std::vector<uint32_t>> field_tuples(int64_t q, int64_t m) {
  std::vector<std::vector<uint32_t>> out;
  int64_t total = ipow(q, m);
  for (int64_t t = 0; t < total; ++t) {
    std::vector<uint32_t> v(m);
    int64_t u = t;
    for (int64_t i = 0; i < m; ++i) {
      v[i] = static_cast<uint32_t>(u % q);
      u /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

void build_vertex(const Params& par, const ResidueRing& F, SimplexPresentation& S) {
  S.kind = SimplexKind::Vertex;
  // R_0 = canonical unimodular lifts of the level-1 classes: zeros, then a
  // leading 1 at position `chart`, then free residue entries.
  std::vector<SimplexRep> reps;
  std::vector<PPoly> polys;
  for (const auto& H : enumerate_hyperplanes(par, F)) {
    SimplexRep r;
    r.a = H.a;
    r.chart = 0;
    while (r.a[r.chart] != F.one()) ++r.chart;  // leading one of the canonical form
    // P_a = a_0 X_0 + ... + a_{d-1} X_{d-1} + a_d   (X_d plays the role of 1)
    PPoly P;
    for (int64_t j = 0; j <= par.d; ++j) {
      if (r.a[j] == 0) continue;
      PTerm t;
      t.coeff = r.a[j];
      t.mono.assign(par.d + 1, 0);
      if (j < par.d) t.mono[j] = 1;
      P.terms.push_back(std::move(t));
    }
    reps.push_back(std::move(r));
    polys.push_back(std::move(P));
  }
  S.reps.push_back(std::move(reps));
  S.ppolys.push_back(std::move(polys));
}

void build_maximal(const Params& par, const ResidueRing& F, SimplexPresentation& S) {
  S.kind = SimplexKind::Maximal;
  for (int64_t i = 0; i <= par.d; ++i) {
    std::vector<SimplexRep> reps;
    std::vector<PPoly> polys;
    for (const auto& tail : field_tuples(par.q, par.d)) {
      // entries: free codes at positions != i (the first i tail entries fill
      // positions 0..i-1, the rest positions i+1..d), the 1 at position i.
      SimplexRep r;
      r.chart = i;
      r.a.assign(par.d + 1, 0);
      int64_t src = 0;
      for (int64_t j = 0; j <= par.d; ++j) {
        if (j == i)
          r.a[j] = F.one();
        else
          r.a[j] = tail[src++];
      }
      // P_a = 1 + sum_{j=1}^{d} a_{i-j} * x_{i-1} x_{i-2} ... x_{i-j},
      // indices cyclic mod d+1.  The monomials are the "cyclic prefixes"
      // walking backwards from x_{i-1}.
      PPoly P;
      PTerm one;
      one.coeff = F.one();
      one.mono.assign(par.d + 1, 0);
      P.terms.push_back(std::move(one));
      std::vector<int64_t> mono(par.d + 1, 0);
      for (int64_t j = 1; j <= par.d; ++j) {
        int64_t idx = floor_mod(i - j, par.d + 1);
        mono[idx] += 1;
        if (r.a[idx] == 0) continue;
        PTerm t;
        t.coeff = r.a[idx];
        t.mono = mono;
        P.terms.push_back(std::move(t));
      }
      reps.push_back(std::move(r));
      polys.push_back(std::move(P));
    }
    S.reps.push_back(std::move(reps));
    S.ppolys.push_back(std::move(polys));
  }
}

}  // namespace

SimplexPresentation standard_simplex(const Params& par, const SimplexType& type) {
  SimplexPresentation S;
  S.par = par;
  S.type = type;
  S.dvec = type.dvec();
  for (int64_t b : type.e) S.rep_counts.push_back(rep_count_formula(par, b));

  const int64_t k = type.k();
  ResidueRing F = ResidueRing::make(par, 1);
  if (k == 0) {
    build_vertex(par, F, S);
  } else if (k == par.d) {
    build_maximal(par, F, S);
  } else if (k == 1 && type.e[0] == 1) {
    S.kind = SimplexKind::TypeOneD;  // relation X_0 X_d = pi; P_a not expanded
  } else {
    S.kind = SimplexKind::General;
  }

  // sanity: explicit lists must match the closed-form counts
  for (size_t i = 0; i < S.reps.size(); ++i)
    if (static_cast<int64_t>(S.reps[i].size()) != S.rep_counts[i])
      throw Error("standard_simplex: representative count mismatch");
  return S;
}

UnimodularVector materialize_rep(const SimplexPresentation& S, int64_t block, int64_t rep_index,
                                 const ResidueRing& R) {
  if (block < 0 || block >= static_cast<int64_t>(S.reps.size()))
    throw BadParams("materialize_rep: no explicit representatives for this block");
  const SimplexRep& r = S.reps[block][rep_index];
  UnimodularVector v;
  v.level = R.level();
  v.a.resize(r.a.size());
  for (size_t j = 0; j < r.a.size(); ++j) {
    ResidueRing::Elem lift = R.teichmuller(r.a[j]);
    if (S.kind == SimplexKind::Maximal && static_cast<int64_t>(j) > r.chart)
      lift = R.mul(R.pi(), lift);  // implicit pi on the entries after the 1
    v.a[j] = lift;
  }
  return v;
}

std::string ppoly_to_string(const ResidueRing& residue_field, const PPoly& P) {
  if (P.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : P.terms) {
    if (!first) os << "+";
    first = false;
    bool constant = true;
    for (int64_t e : t.mono)
      if (e != 0) constant = false;
    std::string c = residue_field.to_string(t.coeff);
    if (constant) {
      os << c;
    } else {
      if (c != "1") os << (c.find('+') != std::string::npos ? "(" + c + ")" : c) << "*";
      bool firstv = true;
      for (size_t j = 0; j < t.mono.size(); ++j) {
        for (int64_t rep = 0; rep < t.mono[j]; ++rep) {
          if (!firstv) os << "*";
          firstv = false;
          os << "x" << j;
        }
      }
    }
  }
  return os.str();
}

}  // namespace sigma1
