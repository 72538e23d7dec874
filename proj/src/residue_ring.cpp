/**
 * @file residue_ring.cpp
 * @brief Implementation of the three truncation models.
 */
#include "sigma1/residue_ring.hpp"

#include <algorithm>
#include <sstream>

namespace sigma1 {

ResidueRing ResidueRing::make(const Params& par, int64_t level) {
  if (level < 1) throw BadParams("ring_make: level must be >= 1");
  ResidueRing R;
  R.p_ = par.p;
  R.f_ = par.f;
  R.e_ = par.e;
  R.q_ = par.q;
  R.n_ = level;
  if (par.e == 1) {
    R.model_ = (par.f == 1) ? RingModel::ZpN : RingModel::Galois;
  } else if (level <= par.e) {
    R.model_ = RingModel::Ramified;
  } else {
    throw UnsupportedRing("ring_make: 1 < e < n has no coefficient model");
  }
  switch (R.model_) {
    case RingModel::ZpN:
      R.pn_ = ipow(par.p, level);
      R.size_ = R.pn_;
      R.one_ = 1;
      R.pi_ = static_cast<Elem>(par.p % R.pn_);
      break;
    case RingModel::Galois:
      R.pn_ = ipow(par.p, level);
      R.size_ = ipow(R.pn_, par.f);
      R.h_ = find_irreducible(par.p, par.f);
      R.one_ = 1;
      R.pi_ = static_cast<Elem>(par.p % R.pn_);
      break;
    case RingModel::Ramified:
      R.pn_ = par.p;  // coefficients live in F_q, digits base p
      R.size_ = ipow(par.q, level);
      R.h_ = find_irreducible(par.p, par.f);
      R.one_ = 1;  // constant coefficient 1 in F_q
      R.pi_ = (level >= 2) ? static_cast<Elem>(par.q) : 0;
      break;
  }
  if (R.size_ > (int64_t{1} << 31))
    throw BadParams("ring_make: ring too large for element codes");
  return R;
}

std::vector<int64_t> ResidueRing::decode(Elem a) const {
  std::vector<int64_t> v;
  int64_t t = a;
  switch (model_) {
    case RingModel::ZpN:
      v = {t};
      break;
    case RingModel::Galois:
      v.resize(f_);
      for (int64_t i = 0; i < f_; ++i) {
        v[i] = t % pn_;
        t /= pn_;
      }
      break;
    case RingModel::Ramified:
      v.resize(n_);
      for (int64_t i = 0; i < n_; ++i) {
        v[i] = t % q_;
        t /= q_;
      }
      break;
  }
  return v;
}

ResidueRing::Elem ResidueRing::encode(const std::vector<int64_t>& v) const {
  int64_t code = 0;
  switch (model_) {
    case RingModel::ZpN:
      code = floor_mod(v[0], pn_);
      break;
    case RingModel::Galois:
      for (int64_t i = f_ - 1; i >= 0; --i) code = code * pn_ + floor_mod(v[i], pn_);
      break;
    case RingModel::Ramified:
      for (int64_t i = n_ - 1; i >= 0; --i) code = code * q_ + v[i];
      break;
  }
  return static_cast<Elem>(code);
}

// --- F_q digit arithmetic (codes base p over the fixed irreducible h_) -----

int64_t ResidueRing::fq_add(int64_t a, int64_t b) const {
  int64_t r = 0, mul = 1;
  for (int64_t i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return r;
}

int64_t ResidueRing::fq_neg(int64_t a) const {
  int64_t r = 0, mul = 1;
  for (int64_t i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * mul;
    a /= p_;
    mul *= p_;
  }
  return r;
}

int64_t ResidueRing::fq_mul(int64_t a, int64_t b) const {
  FpPoly pa, pb;
  for (int64_t i = 0; i < f_; ++i) {
    pa.push_back(a % p_);
    a /= p_;
    pb.push_back(b % p_);
    b /= p_;
  }
  FpPoly pr = fp_rem(fp_mul(pa, pb, p_), h_, p_);
  int64_t r = 0;
  for (int64_t i = static_cast<int64_t>(pr.size()) - 1; i >= 0; --i) r = r * p_ + pr[i];
  return r;
}

// --- ring operations -------------------------------------------------------

ResidueRing::Elem ResidueRing::add(Elem a, Elem b) const {
  auto va = decode(a), vb = decode(b);
  switch (model_) {
    case RingModel::ZpN:
      va[0] = (va[0] + vb[0]) % pn_;
      break;
    case RingModel::Galois:
      for (int64_t i = 0; i < f_; ++i) va[i] = (va[i] + vb[i]) % pn_;
      break;
    case RingModel::Ramified:
      for (int64_t i = 0; i < n_; ++i) va[i] = fq_add(va[i], vb[i]);
      break;
  }
  return encode(va);
}

ResidueRing::Elem ResidueRing::neg(Elem a) const {
  auto va = decode(a);
  switch (model_) {
    case RingModel::ZpN:
      va[0] = (pn_ - va[0]) % pn_;
      break;
    case RingModel::Galois:
      for (int64_t i = 0; i < f_; ++i) va[i] = (pn_ - va[i]) % pn_;
      break;
    case RingModel::Ramified:
      for (int64_t i = 0; i < n_; ++i) va[i] = fq_neg(va[i]);
      break;
  }
  return encode(va);
}

ResidueRing::Elem ResidueRing::sub(Elem a, Elem b) const { return add(a, neg(b)); }

ResidueRing::Elem ResidueRing::mul(Elem a, Elem b) const {
  auto va = decode(a), vb = decode(b);
  switch (model_) {
    case RingModel::ZpN:
      va[0] = (va[0] * vb[0]) % pn_;
      return encode(va);
    case RingModel::Galois: {
      // polynomial product, then remainder modulo the (monic) lift of h.
      std::vector<int64_t> prod(2 * f_ - 1, 0);
      for (int64_t i = 0; i < f_; ++i)
        for (int64_t j = 0; j < f_; ++j)
          prod[i + j] = (prod[i + j] + va[i] * vb[j]) % pn_;
      for (int64_t k = 2 * f_ - 2; k >= f_; --k) {
        int64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int64_t i = 0; i < f_; ++i)
          prod[k - f_ + i] = floor_mod(prod[k - f_ + i] - c * h_[i], pn_);
      }
      prod.resize(f_);
      return encode(prod);
    }
    case RingModel::Ramified: {
      std::vector<int64_t> prod(n_, 0);
      for (int64_t i = 0; i < n_; ++i)
        for (int64_t j = 0; i + j < n_; ++j)
          prod[i + j] = fq_add(prod[i + j], fq_mul(va[i], vb[j]));
      return encode(prod);
    }
  }
  return 0;  // unreachable
}

ResidueRing::Elem ResidueRing::pow(Elem a, int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = one_, b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool ResidueRing::is_unit(Elem a) const { return residue(a) != 0; }

ResidueRing::Elem ResidueRing::inv(Elem a) const {
  if (!is_unit(a)) throw NonUnit("inv: element is not a unit");
  // The unit group has order size * (q-1) / q, so a^{order-1} inverts a.
  Elem r = pow(a, unit_count() - 1);
  if (mul(r, a) != one_) throw Error("inv: internal check failed");
  return r;
}

ResidueRing::Elem ResidueRing::from_int(int64_t v) const {
  switch (model_) {
    case RingModel::ZpN:
      return encode({floor_mod(v, pn_)});
    case RingModel::Galois: {
      std::vector<int64_t> c(f_, 0);
      c[0] = floor_mod(v, pn_);
      return encode(c);
    }
    case RingModel::Ramified: {
      // p = (unit) * pi^e with e >= n, so the ring has characteristic p and
      // integers land in the prime field.
      std::vector<int64_t> c(n_, 0);
      c[0] = floor_mod(v, p_);
      return encode(c);
    }
  }
  return 0;  // unreachable
}

ResidueRing::Elem ResidueRing::reduce_to(const ResidueRing& target, Elem a) const {
  if (target.p_ != p_ || target.f_ != f_ || target.e_ != e_ || target.n_ > n_)
    throw LevelMismatch("reduce_to: incompatible target ring");
  auto v = decode(a);
  switch (model_) {
    case RingModel::ZpN:
      return target.encode({v[0] % target.pn_});
    case RingModel::Galois: {
      std::vector<int64_t> c(f_);
      for (int64_t i = 0; i < f_; ++i) c[i] = v[i] % target.pn_;
      return target.encode(c);
    }
    case RingModel::Ramified: {
      std::vector<int64_t> c(v.begin(), v.begin() + target.n_);
      return target.encode(c);
    }
  }
  return 0;  // unreachable
}

ResidueRing::Elem ResidueRing::residue(Elem a) const {
  switch (model_) {
    case RingModel::ZpN:
      return static_cast<Elem>(a % p_);
    case RingModel::Galois: {
      auto v = decode(a);
      int64_t code = 0;
      for (int64_t i = f_ - 1; i >= 0; --i) code = code * p_ + v[i] % p_;
      return static_cast<Elem>(code);
    }
    case RingModel::Ramified:
      return static_cast<Elem>(a % q_);
  }
  return 0;  // unreachable
}

ResidueRing::Elem ResidueRing::teichmuller(Elem residue_code) const {
  if (residue_code >= static_cast<Elem>(q_))
    throw BadParams("teichmuller: argument is not a residue-field code");
  if (model_ == RingModel::Ramified) {
    std::vector<int64_t> c(n_, 0);
    c[0] = residue_code;
    return encode(c);
  }
  // Lift digit-wise, then iterate the q-power map; it contracts the fiber of
  // the reduction onto the unique q-power-fixed lift.
  Elem x;
  if (model_ == RingModel::ZpN) {
    x = encode({static_cast<int64_t>(residue_code)});
  } else {
    std::vector<int64_t> c(f_);
    int64_t t = residue_code;
    for (int64_t i = 0; i < f_; ++i) {
      c[i] = t % p_;
      t /= p_;
    }
    x = encode(c);
  }
  for (int64_t it = 0; it <= n_ + 1; ++it) {
    Elem y = pow(x, q_);
    if (y == x) return x;
    x = y;
  }
  throw Error("teichmuller: q-power iteration did not stabilize");
}

std::vector<int64_t> ResidueRing::coeff_vector(Elem a) const {
  switch (model_) {
    case RingModel::ZpN:
    case RingModel::Galois:
      return decode(a);
    case RingModel::Ramified: {
      // flatten: pi-degree major, field digit minor
      auto v = decode(a);
      std::vector<int64_t> flat;
      for (int64_t i = 0; i < n_; ++i) {
        int64_t t = v[i];
        for (int64_t j = 0; j < f_; ++j) {
          flat.push_back(t % p_);
          t /= p_;
        }
      }
      return flat;
    }
  }
  return {};  // unreachable
}

namespace {

/// "c", "cV", "cV^k" with the coefficient suppressed when it is 1.
std::string term_str(int64_t c, const std::string& var, int64_t k) {
  std::ostringstream os;
  if (k == 0) {
    os << c;
  } else {
    if (c != 1) os << c;
    os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) s += "+" + terms[i];
  return s;
}

}  // namespace

std::string ResidueRing::to_string(Elem a) const {
  auto v = decode(a);
  switch (model_) {
    case RingModel::ZpN:
      return std::to_string(v[0]);
    case RingModel::Galois: {
      std::vector<std::string> terms;
      for (int64_t i = 0; i < f_; ++i)
        if (v[i] != 0) terms.push_back(term_str(v[i], "w", i));
      return join_terms(terms);
    }
    case RingModel::Ramified: {
      std::vector<std::string> terms;
      for (int64_t i = 0; i < n_; ++i) {
        if (v[i] == 0) continue;
        // the F_q coefficient, itself a polynomial in w
        std::vector<std::string> ft;
        int64_t t = v[i];
        for (int64_t j = 0; j < f_; ++j) {
          if (t % p_ != 0) ft.push_back(term_str(t % p_, "w", j));
          t /= p_;
        }
        std::string coeff = join_terms(ft);
        if (i == 0) {
          terms.push_back(coeff);
        } else {
          std::string s;
          if (coeff != "1") s = (ft.size() > 1) ? "(" + coeff + ")" : coeff;
          s += "pi";
          if (i >= 2) s += "^" + std::to_string(i);
          terms.push_back(s);
        }
      }
      return join_terms(terms);
    }
  }
  return {};  // unreachable
}

}  // namespace sigma1
