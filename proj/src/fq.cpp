#include "sigma1/fq.hpp"

#include <algorithm>

#include "sigma1/errors.hpp"

namespace sigma1 {

namespace {

FpPoly decode_poly(int64_t p, int64_t m, Fq::Elem a) {
  FpPoly c(static_cast<size_t>(m), 0);
  int64_t v = a;
  for (int64_t i = 0; i < m; ++i) {
    c[static_cast<size_t>(i)] = v % p;
    v /= p;
  }
  return c;
}

Fq::Elem encode_poly(int64_t p, int64_t m, const FpPoly& c) {
  int64_t v = 0;
  for (int64_t i = m - 1; i >= 0; --i) {
    int64_t digit = i < static_cast<int64_t>(c.size()) ? c[static_cast<size_t>(i)] : 0;
    v = v * p + digit;
  }
  return static_cast<Fq::Elem>(v);
}

}  // namespace

Fq Fq::make(int64_t p, int64_t m) {
  if (!is_prime_small(p) || m < 1) throw BadParams("Fq::make: need prime p and m >= 1");
  Fq F;
  F.p_ = p;
  F.m_ = m;
  F.size_ = ipow(p, m);
  if (F.size_ > (int64_t{1} << 20))
    throw BadParams("Fq::make: field too large for dense element codes");
  F.h_ = find_irreducible(p, m);
  return F;
}

Fq::Elem Fq::add(Elem a, Elem b) const {
  FpPoly ca = decode_poly(p_, m_, a), cb = decode_poly(p_, m_, b);
  for (int64_t i = 0; i < m_; ++i)
    ca[static_cast<size_t>(i)] = (ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)]) % p_;
  return encode_poly(p_, m_, ca);
}

Fq::Elem Fq::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Fq::Elem Fq::neg(Elem a) const {
  FpPoly ca = decode_poly(p_, m_, a);
  for (auto& d : ca) d = (p_ - d) % p_;
  return encode_poly(p_, m_, ca);
}

Fq::Elem Fq::mul(Elem a, Elem b) const {
  FpPoly prod = fp_rem(fp_mul(decode_poly(p_, m_, a), decode_poly(p_, m_, b), p_), h_, p_);
  return encode_poly(p_, m_, prod);
}

Fq::Elem Fq::inv(Elem a) const {
  if (a == 0) throw NonUnit("Fq::inv: zero has no inverse");
  Elem r = pow(a, size_ - 2);
  if (mul(a, r) != one()) throw Error("Fq::inv: internal inversion failure");
  return r;
}

Fq::Elem Fq::pow(Elem a, int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem acc = one(), base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

Fq::Elem Fq::from_int(int64_t v) const {
  int64_t r = floor_mod(v, p_);
  return static_cast<Elem>(r);
}

Fq::Elem Fq::eval_fp_poly(const FpPoly& c, Elem x) const {
  Elem acc = zero();
  for (size_t i = c.size(); i-- > 0;) acc = add(mul(acc, x), from_int(c[i]));
  return acc;
}

std::string Fq::to_string(Elem a, const std::string& var) const {
  if (m_ == 1) return std::to_string(a);
  FpPoly c = decode_poly(p_, m_, a);
  std::string out;
  for (int64_t i = 0; i < m_; ++i) {
    int64_t d = c[static_cast<size_t>(i)];
    if (d == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(d);
    } else {
      if (d != 1) term = std::to_string(d) + "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::vector<Fq::Elem> Fq::subfield_embedding(const Fq& little, const Fq& big) {
  if (little.p_ != big.p_ || big.m_ % little.m_ != 0)
    throw BadParams("Fq::subfield_embedding: not a subfield");
  std::vector<Elem> table(static_cast<size_t>(little.size_), big.zero());
  if (little.m_ == big.m_) {
    for (int64_t i = 0; i < little.size_; ++i) table[static_cast<size_t>(i)] = static_cast<Elem>(i);
    return table;
  }
  Elem root = 0;
  bool found = false;
  for (int64_t r = 0; r < big.size_; ++r) {
    if (big.eval_fp_poly(little.h_, static_cast<Elem>(r)) == big.zero()) {
      root = static_cast<Elem>(r);
      found = true;
      break;
    }
  }
  if (!found) throw Error("Fq::subfield_embedding: defining polynomial has no root");
  for (int64_t a = 0; a < little.size_; ++a) {
    FpPoly c = decode_poly(little.p_, little.m_, static_cast<Elem>(a));
    table[static_cast<size_t>(a)] = big.eval_fp_poly(c, root);
  }
  return table;
}

std::vector<Fq::Elem> Fq::roots_of_unity(int64_t n) const {
  if (n < 1 || (size_ - 1) % n != 0)
    throw BadParams("Fq::roots_of_unity: order must divide the unit-group order");
  std::vector<Elem> out;
  for (int64_t a = 1; a < size_; ++a)
    if (pow(static_cast<Elem>(a), n) == one()) out.push_back(static_cast<Elem>(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sigma1
