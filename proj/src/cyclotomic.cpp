#include "sigma1/cyclotomic.hpp"

#include "sigma1/errors.hpp"

namespace sigma1 {

namespace {

using QPoly = std::vector<mpq_class>;

QPoly qp_trim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qp_trim(std::move(r));
}

/// Division with remainder over Q; divisor must be nonzero.
void qp_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.empty()) throw BadParams("qp_divmod: division by zero polynomial");
  rem = qp_trim(a);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class lead = b.back();
  while (rem.size() >= b.size()) {
    mpq_class c = rem.back() / lead;
    size_t shift = rem.size() - b.size();
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem = qp_trim(std::move(rem));
    if (rem.empty()) break;
  }
  quot = qp_trim(std::move(quot));
}

QPoly qp_div_exact(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  qp_divmod(a, b, q, r);
  if (!r.empty()) throw Error("qp_div_exact: division was not exact");
  return q;
}

}  // namespace

std::vector<mpq_class> cyclotomic_polynomial(int64_t m) {
  if (m < 1) throw BadParams("cyclotomic_polynomial: m must be positive");
  QPoly f(static_cast<size_t>(m) + 1, mpq_class(0));
  f[0] = -1;
  f[static_cast<size_t>(m)] = 1;  // X^m - 1
  for (int64_t d = 1; d < m; ++d)
    if (m % d == 0) f = qp_div_exact(f, cyclotomic_polynomial(d));
  return f;
}

CyclotomicField CyclotomicField::make(int64_t m) {
  CyclotomicField K;
  K.m_ = m;
  K.phi_ = cyclotomic_polynomial(m);
  return K;
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<mpq_class> poly) const {
  QPoly q, r;
  qp_divmod(poly, phi_, q, r);
  r.resize(static_cast<size_t>(degree()), mpq_class(0));
  return r;
}

CyclotomicField::Elem CyclotomicField::zero() const {
  return Elem(static_cast<size_t>(degree()), mpq_class(0));
}

CyclotomicField::Elem CyclotomicField::one() const { return from_rational(mpq_class(1)); }

CyclotomicField::Elem CyclotomicField::from_rational(const mpq_class& v) const {
  return reduce({v});
}

CyclotomicField::Elem CyclotomicField::zeta() const {
  return reduce({mpq_class(0), mpq_class(1)});
}

CyclotomicField::Elem CyclotomicField::zeta_power(int64_t k) const {
  int64_t e = ((k % m_) + m_) % m_;
  std::vector<mpq_class> poly(static_cast<size_t>(e) + 1, mpq_class(0));
  poly[static_cast<size_t>(e)] = 1;
  return reduce(std::move(poly));
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r) c = -c;
  return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  return reduce(qp_mul(a, b));
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw NonUnit("CyclotomicField::inv: zero has no inverse");
  // Extended Euclid on (phi, a): track s with s * a = r modulo phi.
  QPoly r0 = phi_, r1 = qp_trim(a);
  QPoly s0 = {}, s1 = {mpq_class(1)};
  while (true) {
    if (r1.empty()) throw Error("CyclotomicField::inv: modulus not coprime to element");
    if (r1.size() == 1) {
      Elem out = reduce(s1);
      const mpq_class c = r1[0];
      for (auto& x : out) x /= c;
      return out;
    }
    QPoly q, r2;
    qp_divmod(r0, r1, q, r2);
    QPoly s2 = qp_trim(s0);
    {
      QPoly qs = qp_mul(q, s1);
      s2.resize(std::max(s2.size(), qs.size()), mpq_class(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      s2 = qp_trim(std::move(s2));
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

CyclotomicField::Elem CyclotomicField::pow(const Elem& a, int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem acc = one(), base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

bool CyclotomicField::eq(const Elem& a, const Elem& b) const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string CyclotomicField::to_string(const Elem& a) const {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::string term = a[i].get_str();
    if (i > 0) {
      term += "*z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace sigma1
