#include "charfib/residue_poly.hpp"

namespace charfib {

ResiduePoly ResiduePoly::constant(std::int64_t p, int m, const mpz_class& c) {
  ResiduePoly r(p, m);
  r.add_term(Key(m, 0), c);
  return r;
}

void ResiduePoly::check_key(const Key& key) const {
  if (static_cast<int>(key.size()) != m_)
    throw ArityMismatchError(m_, static_cast<int>(key.size()));
  for (int e : key)
    if (e < 0 || e >= p_)
      throw ParamError("exponent out of range [0, p)");
}

mpz_class ResiduePoly::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void ResiduePoly::add_term(const Key& key, const mpz_class& c) {
  if (c == 0) return;
  check_key(key);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ResiduePoly& ResiduePoly::operator+=(const ResiduePoly& o) {
  check_same_ring(o);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

ResiduePoly& ResiduePoly::operator-=(const ResiduePoly& o) {
  check_same_ring(o);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

ResiduePoly operator*(const mpz_class& c, const ResiduePoly& a) {
  ResiduePoly r(a.p_, a.m_);
  if (c == 0) return r;
  for (const auto& [key, v] : a.terms_) r.terms_.emplace(key, c * v);
  return r;
}

ResiduePoly ResiduePoly::mul_mod(const ResiduePoly& o) const {
  check_same_ring(o);
  ResiduePoly r(p_, m_);
  Key key(m_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      for (int i = 0; i < m_; ++i) {
        int e = ka[i] + kb[i];
        key[i] = e >= p_ ? e - static_cast<int>(p_) : e;
      }
      auto [it, inserted] = r.terms_.emplace(key, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ResiduePoly mul_mod(const ResiduePoly& a, const ResiduePoly& b) {
  return a.mul_mod(b);
}

std::string ResiduePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < m_; ++i) {
      if (key[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (key[i] > 1) mono += "^" + std::to_string(key[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

ResiduePoly char_poly(const Fiber& fiber, std::int64_t p, int m) {
  ResiduePoly r(p, m);
  for (const FieldElement& e : fiber.elements) r.add_term(e.v, 1);
  return r;
}

ResiduePoly char_poly(const FiberPartition& part, int k) {
  const std::int64_t p = part.field->p();
  const int m = part.field->m();
  if (k == 0) return ResiduePoly::constant(p, m, 1);
  if (k < 1 || k > part.n)
    throw ParamError("fiber index out of range: " + std::to_string(k));
  return char_poly(part.fibers[k - 1], p, m);
}

std::vector<ResiduePoly> char_polys(const FiberPartition& part) {
  std::vector<ResiduePoly> polys;
  polys.reserve(part.n + 1);
  for (int k = 0; k <= part.n; ++k) polys.push_back(char_poly(part, k));
  return polys;
}

ResiduePoly full_monomial_sum(std::int64_t p, int m) {
  ResiduePoly r = ResiduePoly::constant(p, m, 1);
  for (int i = 0; i < m; ++i) {
    ResiduePoly geo(p, m);
    ResiduePoly::Key key(m, 0);
    for (int e = 0; e < p; ++e) {
      key[i] = e;
      geo.add_term(key, 1);
    }
    r = r.mul_mod(geo);
  }
  return r;
}

bool sum_identity_check(const FiberPartition& part) {
  ResiduePoly sum = char_poly(part, 0);
  for (int k = 1; k <= part.n; ++k) sum += char_poly(part, k);
  return sum == full_monomial_sum(part.field->p(), part.field->m());
}

}  // namespace charfib
