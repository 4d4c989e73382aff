#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charfib/errors.hpp"
#include "charfib/fibers.hpp"

namespace charfib {

// Element of Z[x_1, ..., x_m] / (x_1^p - 1, ..., x_m^p - 1): a sparse map
// from exponent vectors (components in [0, p)) to nonzero integer
// coefficients.  The map's lexicographic key order makes iteration, printing
// and comparison deterministic.
class ResiduePoly {
 public:
  using Key = std::vector<int>;
  using Terms = std::map<Key, mpz_class>;

  ResiduePoly(std::int64_t p, int m) : p_(p), m_(m) {}
  static ResiduePoly constant(std::int64_t p, int m, const mpz_class& c);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient on the monomial with the given exponents; 0 when absent.
  mpz_class coeff(const Key& key) const;

  // Accumulates c onto the monomial, dropping the term if it cancels.
  void add_term(const Key& key, const mpz_class& c);

  ResiduePoly& operator+=(const ResiduePoly& o);
  ResiduePoly& operator-=(const ResiduePoly& o);
  friend ResiduePoly operator+(ResiduePoly a, const ResiduePoly& b) {
    return a += b;
  }
  friend ResiduePoly operator-(ResiduePoly a, const ResiduePoly& b) {
    return a -= b;
  }
  friend ResiduePoly operator*(const mpz_class& c, const ResiduePoly& a);

  // Product in the quotient ring: exponents add componentwise mod p.
  ResiduePoly mul_mod(const ResiduePoly& o) const;

  // Evaluation over any commutative ring providing +, *, and scaling by
  // mpz_class.  The caller passes the ring's 1.
  template <typename Ring>
  Ring eval(const std::vector<Ring>& point, const Ring& one) const {
    if (static_cast<int>(point.size()) != m_)
      throw ArityMismatchError(m_, static_cast<int>(point.size()));
    Ring acc = one * mpz_class(0);
    for (const auto& [key, c] : terms_) {
      Ring term = one;
      for (int i = 0; i < m_; ++i) {
        int e = key[i];
        Ring base = point[i];
        while (e > 0) {
          if (e & 1) term = term * base;
          e >>= 1;
          if (e > 0) base = base * base;
        }
      }
      acc = acc + term * c;
    }
    return acc;
  }

  // Monomials in ascending lexicographic exponent order,
  // e.g. "x1 + x1*x2^2 + x1^2 + x1^2*x2".
  std::string to_string() const;

  bool operator==(const ResiduePoly&) const = default;

 private:
  void check_same_ring(const ResiduePoly& o) const {
    if (p_ != o.p_ || m_ != o.m_) throw MixedRingsError();
  }
  void check_key(const Key& key) const;

  std::int64_t p_;
  int m_;
  Terms terms_;
};

ResiduePoly mul_mod(const ResiduePoly& a, const ResiduePoly& b);

// Characteristic polynomial of a fiber: one monomial per element, the
// element's coordinate vector as exponents, coefficient 1.
ResiduePoly char_poly(const Fiber& fiber, std::int64_t p, int m);

// q_k for k in 1..n; q_0 = 1 is the characteristic polynomial of {0}.
ResiduePoly char_poly(const FiberPartition& part, int k);

// All of q_0 .. q_n, indexed by k.
std::vector<ResiduePoly> char_polys(const FiberPartition& part);

// Product over i of (1 + x_i + ... + x_i^{p-1}): every monomial of the
// quotient ring once.
ResiduePoly full_monomial_sum(std::int64_t p, int m);

// Whether q_0 + q_1 + ... + q_n equals the full monomial sum.  True exactly
// when the fibers cover each nonzero element once (with the zero element
// contributing q_0); duplicated elements break it, relabeling does not.
bool sum_identity_check(const FiberPartition& part);

}  // namespace charfib
