#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace charfib {

// Element of F_{p^m} as its coordinate vector over the basis {1, g, ...,
// g^{m-1}} where g is a root of the field modulus.  Coordinates in [0, p).
struct FieldElement {
  std::vector<int> v;

  bool is_zero() const {
    for (int c : v)
      if (c != 0) return false;
    return true;
  }
  auto operator<=>(const FieldElement&) const = default;
};

// Monic modulus x^m + a_{m-1} x^{m-1} + ... + a_0, stored low to high as
// [a_0, ..., a_{m-1}]; the leading coefficient is implied.
struct FieldParams {
  std::int64_t p = 0;
  int m = 0;
  std::vector<int> modulus;

  bool operator==(const FieldParams&) const = default;
};

inline constexpr std::int64_t kDefaultMaxFieldSize = std::int64_t{1} << 20;

bool is_prime(std::int64_t v);

// Componentwise arithmetic mod p.
FieldElement add(const FieldElement& a, const FieldElement& b, std::int64_t p);
FieldElement neg(const FieldElement& a, std::int64_t p);

// Compact rendering over the basis root 'a': "0", "1", "2+2a", "1+a+a^3".
std::string render_element(const FieldElement& e);

// F_{p^m} with a full power table of the primitive root g and its inverse
// discrete-log map.  Immutable once built; safe to share.
class FieldTable {
 public:
  const FieldParams& params() const { return params_; }
  std::int64_t p() const { return params_.p; }
  int m() const { return params_.m; }
  std::int64_t order() const { return q_; }
  std::int64_t group_order() const { return q_ - 1; }

  // g^h for any h; reduced mod q-1.
  const FieldElement& power(std::int64_t h) const;
  // h with g^h = e, in [0, q-1).  The zero element has no logarithm.
  std::int64_t dlog(const FieldElement& e) const;

  // Mixed-radix index sum_i v[i] * p^i, in [0, q).
  std::int64_t code(const FieldElement& e) const;
  // dlog by element code; -1 for the zero element.
  std::int64_t dlog_by_code(std::int64_t c) const { return dlog_[c]; }

  const FieldElement& zero() const { return zero_; }
  const FieldElement& one() const { return powers_[0]; }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;

 private:
  friend FieldTable build_field(const FieldParams&, std::int64_t);
  FieldTable() = default;

  FieldParams params_;
  std::int64_t q_ = 0;
  std::vector<FieldElement> powers_;  // g^0 .. g^{q-2}
  std::vector<std::int64_t> dlog_;    // by code; -1 marks zero
  FieldElement zero_;
};

// Validates the parameters, builds the power table and proves primitivity:
// the q-1 powers of g must be distinct, nonzero and close back to 1.
FieldTable build_field(const FieldParams& params,
                       std::int64_t max_field_size = kDefaultMaxFieldSize);

// Smallest primitive monic polynomial of degree m over F_p, candidates
// ordered lexicographically by (a_0, ..., a_{m-1}).
FieldParams find_primitive_poly(std::int64_t p, int m,
                                std::int64_t max_field_size = kDefaultMaxFieldSize);

FieldElement mul(const FieldTable& t, const FieldElement& a,
                 const FieldElement& b);

}  // namespace charfib
