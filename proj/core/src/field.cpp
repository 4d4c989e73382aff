#include "charfib/field.hpp"

#include <utility>

#include "charfib/errors.hpp"

namespace charfib {

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::int64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

FieldElement add(const FieldElement& a, const FieldElement& b, std::int64_t p) {
  if (a.v.size() != b.v.size()) throw MixedRingsError();
  FieldElement r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i)
    r.v[i] = static_cast<int>((r.v[i] + b.v[i]) % p);
  return r;
}

FieldElement neg(const FieldElement& a, std::int64_t p) {
  FieldElement r = a;
  for (int& c : r.v) c = static_cast<int>((p - c) % p);
  return r;
}

std::string render_element(const FieldElement& e) {
  std::string out;
  for (std::size_t i = 0; i < e.v.size(); ++i) {
    int c = e.v[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

// p^m, or -1 once the product passes the cap.
std::int64_t checked_pow(std::int64_t p, int m, std::int64_t cap) {
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > cap / p) return -1;
    q *= p;
  }
  return q;
}

void validate_params(const FieldParams& params, std::int64_t cap,
                     std::int64_t* q_out) {
  if (!is_prime(params.p)) throw NotPrimeError(params.p);
  if (params.m < 1)
    throw ParamError("extension degree must be at least 1, got " +
                     std::to_string(params.m));
  if (params.p == 2 && params.m == 1) throw BinaryDegreeOneError();
  std::int64_t q = checked_pow(params.p, params.m, cap);
  if (q < 0) throw FieldTooLargeError(params.p, params.m, cap);
  *q_out = q;
}

}  // namespace

const FieldElement& FieldTable::power(std::int64_t h) const {
  std::int64_t r = h % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return powers_[r];
}

std::int64_t FieldTable::dlog(const FieldElement& e) const {
  std::int64_t h = dlog_[code(e)];
  if (h < 0) throw ParamError("the zero element has no discrete logarithm");
  return h;
}

std::int64_t FieldTable::code(const FieldElement& e) const {
  if (static_cast<int>(e.v.size()) != params_.m)
    throw MixedRingsError();
  std::int64_t c = 0;
  for (int i = params_.m - 1; i >= 0; --i) c = c * params_.p + e.v[i];
  return c;
}

FieldElement FieldTable::add(const FieldElement& a, const FieldElement& b) const {
  return charfib::add(a, b, params_.p);
}

FieldElement FieldTable::neg(const FieldElement& a) const {
  return charfib::neg(a, params_.p);
}

FieldElement FieldTable::mul(const FieldElement& a, const FieldElement& b) const {
  if (a.is_zero() || b.is_zero()) return zero_;
  return power(dlog(a) + dlog(b));
}

FieldElement mul(const FieldTable& t, const FieldElement& a,
                 const FieldElement& b) {
  return t.mul(a, b);
}

FieldTable build_field(const FieldParams& params, std::int64_t max_field_size) {
  std::int64_t q = 0;
  validate_params(params, max_field_size, &q);
  if (static_cast<int>(params.modulus.size()) != params.m)
    throw ParamError("modulus must list exactly m coefficients a_0..a_{m-1}");
  for (int a : params.modulus)
    if (a < 0 || a >= params.p)
      throw ParamError("modulus coefficients must lie in [0, p)");

  FieldTable t;
  t.params_ = params;
  t.q_ = q;
  t.zero_ = FieldElement{std::vector<int>(params.m, 0)};
  t.dlog_.assign(q, -1);
  t.powers_.reserve(q - 1);

  const std::int64_t p = params.p;
  const int m = params.m;
  auto fail = [&] {
    throw NotPrimitiveError("modulus is not primitive over F_" +
                            std::to_string(p));
  };

  // Iterate e <- g*e, reducing g^m = -(a_0 + a_1 g + ... + a_{m-1} g^{m-1}).
  // The modulus is primitive exactly when the q-1 powers are distinct,
  // nonzero, and the orbit closes back to 1.
  FieldElement e = t.zero_;
  e.v[0] = 1;
  for (std::int64_t h = 0; h < q - 1; ++h) {
    if (e.is_zero()) fail();
    std::int64_t c = t.code(e);
    if (t.dlog_[c] >= 0) fail();
    t.dlog_[c] = h;
    t.powers_.push_back(e);
    int carry = e.v[m - 1];
    for (int i = m - 1; i >= 1; --i)
      e.v[i] = static_cast<int>(
          ((e.v[i - 1] - static_cast<std::int64_t>(carry) * params.modulus[i]) %
               p +
           p) %
          p);
    e.v[0] = static_cast<int>(
        ((-static_cast<std::int64_t>(carry) * params.modulus[0]) % p + p) % p);
  }
  if (!(e == t.one())) fail();
  return t;
}

FieldParams find_primitive_poly(std::int64_t p, int m,
                                std::int64_t max_field_size) {
  std::int64_t q = 0;
  FieldParams params{p, m, std::vector<int>(m, 0)};
  validate_params(params, max_field_size, &q);

  // Odometer over (a_0, ..., a_{m-1}) with a_{m-1} fastest gives ascending
  // lexicographic order with a_0 most significant.  a_0 = 0 never yields a
  // unit root, so start at a_0 = 1.
  params.modulus[0] = 1;
  while (true) {
    if (params.modulus[0] != 0) {
      try {
        build_field(params, max_field_size);
        return params;
      } catch (const NotPrimitiveError&) {
      }
    }
    int i = m - 1;
    while (i >= 0 && params.modulus[i] == static_cast<int>(p - 1)) {
      params.modulus[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++params.modulus[i];
  }
  throw NotPrimitiveError("no primitive polynomial of degree " +
                          std::to_string(m) + " over F_" + std::to_string(p));
}

}  // namespace charfib
