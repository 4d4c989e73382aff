#include <doctest.h>

#include <charfib/errors.hpp>
#include <charfib/fibers.hpp>
#include <charfib/residue_poly.hpp>

#include <memory>
#include <vector>

using namespace charfib;

namespace {

std::shared_ptr<const FieldTable> f9() {
  return std::make_shared<const FieldTable>(build_field({3, 2, {2, 1}}));
}

std::shared_ptr<const FieldTable> f16() {
  return std::make_shared<const FieldTable>(build_field({2, 4, {1, 1, 0, 0}}));
}

}  // namespace

TEST_CASE("term accumulation and erasure") {
  ResiduePoly a(3, 2);
  CHECK(a.is_zero());
  a.add_term({1, 0}, 2);
  a.add_term({1, 0}, -2);
  CHECK(a.is_zero());
  a.add_term({1, 2}, 5);
  CHECK(a.coeff({1, 2}) == 5);
  CHECK(a.coeff({0, 0}) == 0);
  CHECK_THROWS_AS(a.add_term({1}, 1), ParamError);
  CHECK_THROWS_AS(a.add_term({3, 0}, 1), ParamError);
  CHECK_THROWS_AS(a.add_term({-1, 0}, 1), ParamError);
}

TEST_CASE("fiber polynomial of the quadratic residues") {
  FiberPartition part = partition(f9(), 2);
  ResiduePoly q1 = char_poly(part, 1);
  CHECK(q1.terms().size() == 4);
  CHECK(q1.coeff({1, 0}) == 1);  // 1 = g^0
  CHECK(q1.coeff({1, 2}) == 1);  // g^2
  CHECK(q1.coeff({2, 0}) == 1);  // g^4
  CHECK(q1.coeff({2, 1}) == 1);  // g^6
  CHECK(q1.to_string() == "x1 + x1*x2^2 + x1^2 + x1^2*x2");
  CHECK(char_poly(part, 0) == ResiduePoly::constant(3, 2, 1));
  CHECK_THROWS_AS(char_poly(part, 3), ParamError);
  CHECK_THROWS_AS(char_poly(part, -1), ParamError);
}

TEST_CASE("product reduces exponents componentwise") {
  ResiduePoly a(3, 1);
  a.add_term({2}, 1);
  ResiduePoly b(3, 1);
  b.add_term({2}, 1);
  ResiduePoly c = mul_mod(a, b);  // x^4 = x under x^3 = 1
  CHECK(c.terms().size() == 1);
  CHECK(c.coeff({1}) == 1);
}

TEST_CASE("square of the residue polynomial decomposes over fibers") {
  FiberPartition part = partition(f9(), 2);
  ResiduePoly q1 = char_poly(part, 1);
  ResiduePoly q2 = char_poly(part, 2);
  ResiduePoly prod = mul_mod(q1, q1);
  // q1 * q1 = 4 + q1 + 2 q2
  ResiduePoly want = ResiduePoly::constant(3, 2, 4) + q1 + mpz_class(2) * q2;
  CHECK(prod == want);
}

TEST_CASE("mixed rings are rejected") {
  ResiduePoly a(3, 2);
  ResiduePoly b(3, 1);
  ResiduePoly c(5, 2);
  a.add_term({1, 0}, 1);
  b.add_term({1}, 1);
  c.add_term({1, 0}, 1);
  CHECK_THROWS_AS(mul_mod(a, b), MixedRingsError);
  CHECK_THROWS_AS(mul_mod(a, c), MixedRingsError);
  CHECK_THROWS_AS(a += b, MixedRingsError);
}

TEST_CASE("evaluation over the integers") {
  FiberPartition part = partition(f16(), 3);
  ResiduePoly q1 = char_poly(part, 1);
  std::vector<mpz_class> ones(4, mpz_class(1));
  CHECK(q1.eval(ones, mpz_class(1)) == part.s);
  std::vector<mpz_class> zeros(4, mpz_class(0));
  // value at 0 counts the elements of A_1 with all-zero coordinates: none
  CHECK(q1.eval(zeros, mpz_class(1)) == 0);
  std::vector<mpz_class> wrong(3, mpz_class(1));
  CHECK_THROWS_AS((void)q1.eval(wrong, mpz_class(1)), ArityMismatchError);
}

TEST_CASE("rendering") {
  CHECK(ResiduePoly::constant(3, 2, 4).to_string() == "4");
  CHECK(ResiduePoly(3, 2).to_string() == "0");
  ResiduePoly a(3, 1);
  a.add_term({0}, 3);
  a.add_term({1}, -2);
  CHECK(a.to_string() == "3 - 2*x1");
  ResiduePoly b(5, 2);
  b.add_term({0, 3}, 1);
  b.add_term({2, 1}, 7);
  CHECK(b.to_string() == "x2^3 + 7*x1^2*x2");
}

TEST_CASE("full monomial sum") {
  ResiduePoly full = full_monomial_sum(3, 2);
  CHECK(full.terms().size() == 9);
  for (const auto& [key, coeff] : full.terms()) CHECK(coeff == 1);
  std::vector<mpz_class> ones(2, mpz_class(1));
  CHECK(full.eval(ones, mpz_class(1)) == 9);
}

TEST_CASE("fiber polynomials sum to the full monomial sum") {
  for (std::int64_t n : {2, 4, 8}) {
    CHECK(sum_identity_check(partition(f9(), n)));
  }
  for (std::int64_t n : {3, 5, 15}) {
    CHECK(sum_identity_check(partition(f16(), n)));
  }
}

TEST_CASE("sum identity fails on a mutilated partition") {
  FiberPartition part = partition(f9(), 4);
  // drop one element from fiber 2
  part.fibers[1].elements.pop_back();
  part.fibers[1].exponents.pop_back();
  CHECK_FALSE(sum_identity_check(part));
}

TEST_CASE("scalar and linear operations") {
  FiberPartition part = partition(f9(), 2);
  ResiduePoly q1 = char_poly(part, 1);
  ResiduePoly q2 = char_poly(part, 2);
  ResiduePoly sum = q1 + q2;
  CHECK(sum.terms().size() == 8);
  CHECK((sum - q2) == q1);
  ResiduePoly twice = mpz_class(2) * q1;
  CHECK(twice.coeff({1, 0}) == 2);
  CHECK((twice - q1) == q1);
}
