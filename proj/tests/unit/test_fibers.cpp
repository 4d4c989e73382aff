#include <doctest.h>

#include <charfib/errors.hpp>
#include <charfib/fibers.hpp>

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

std::shared_ptr<const FieldTable> fp(std::int64_t p) {
  return std::make_shared<const FieldTable>(build_field(find_primitive_poly(p, 1)));
}

// Independent pair count: full double loop over the two fibers.
long long count_pairs_naive(const FiberPartition& part, int i, int j,
                            const FieldElement& target) {
  const auto& ai = part.fibers[static_cast<std::size_t>(i - 1)].elements;
  const auto& aj = part.fibers[static_cast<std::size_t>(j - 1)].elements;
  long long c = 0;
  for (const FieldElement& a : ai) {
    for (const FieldElement& b : aj) {
      if (add(a, b, part.field->p()) == target) ++c;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("quadratic partition of the nine element field") {
  FiberPartition part = partition(f9(), 2);
  CHECK(part.n == 2);
  CHECK(part.s == 4);
  REQUIRE(part.fibers.size() == 2);
  CHECK(part.fibers[0].index == 1);
  CHECK(part.fibers[0].exponents == std::vector<std::int64_t>{0, 2, 4, 6});
  CHECK(part.fibers[1].exponents == std::vector<std::int64_t>{1, 3, 5, 7});
  const FieldTable& f = *part.field;
  CHECK(part.fibers[0].elements ==
        std::vector<FieldElement>{f.power(0), f.power(2), f.power(4), f.power(6)});
}

TEST_CASE("quartic partition of the nine element field") {
  FiberPartition part = partition(f9(), 4);
  CHECK(part.s == 2);
  const FieldTable& f = *part.field;
  CHECK(part.fibers[0].elements ==
        std::vector<FieldElement>{f.power(0), f.power(4)});  // 1, 2
  CHECK(part.fibers[1].elements ==
        std::vector<FieldElement>{f.power(1), f.power(5)});  // a, 2a
  CHECK(part.fibers[2].elements ==
        std::vector<FieldElement>{f.power(2), f.power(6)});
  CHECK(part.fibers[3].elements ==
        std::vector<FieldElement>{f.power(3), f.power(7)});
}

TEST_CASE("cubic partition of the sixteen element field") {
  FiberPartition part = partition(f16(), 3);
  CHECK(part.s == 5);
  REQUIRE(part.fibers.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    const Fiber& fib = part.fibers[static_cast<std::size_t>(k - 1)];
    CHECK(fib.index == k);
    REQUIRE(fib.exponents.size() == 5);
    for (std::size_t t = 0; t < 5; ++t) {
      CHECK(fib.exponents[t] == (k - 1) + 3 * static_cast<std::int64_t>(t));
    }
  }
}

TEST_CASE("order must divide the group order") {
  CHECK_THROWS_AS(partition(f9(), 3), OrderDoesNotDivideError);
  CHECK_THROWS_AS(partition(f9(), 16), OrderDoesNotDivideError);
  CHECK_THROWS_AS(partition(f9(), 1), TrivialOrderError);
  CHECK_THROWS_AS(partition(f9(), 0), TrivialOrderError);
  CHECK_THROWS_AS(partition(f9(), -2), TrivialOrderError);
  CHECK_THROWS_AS(partition(nullptr, 2), ParamError);
}

TEST_CASE("fiber membership") {
  for (std::int64_t n : {2, 4, 8}) {
    FiberPartition part = partition(f9(), n);
    CHECK(fiber_of(part, part.field->zero()) == 0);
    for (const Fiber& fib : part.fibers) {
      for (const FieldElement& e : fib.elements) {
        CHECK(fiber_of(part, e) == fib.index);
      }
    }
  }
}

TEST_CASE("negation fiber pairing") {
  // s even: every fiber is its own negation
  FiberPartition p92 = partition(f9(), 2);
  CHECK(negation_fiber(p92, 1) == 1);
  CHECK(negation_fiber(p92, 2) == 2);
  // characteristic 2: negation is the identity map
  FiberPartition p163 = partition(f16(), 3);
  for (int k = 1; k <= 3; ++k) CHECK(negation_fiber(p163, k) == k);
  // p = 7, n = 2: s = 3 odd, -1 is a non-square, fibers swap
  FiberPartition p72 = partition(fp(7), 2);
  CHECK(negation_fiber(p72, 1) == 2);
  CHECK(negation_fiber(p72, 2) == 1);
  // p = 7, n = 3: -1 = g^3 has cube character 1, each fiber self-paired
  FiberPartition p73 = partition(fp(7), 3);
  for (int k = 1; k <= 3; ++k) CHECK(negation_fiber(p73, k) == k);
  // p = 7, n = 6: s = 1 odd, pairing k <-> k + 3
  FiberPartition p76 = partition(fp(7), 6);
  for (int k = 1; k <= 6; ++k) {
    CHECK(negation_fiber(p76, k) == ((k - 1 + 3) % 6) + 1);
  }
}

TEST_CASE("negation is an involution") {
  for (std::int64_t n : {2, 4, 8}) {
    FiberPartition part = partition(f9(), n);
    for (int k = 1; k <= n; ++k) {
      CHECK(negation_fiber(part, negation_fiber(part, k)) == k);
    }
  }
  for (std::int64_t n : {2, 3, 6}) {
    FiberPartition part = partition(fp(13), n);
    for (int k = 1; k <= n; ++k) {
      CHECK(negation_fiber(part, negation_fiber(part, k)) == k);
    }
  }
}

TEST_CASE("pair counts match the naive double loop") {
  for (std::int64_t n : {2, 4}) {
    FiberPartition part = partition(f9(), n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(pair_count(part, i, j, part.field->zero()) ==
              count_pairs_naive(part, i, j, part.field->zero()));
        for (std::int64_t h = 0; h < part.field->group_order(); ++h) {
          FieldElement u = part.field->power(h);
          CHECK(pair_count(part, i, j, u) == count_pairs_naive(part, i, j, u));
        }
      }
    }
  }
}

TEST_CASE("pair counts are constant on each target fiber") {
  FiberPartition part = partition(f16(), 5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i; j <= 5; ++j) {
      for (const Fiber& fib : part.fibers) {
        long long first = pair_count(part, i, j, fib.elements.front());
        for (const FieldElement& u : fib.elements) {
          CHECK(pair_count(part, i, j, u) == first);
        }
      }
    }
  }
}

TEST_CASE("ordered pairs count both orders across distinct fibers") {
  FiberPartition part = partition(fp(7), 2);
  for (const Fiber& fib : part.fibers) {
    for (const FieldElement& u : fib.elements) {
      CHECK(pair_count(part, 1, 2, u) == count_pairs_naive(part, 1, 2, u));
      CHECK(pair_count(part, 1, 2, u) == pair_count(part, 2, 1, u));
    }
  }
}
