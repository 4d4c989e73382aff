#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "charfib/field.hpp"

namespace charfib {

// One fiber of an order-n multiplicative character: the coset
// A_k = { g^h : h = k-1 (mod n) }, elements listed by increasing discrete log.
struct Fiber {
  int index = 0;  // 1-based
  std::vector<std::int64_t> exponents;
  std::vector<FieldElement> elements;
};

// The n fibers partitioning the nonzero elements; fiber k sits at
// fibers[k-1].  Each fiber holds s = (q-1)/n elements.
struct FiberPartition {
  std::shared_ptr<const FieldTable> field;
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::vector<Fiber> fibers;
};

FiberPartition partition(std::shared_ptr<const FieldTable> field,
                         std::int64_t n);

// Fiber index of a nonzero element under the character, from its discrete
// log; 0 for the zero element.
int fiber_of(const FiberPartition& part, const FieldElement& e);

// The unique j with -A_k = A_j, found by negating a representative.  j = k
// when s is even or p = 2; for odd s over odd p the negation lands in a
// different fiber.
int negation_fiber(const FiberPartition& part, int k);

// Ordered pairs (a1, a2) in A_i x A_j with a1 + a2 = target.  Constant as
// target ranges over one fiber.
std::int64_t pair_count(const FiberPartition& part, int i, int j,
                        const FieldElement& target);

}  // namespace charfib
