#include "charfib/fibers.hpp"

#include <utility>

#include "charfib/errors.hpp"

namespace charfib {

FiberPartition partition(std::shared_ptr<const FieldTable> field,
                         std::int64_t n) {
  if (!field) throw ParamError("partition requires a field table");
  if (n < 2) throw TrivialOrderError(n);
  const std::int64_t group = field->group_order();
  if (group % n != 0) throw OrderDoesNotDivideError(n, group);

  FiberPartition part;
  part.n = n;
  part.s = group / n;
  part.fibers.resize(n);
  for (std::int64_t k = 1; k <= n; ++k) {
    Fiber& f = part.fibers[k - 1];
    f.index = static_cast<int>(k);
    f.exponents.reserve(part.s);
    f.elements.reserve(part.s);
    for (std::int64_t h = k - 1; h < group; h += n) {
      f.exponents.push_back(h);
      f.elements.push_back(field->power(h));
    }
  }
  part.field = std::move(field);
  return part;
}

int fiber_of(const FiberPartition& part, const FieldElement& e) {
  if (e.is_zero()) return 0;
  return static_cast<int>(part.field->dlog(e) % part.n) + 1;
}

int negation_fiber(const FiberPartition& part, int k) {
  if (k < 1 || k > part.n)
    throw ParamError("fiber index out of range: " + std::to_string(k));
  const FieldElement& rep = part.fibers[k - 1].elements.front();
  return fiber_of(part, part.field->neg(rep));
}

std::int64_t pair_count(const FiberPartition& part, int i, int j,
                        const FieldElement& target) {
  if (i < 1 || i > part.n || j < 1 || j > part.n)
    throw ParamError("fiber index out of range");
  const FieldTable& field = *part.field;
  std::int64_t count = 0;
  for (const FieldElement& a : part.fibers[i - 1].elements) {
    FieldElement b = field.add(target, field.neg(a));
    if (b.is_zero()) continue;
    if (field.dlog(b) % part.n == j - 1) ++count;
  }
  return count;
}

}  // namespace charfib
