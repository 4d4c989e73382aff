#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "charfib/field.hpp"

namespace charfib {

struct SweepConfig {
  std::int64_t max_order = 512;  // largest field order q included
  std::int64_t max_field = kDefaultMaxFieldSize;
};

// One (field, character order) case.
struct SweepItem {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
  bool ok = false;
  std::string detail;  // "ok" or the first failed check
};

struct SweepResult {
  std::vector<SweepItem> items;
  int fields = 0;
  bool all_ok() const;
};

// Full case check for one (field, n): negation involution, fiber polynomial
// sum identity, agreement of the three construction methods, constant-term
// classification, and verify_algebra.  Returns "ok" or the first failure.
std::string cross_check_case(const std::shared_ptr<const FieldTable>& field,
                             std::int64_t n);

// Runs every prime power q <= max_order with a nontrivial character (q = 2
// has none) and every order n >= 2 dividing q - 1.  For each case the three
// construction methods must agree, the algebra checks must pass, the fiber
// sum must rebuild the full monomial sum, negation must be an involution on
// fiber indices, and the stored constant terms must match the classified
// values.
SweepResult sweep_fields(
    const SweepConfig& config,
    const std::function<void(const SweepItem&)>& progress = {});

}  // namespace charfib
