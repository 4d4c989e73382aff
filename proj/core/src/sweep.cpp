#include "charfib/sweep.hpp"

#include <memory>

#include "charfib/errors.hpp"
#include "charfib/fibers.hpp"
#include "charfib/residue_poly.hpp"
#include "charfib/structure.hpp"

namespace charfib {

bool SweepResult::all_ok() const {
  for (const SweepItem& it : items) {
    if (!it.ok) return false;
  }
  return true;
}

std::string cross_check_case(const std::shared_ptr<const FieldTable>& field,
                             std::int64_t n) {
  FiberPartition part = partition(field, n);

  for (int k = 1; k <= n; ++k) {
    if (negation_fiber(part, negation_fiber(part, k)) != k) {
      return "negation is not an involution at fiber " + std::to_string(k);
    }
  }
  if (!sum_identity_check(part)) {
    return "fiber polynomials do not sum to the full monomial sum";
  }

  StructureTable direct = constants_direct(part);
  StructureTable cyc = constants_cyclotomic(part);
  if (!(direct == cyc)) return "direct and cyclotomic tables differ";
  StructureTable brute = constants_bruteforce(part);
  if (!(direct == brute)) return "direct and bruteforce tables differ";

  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (direct.at(i, j)[0] != classify_c0(part, i, j)) {
        return "constant term at (" + std::to_string(i) + "," +
               std::to_string(j) + ") defies classification";
      }
    }
  }

  VerificationReport rep = verify_algebra(direct);
  if (!rep.pass()) return "verify: " + rep.summary();
  return "ok";
}

SweepResult sweep_fields(const SweepConfig& config,
                         const std::function<void(const SweepItem&)>& progress) {
  SweepResult result;
  for (std::int64_t p = 2; p <= config.max_order; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t q = 1;
    for (int m = 1;; ++m) {
      if (q > config.max_order / p) break;
      q *= p;
      if (q - 1 < 2) continue;  // q = 2 admits no order >= 2
      auto field = std::make_shared<const FieldTable>(
          build_field(find_primitive_poly(p, m, config.max_field),
                      config.max_field));
      ++result.fields;
      for (std::int64_t n = 2; n <= q - 1; ++n) {
        if ((q - 1) % n != 0) continue;
        SweepItem item;
        item.p = p;
        item.m = m;
        item.q = q;
        item.n = n;
        item.s = (q - 1) / n;
        try {
          item.detail = cross_check_case(field, n);
          item.ok = item.detail == "ok";
        } catch (const Error& e) {
          item.ok = false;
          item.detail = e.what();
        }
        if (progress) progress(item);
        result.items.push_back(std::move(item));
      }
    }
  }
  return result;
}

}  // namespace charfib
