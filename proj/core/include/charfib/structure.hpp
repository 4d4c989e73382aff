#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "charfib/cyclotomic.hpp"
#include "charfib/fibers.hpp"
#include "charfib/residue_poly.hpp"

namespace charfib {

// Structure constants of the fiber algebra: q_i q_j = c_ij0 + sum_k c_ijk q_k.
// Only i <= j is stored; lookups redirect through the symmetry c_ijk = c_jik.
struct StructureTable {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
  FieldParams modulus;
  std::string method;  // "direct", "cyclotomic" or "bruteforce"; not compared
  std::map<std::pair<int, int>, std::vector<long long>> entries;  // [c0..cn]

  const std::vector<long long>& at(int i, int j) const;
  bool operator==(const StructureTable& o) const;
};

// Expands q_i q_j in the residue ring and reads each c_ijk off the product:
// every monomial of q_k must carry the same coefficient, and the expansion
// must be exactly c_ij0 + sum_k c_ijk q_k.  Any violation means the input is
// not a character partition and raises NonUniformFiberCoefficientsError.
StructureTable constants_direct(const FiberPartition& part);

// Solves for the constants from evaluations at p-th root-of-unity tuples,
// c_ij0 entering as the classified constant term.  Tuples are consumed in
// lexicographic exponent order until the system reaches full rank.
StructureTable constants_cyclotomic(const FiberPartition& part);

// Counts ordered pairs summing to one representative per fiber.
StructureTable constants_bruteforce(const FiberPartition& part);

// The constant term forced by the negation structure: s when A_j = -A_i
// (diagonal for even s or p = 2), else 0.
long long classify_c0(const FiberPartition& part, int i, int j);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool pass() const;
  std::string summary() const;
};

// Four checks on a finished table: storage symmetry/completeness, row sums
// c_ij0 + s * sum_k c_ijk = s^2, the constant-term pattern, and
// associativity of the abstract algebra on basis {1, q_1, ..., q_n}.
VerificationReport verify_algebra(const StructureTable& table);

// Quadratic-residue counts for F_p: an element of a class is a sum of two
// elements of the same class in d_p - 1 ordered ways and of the other class
// in d_p ways, d_p = (p-1)/4 for p = 1 (mod 4), else (p+1)/4.
struct PerronReport {
  std::int64_t p = 0;
  long long d = 0;
  long long residues_from_residue_pairs = 0;        // expected d - 1
  long long nonresidues_from_residue_pairs = 0;     // expected d
  long long nonresidues_from_nonresidue_pairs = 0;  // expected d - 1
  long long residues_from_nonresidue_pairs = 0;     // expected d
  bool pass = false;
};
PerronReport perron_check(std::int64_t p);

// The n = 2 constant-term pattern over any odd-characteristic field, with
// s = (p^m - 1)/2 in place of the prime-field count.  The report carries the
// unasserted diagnostic value q_R(-1, ..., -1).
VerificationReport perron_quadratic_general(
    std::shared_ptr<const FieldTable> field);

}  // namespace charfib
