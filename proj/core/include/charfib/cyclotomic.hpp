#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "charfib/fibers.hpp"

namespace charfib {

// Element of Q(zeta_p) in the power basis {1, zeta, ..., zeta^{p-2}}, with
// zeta^{p-1} rewritten as -(1 + zeta + ... + zeta^{p-2}).  For p = 2 the
// basis is {1} and zeta = -1.
class CycNumber {
 public:
  explicit CycNumber(std::int64_t p);
  static CycNumber from_rational(std::int64_t p, const mpq_class& c);
  static CycNumber from_coords(std::int64_t p, std::vector<mpq_class> coords);
  static CycNumber one(std::int64_t p);
  // zeta^e for any e, reduced into the power basis.
  static CycNumber root_power(std::int64_t p, std::int64_t e);

  std::int64_t p() const { return p_; }
  const std::vector<mpq_class>& coords() const { return coords_; }
  const mpq_class& coord(int t) const { return coords_[t]; }
  bool is_zero() const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const mpz_class& c);
  friend CycNumber operator*(const CycNumber& a, const mpq_class& c);

  bool operator==(const CycNumber&) const = default;

 private:
  void check_same_field(const CycNumber& o) const;

  std::int64_t p_;
  std::vector<mpq_class> coords_;  // p-1 rational coordinates
};

// One rational linear equation sum_k coeffs[k] * x_k = rhs.
struct LinearRow {
  std::vector<mpq_class> coeffs;
  mpq_class rhs;
};

struct RationalMatrixSystem {
  int unknowns = 0;
  std::vector<LinearRow> rows;

  void add_row(std::vector<mpq_class> coeffs, mpq_class rhs) {
    rows.push_back(LinearRow{std::move(coeffs), std::move(rhs)});
  }
};

// Exact Gaussian elimination with rational pivots.  Throws RankDeficientError
// when the rows do not determine all unknowns and InconsistentSystemError
// when they contradict each other.
std::vector<mpq_class> solve_exact(const RationalMatrixSystem& system);

// Elimination that separates the coefficient matrix from the right-hand
// side: rows are reduced once (sparse, recorded), then any number of
// right-hand sides replay the recorded reduction.  All structure-constant
// systems of one partition share their matrix, so this factors it once.
class IncrementalEliminator {
 public:
  // Sparse row: (column, value) sorted by column, values nonzero.
  using SparseRow = std::vector<std::pair<int, mpq_class>>;

  explicit IncrementalEliminator(int unknowns) : unknowns_(unknowns) {}

  void add_row(SparseRow row);
  int rank() const { return static_cast<int>(pivots_.size()); }
  int rows_added() const { return static_cast<int>(steps_.size()); }

  // rhs holds one value per added row, in insertion order.
  std::vector<mpq_class> solve(const std::vector<mpq_class>& rhs) const;

 private:
  struct Step {
    std::vector<std::pair<int, mpq_class>> elims;  // (pivot column, factor)
    int pivot_col = -1;                            // -1: row reduced to zero
  };

  int unknowns_;
  std::map<int, SparseRow> pivots_;
  std::vector<Step> steps_;
};

// q_k evaluated at (zeta^{u_1}, ..., zeta^{u_m}): the sum of zeta^{<b, u>}
// over the fiber's coordinate vectors b.  Independent of the generic
// polynomial evaluation path.
CycNumber eval_char_at_roots(const FiberPartition& part, int k,
                             const std::vector<int>& u);

// The linear equations in c_ij1..c_ijn obtained by evaluating
// q_i q_j = c_ij0 + sum_k c_ijk q_k at the root tuple zeta^u and equating
// power-basis coordinates; c_ij0 enters as a known.  Rows that are
// identically zero are dropped; up to p-1 rows survive per tuple.
std::vector<LinearRow> equation_rows(const FiberPartition& part, int i, int j,
                                     const std::vector<int>& u);

}  // namespace charfib
