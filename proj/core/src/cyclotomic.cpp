#include "charfib/cyclotomic.hpp"

#include <utility>

#include "charfib/errors.hpp"

namespace charfib {

CycNumber::CycNumber(std::int64_t p) : p_(p) {
  if (p < 2 || !is_prime(p)) throw NotPrimeError(p);
  coords_.resize(p - 1);
}

CycNumber CycNumber::from_rational(std::int64_t p, const mpq_class& c) {
  CycNumber r(p);
  r.coords_[0] = c;
  return r;
}

CycNumber CycNumber::from_coords(std::int64_t p, std::vector<mpq_class> coords) {
  CycNumber r(p);
  if (coords.size() != r.coords_.size())
    throw ParamError("expected p-1 power-basis coordinates");
  r.coords_ = std::move(coords);
  return r;
}

CycNumber CycNumber::one(std::int64_t p) {
  return from_rational(p, mpq_class(1));
}

CycNumber CycNumber::root_power(std::int64_t p, std::int64_t e) {
  CycNumber r(p);
  std::int64_t t = e % p;
  if (t < 0) t += p;
  if (t == p - 1) {
    for (auto& c : r.coords_) c = -1;
  } else {
    r.coords_[t] = 1;
  }
  return r;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

void CycNumber::check_same_field(const CycNumber& o) const {
  if (p_ != o.p_) throw MixedFieldsError();
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  check_same_field(o);
  for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] += o.coords_[t];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  check_same_field(o);
  for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] -= o.coords_[t];
  return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.check_same_field(b);
  const std::int64_t p = a.p_;
  const int d = static_cast<int>(p - 1);
  // Plain convolution up to degree 2p-4, then zeta^t -> zeta^{t mod p} and
  // zeta^{p-1} -> -(1 + ... + zeta^{p-2}).
  std::vector<mpq_class> conv(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.coords_[j] == 0) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  CycNumber r(p);
  for (int t = 2 * d - 2; t >= 0; --t) {
    if (conv[t] == 0) continue;
    int e = static_cast<int>(t % p);
    if (e == d) {
      for (int u = 0; u < d; ++u) r.coords_[u] -= conv[t];
    } else {
      r.coords_[e] += conv[t];
    }
  }
  return r;
}

CycNumber operator*(const CycNumber& a, const mpz_class& c) {
  CycNumber r = a;
  for (auto& v : r.coords_) v *= c;
  return r;
}

CycNumber operator*(const CycNumber& a, const mpq_class& c) {
  CycNumber r = a;
  for (auto& v : r.coords_) v *= c;
  return r;
}

namespace {

// a - f*b over sorted sparse rows.
IncrementalEliminator::SparseRow subtract_scaled(
    const IncrementalEliminator::SparseRow& a,
    const IncrementalEliminator::SparseRow& b, const mpq_class& f) {
  IncrementalEliminator::SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      mpq_class v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void IncrementalEliminator::add_row(SparseRow row) {
  Step step;
  while (!row.empty()) {
    const int lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      step.pivot_col = lead;
      pivots_.emplace(lead, std::move(row));
      break;
    }
    mpq_class factor = row.front().second / it->second.front().second;
    row = subtract_scaled(row, it->second, factor);
    step.elims.emplace_back(lead, std::move(factor));
  }
  steps_.push_back(std::move(step));
}

std::vector<mpq_class> IncrementalEliminator::solve(
    const std::vector<mpq_class>& rhs) const {
  if (rhs.size() != steps_.size())
    throw ParamError("one rhs value per added row required");
  // Replay the recorded reduction on the rhs.
  std::map<int, mpq_class> y;
  for (std::size_t r = 0; r < steps_.size(); ++r) {
    mpq_class v = rhs[r];
    for (const auto& [col, factor] : steps_[r].elims)
      v -= factor * y.at(col);
    if (steps_[r].pivot_col >= 0) {
      y.emplace(steps_[r].pivot_col, std::move(v));
    } else if (v != 0) {
      throw InconsistentSystemError(
          "dependent row with nonzero reduced right-hand side");
    }
  }
  if (rank() < unknowns_) throw RankDeficientError(rank(), unknowns_);
  // Back-substitute in descending pivot order.
  std::vector<mpq_class> x(unknowns_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const int col = it->first;
    mpq_class v = y.at(col);
    const SparseRow& row = it->second;
    for (std::size_t k = 1; k < row.size(); ++k)
      v -= row[k].second * x[row[k].first];
    x[col] = v / row.front().second;
  }
  return x;
}

std::vector<mpq_class> solve_exact(const RationalMatrixSystem& system) {
  if (system.unknowns < 1) throw ParamError("system needs unknowns");
  IncrementalEliminator elim(system.unknowns);
  std::vector<mpq_class> rhs;
  rhs.reserve(system.rows.size());
  for (const LinearRow& row : system.rows) {
    if (static_cast<int>(row.coeffs.size()) != system.unknowns)
      throw ParamError("row width does not match unknown count");
    IncrementalEliminator::SparseRow sparse;
    for (int k = 0; k < system.unknowns; ++k)
      if (row.coeffs[k] != 0) sparse.emplace_back(k, row.coeffs[k]);
    elim.add_row(std::move(sparse));
    rhs.push_back(row.rhs);
  }
  return elim.solve(rhs);
}

CycNumber eval_char_at_roots(const FiberPartition& part, int k,
                             const std::vector<int>& u) {
  const std::int64_t p = part.field->p();
  const int m = part.field->m();
  if (static_cast<int>(u.size()) != m)
    throw ArityMismatchError(m, static_cast<int>(u.size()));
  if (k < 1 || k > part.n)
    throw ParamError("fiber index out of range: " + std::to_string(k));
  std::vector<std::int64_t> counts(p, 0);
  for (const FieldElement& e : part.fibers[k - 1].elements) {
    std::int64_t r = 0;
    for (int i = 0; i < m; ++i) r += static_cast<std::int64_t>(e.v[i]) * u[i];
    ++counts[((r % p) + p) % p];
  }
  // zeta^{p-1} folds into the basis as -(1 + zeta + ... + zeta^{p-2}).
  std::vector<mpq_class> coords(p - 1);
  for (int t = 0; t + 1 < p; ++t) coords[t] = counts[t] - counts[p - 1];
  return CycNumber::from_coords(p, std::move(coords));
}

std::vector<LinearRow> equation_rows(const FiberPartition& part, int i, int j,
                                     const std::vector<int>& u) {
  const std::int64_t p = part.field->p();
  const int n = static_cast<int>(part.n);
  std::vector<CycNumber> evals;
  evals.reserve(n);
  for (int k = 1; k <= n; ++k) evals.push_back(eval_char_at_roots(part, k, u));
  CycNumber rhs = evals[i - 1] * evals[j - 1];
  // The constant term is known from the negation structure, not solved for.
  mpz_class c0 = negation_fiber(part, i) == j ? part.s : 0;
  rhs -= CycNumber::from_rational(p, mpq_class(c0));

  std::vector<LinearRow> rows;
  for (int t = 0; t + 1 < p; ++t) {
    LinearRow row;
    row.coeffs.resize(n);
    bool nonzero = false;
    for (int k = 0; k < n; ++k) {
      row.coeffs[k] = evals[k].coord(t);
      nonzero = nonzero || row.coeffs[k] != 0;
    }
    row.rhs = rhs.coord(t);
    if (nonzero || row.rhs != 0) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace charfib
