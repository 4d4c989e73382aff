// Acceptance gate: nine criteria, one PASS/FAIL line each, exit 0 only when
// every criterion passes.  Flags: --max-q N (sweep bound, default 512),
// --perturbations K (negative-control trials, default 20).

#include <charfib/cyclotomic.hpp>
#include <charfib/errors.hpp>
#include <charfib/fibers.hpp>
#include <charfib/residue_poly.hpp>
#include <charfib/structure.hpp>
#include <charfib/sweep.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace charfib;

namespace {

int criteria_failed = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(int id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " — "
            << detail << "\n";
  if (!pass) ++criteria_failed;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

using Row = std::vector<long long>;

struct Golden {
  int i;
  int j;
  Row c;
};

// One golden-table criterion: all three methods must reproduce the expected
// rows exactly, inside the one-second budget.
void golden_criterion(int id, FieldParams params, std::int64_t n,
                      const std::vector<Golden>& want,
                      const std::string& label) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  try {
    auto field = std::make_shared<const FieldTable>(build_field(params));
    FiberPartition part = partition(field, n);
    StructureTable tables[3] = {constants_direct(part),
                                constants_cyclotomic(part),
                                constants_bruteforce(part)};
    for (const StructureTable& t : tables) {
      if (!(t == tables[0])) {
        ok = false;
        why = "methods disagree";
      }
      for (const Golden& g : want) {
        if (t.at(g.i, g.j) != g.c) {
          ok = false;
          why = "entry (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                ") differs from the expected table (" + t.method + ")";
        }
      }
      if (t.entries.size() != static_cast<std::size_t>(n * (n + 1) / 2)) {
        ok = false;
        why = "table size mismatch";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  double dt = seconds_since(t0);
  if (ok && dt >= 1.0) {
    ok = false;
    why = "exceeded the one-second budget";
  }
  report(id, ok,
         label + (ok ? "" : ": " + why) + " (" + fmt_seconds(dt) + ")");
}

void criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  try {
    auto field =
        std::make_shared<const FieldTable>(build_field({3, 2, {2, 1}}));
    FiberPartition part = partition(field, 2);
    if (!(eval_char_at_roots(part, 1, {0, 0}) ==
          CycNumber::from_rational(3, 4)) ||
        !(eval_char_at_roots(part, 2, {0, 0}) ==
          CycNumber::from_rational(3, 4))) {
      ok = false;
      why = "evaluations at the all-ones point are not 4";
    }
    if (!(eval_char_at_roots(part, 1, {0, 1}) == CycNumber::one(3))) {
      ok = false;
      why = "first fiber does not evaluate to 1 at (1, zeta)";
    }
    if (!(eval_char_at_roots(part, 2, {0, 1}) ==
          CycNumber::from_rational(3, -2))) {
      ok = false;
      why = "second fiber does not evaluate to -2 at (1, zeta)";
    }
    RationalMatrixSystem sys;
    sys.unknowns = 2;
    for (const auto& u : {std::vector<int>{0, 0}, std::vector<int>{0, 1}}) {
      for (const LinearRow& row : equation_rows(part, 1, 1, u)) {
        sys.rows.push_back(row);
      }
    }
    std::vector<mpq_class> sol = solve_exact(sys);
    if (!(sol == std::vector<mpq_class>{1, 2})) {
      ok = false;
      why = "solved coefficients are not (1, 2)";
    }
    Row c11 = constants_cyclotomic(part).at(1, 1);
    if (c11 != Row{4, 1, 2}) {
      ok = false;
      why = "full solver disagrees with the worked system";
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  double dt = seconds_since(t0);
  if (ok && dt >= 1.0) {
    ok = false;
    why = "exceeded the one-second budget";
  }
  report(4, ok,
         std::string("root-of-unity evaluations and the solved 2x2 system") +
             (ok ? "" : ": " + why) + " (" + fmt_seconds(dt) + ")");
}

struct SweepOutcome {
  bool method_or_algebra_ok = true;
  bool classification_ok = true;
  bool sum_identity_ok = true;
  std::string first_method_fail;
  std::string first_class_fail;
  std::string first_sum_fail;
  std::size_t cases = 0;
  int fields = 0;
  double seconds = 0;
};

SweepOutcome run_sweep(std::int64_t max_q) {
  SweepOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  SweepConfig cfg;
  cfg.max_order = max_q;
  std::int64_t last_q = 0;
  SweepResult res = sweep_fields(cfg, [&](const SweepItem& it) {
    if (it.q != last_q) {
      last_q = it.q;
      std::cerr << "sweep: q = " << it.q << "\r" << std::flush;
    }
    if (it.ok) return;
    std::string where = "p=" + std::to_string(it.p) +
                        " m=" + std::to_string(it.m) +
                        " n=" + std::to_string(it.n) + ": " + it.detail;
    bool classification = it.detail.find("defies classification") !=
                              std::string::npos ||
                          it.detail.find("constant_terms") != std::string::npos;
    bool sum = it.detail.find("monomial sum") != std::string::npos;
    if (classification) {
      if (out.classification_ok) out.first_class_fail = where;
      out.classification_ok = false;
    } else if (sum) {
      if (out.sum_identity_ok) out.first_sum_fail = where;
      out.sum_identity_ok = false;
    } else {
      if (out.method_or_algebra_ok) out.first_method_fail = where;
      out.method_or_algebra_ok = false;
    }
  });
  std::cerr << "                    \r" << std::flush;
  out.cases = res.items.size();
  out.fields = res.fields;
  out.seconds = seconds_since(t0);
  return out;
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  int primes = 0;
  try {
    for (std::int64_t p = 3; p < 200; p += 2) {
      if (!is_prime(p)) continue;
      ++primes;
      PerronReport r = perron_check(p);
      if (!r.pass) {
        ok = false;
        why = "counts differ at p = " + std::to_string(p);
        break;
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  report(7, ok,
         "quadratic-residue pair counts for all " + std::to_string(primes) +
             " odd primes below 200" + (ok ? "" : ": " + why) + " (" +
             fmt_seconds(seconds_since(t0)) + ")");
}

void criterion_9(int trials) {
  auto t0 = std::chrono::steady_clock::now();
  // candidate cases with fibers of at least two elements
  std::vector<std::pair<FieldParams, std::int64_t>> candidates;
  for (std::int64_t p = 2; p <= 128; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t q = 1;
    for (int m = 1;; ++m) {
      if (q > 128 / p) break;
      q *= p;
      if (q < 5) continue;
      FieldParams params = find_primitive_poly(p, m);
      for (std::int64_t n = 2; n <= (q - 1) / 2; ++n) {
        if ((q - 1) % n == 0) candidates.emplace_back(params, n);
      }
    }
  }
  std::mt19937 rng(20260818u);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  bool ok = true;
  std::string why;
  int done = 0;
  for (int trial = 0; trial < trials && ok; ++trial) {
    const auto& [params, n] = candidates[static_cast<std::size_t>(trial) %
                                         candidates.size()];
    auto field = std::make_shared<const FieldTable>(build_field(params));
    FiberPartition part = partition(field, n);
    // move one random element to another fiber
    auto pick_fiber = std::uniform_int_distribution<int>(0, static_cast<int>(n) - 1);
    int from = pick_fiber(rng);
    int to = pick_fiber(rng);
    while (to == from) to = pick_fiber(rng);
    Fiber& src = part.fibers[static_cast<std::size_t>(from)];
    Fiber& dst = part.fibers[static_cast<std::size_t>(to)];
    auto pick_elem = std::uniform_int_distribution<std::size_t>(
        0, src.elements.size() - 1);
    std::size_t at = pick_elem(rng);
    dst.elements.push_back(src.elements[at]);
    dst.exponents.push_back(src.exponents[at]);
    src.elements.erase(src.elements.begin() + static_cast<std::ptrdiff_t>(at));
    src.exponents.erase(src.exponents.begin() +
                        static_cast<std::ptrdiff_t>(at));

    bool detected = false;
    try {
      StructureTable t = constants_direct(part);
      detected = !verify_algebra(t).pass();
    } catch (const NonUniformFiberCoefficientsError&) {
      detected = true;
    } catch (const InternalInconsistency&) {
      detected = true;
    }
    if (!detected) {
      ok = false;
      why = "perturbation passed unnoticed at p=" + std::to_string(params.p) +
            " m=" + std::to_string(params.m) + " n=" + std::to_string(n);
    }
    ++done;
  }
  report(9, ok,
         std::to_string(done) +
             " random single-element fiber perturbations all detected" +
             (ok ? "" : ": " + why) + " (" + fmt_seconds(seconds_since(t0)) +
             ")");
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t max_q = 512;
  int trials = 20;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--max-q") == 0 && i + 1 < argc) {
      max_q = std::atoll(argv[++i]);
    } else if (std::strcmp(argv[i], "--perturbations") == 0 && i + 1 < argc) {
      trials = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0]
                << " [--max-q N] [--perturbations K]\n";
      return 1;
    }
  }

  golden_criterion(1, {3, 2, {2, 1}}, 2,
                   {{1, 1, {4, 1, 2}}, {1, 2, {0, 2, 2}}, {2, 2, {4, 2, 1}}},
                   "2x2 table over the nine element field");
  golden_criterion(2, {3, 2, {2, 1}}, 4,
                   {{1, 1, {2, 1, 0, 0, 0}},
                    {1, 2, {0, 0, 0, 1, 1}},
                    {1, 3, {0, 0, 1, 0, 1}},
                    {1, 4, {0, 0, 1, 1, 0}},
                    {2, 2, {2, 0, 1, 0, 0}},
                    {2, 3, {0, 1, 0, 0, 1}},
                    {2, 4, {0, 1, 0, 1, 0}},
                    {3, 3, {2, 0, 0, 1, 0}},
                    {3, 4, {0, 1, 1, 0, 0}},
                    {4, 4, {2, 0, 0, 0, 1}}},
                   "4x4 table over the nine element field");
  golden_criterion(3, {2, 4, {1, 1, 0, 0}}, 3,
                   {{1, 1, {5, 0, 2, 2}},
                    {1, 2, {0, 2, 2, 1}},
                    {1, 3, {0, 2, 1, 2}},
                    {2, 2, {5, 2, 0, 2}},
                    {2, 3, {0, 1, 2, 2}},
                    {3, 3, {5, 2, 2, 0}}},
                   "3x3 table over the sixteen element field");
  criterion_4();

  SweepOutcome sweep = run_sweep(max_q);
  std::string scale = std::to_string(sweep.fields) + " fields, " +
                      std::to_string(sweep.cases) + " cases up to q = " +
                      std::to_string(max_q);
  bool c5 = sweep.method_or_algebra_ok && sweep.seconds <= 600.0;
  std::string c5_why =
      !sweep.method_or_algebra_ok
          ? ": " + sweep.first_method_fail
          : (sweep.seconds > 600.0 ? ": exceeded the ten-minute budget" : "");
  report(5, c5,
         "three-way method agreement and algebra checks over " + scale +
             c5_why + " (" + fmt_seconds(sweep.seconds) + ")");
  report(6, sweep.classification_ok,
         "constant terms match the parity classification over the sweep" +
             (sweep.classification_ok ? ""
                                      : ": " + sweep.first_class_fail));
  criterion_7();
  report(8, sweep.sum_identity_ok,
         "fiber polynomials rebuild the full monomial sum over the sweep" +
             (sweep.sum_identity_ok ? "" : ": " + sweep.first_sum_fail));
  criterion_9(trials);

  std::cout << "ACCEPTANCE: " << (9 - criteria_failed) << "/9 criteria pass\n";
  return criteria_failed == 0 ? 0 : 2;
}
