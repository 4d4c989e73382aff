#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <charfib/errors.hpp>
#include <charfib/fibers.hpp>
#include <charfib/field.hpp>
#include <charfib/structure.hpp>
#include <charfib/sweep.hpp>
#include <charfib/table_io.hpp>

namespace {

using namespace charfib;

std::int64_t max_field_cap() {
  const char* env = std::getenv("CHARFIB_MAX_FIELD");
  if (env == nullptr || *env == '\0') return kDefaultMaxFieldSize;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 4) {
    throw ParamError(std::string("CHARFIB_MAX_FIELD is not a size: ") + env);
  }
  return v;
}

std::vector<int> parse_modulus(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParamError("modulus entry is not an integer: '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::shared_ptr<const FieldTable> make_field(std::int64_t p, int m,
                                             const std::string& modulus) {
  std::int64_t cap = max_field_cap();
  FieldParams params = modulus.empty()
                           ? find_primitive_poly(p, m, cap)
                           : FieldParams{p, m, parse_modulus(modulus)};
  return std::make_shared<const FieldTable>(build_field(params, cap));
}

int cmd_field(std::int64_t p, int m, const std::string& modulus) {
  auto field = make_field(p, m, modulus);
  std::cout << "p = " << field->p() << ", m = " << field->m()
            << ", q = " << field->order() << "\n";
  std::cout << "modulus: " << render_modulus(field->params()) << "\n";
  std::cout << "0 = " << render_element(field->zero()) << "\n";
  for (std::int64_t h = 0; h < field->group_order(); ++h) {
    std::cout << "a^" << h << " = " << render_element(field->power(h)) << "\n";
  }
  return 0;
}

int cmd_fibers(std::int64_t p, int m, std::int64_t n,
               const std::string& modulus) {
  auto field = make_field(p, m, modulus);
  FiberPartition part = partition(field, n);
  std::cout << "p = " << p << ", m = " << m << ", q = " << field->order()
            << ", n = " << n << ", s = " << part.s << "\n";
  for (const Fiber& f : part.fibers) {
    std::cout << "A_" << f.index << " (exponents";
    for (std::int64_t h : f.exponents) std::cout << " " << h;
    std::cout << "):";
    for (const FieldElement& e : f.elements) {
      std::cout << " " << render_element(e);
    }
    std::cout << "\n";
  }
  return 0;
}

StructureTable build_table(const FiberPartition& part,
                           const std::string& method) {
  if (method == "direct") return constants_direct(part);
  if (method == "cyclotomic") return constants_cyclotomic(part);
  if (method == "bruteforce") return constants_bruteforce(part);
  throw ParamError("unknown method: " + method);
}

int cmd_constants(std::int64_t p, int m, std::int64_t n,
                  const std::string& modulus, const std::string& method,
                  const std::string& format, const std::string& out_path) {
  auto field = make_field(p, m, modulus);
  FiberPartition part = partition(field, n);
  StructureTable table = build_table(part, method);
  std::string out;
  if (format == "json") {
    out = to_json(table);
  } else if (format == "csv") {
    out = to_csv(table);
  } else if (format == "text") {
    out = to_text(table);
  } else {
    throw ParamError("unknown format: " + format);
  }
  if (out_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParamError("cannot open output file: " + out_path);
    f << out;
  }
  return 0;
}

int cmd_verify(std::int64_t p, int m, std::int64_t n,
               const std::string& modulus) {
  auto field = make_field(p, m, modulus);
  std::string verdict = cross_check_case(field, n);
  std::int64_t s = (field->group_order()) / n;
  if (verdict == "ok") {
    std::cout << "PASS p=" << p << " m=" << m << " q=" << field->order()
              << " n=" << n << " s=" << s
              << " (methods agree, algebra checks pass)\n";
    return 0;
  }
  std::cout << "FAIL p=" << p << " m=" << m << " q=" << field->order()
            << " n=" << n << " s=" << s << ": " << verdict << "\n";
  return 2;
}

int cmd_perron(std::int64_t max_p) {
  bool all_ok = true;
  for (std::int64_t p = 3; p <= max_p; p += 2) {
    if (!is_prime(p)) continue;
    PerronReport r = perron_check(p);
    std::cout << "p=" << p << " d=" << r.d << " same-class "
              << r.residues_from_residue_pairs << ","
              << r.nonresidues_from_nonresidue_pairs << " cross-class "
              << r.nonresidues_from_residue_pairs << ","
              << r.residues_from_nonresidue_pairs << " "
              << (r.pass ? "PASS" : "FAIL") << "\n";
    all_ok = all_ok && r.pass;
  }
  std::cout << (all_ok ? "PASS" : "FAIL")
            << " for every odd prime <= " << max_p << "\n";
  return all_ok ? 0 : 2;
}

int cmd_sweep(std::int64_t max_q) {
  SweepConfig cfg;
  cfg.max_order = max_q;
  cfg.max_field = max_field_cap();
  SweepResult res = sweep_fields(cfg, [](const SweepItem& it) {
    std::cout << "p=" << it.p << " m=" << it.m << " q=" << it.q
              << " n=" << it.n << " s=" << it.s << " "
              << (it.ok ? "ok" : "FAIL: " + it.detail) << "\n";
  });
  std::cout << (res.all_ok() ? "PASS" : "FAIL") << ": " << res.fields
            << " fields, " << res.items.size() << " cases\n";
  return res.all_ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure constants of multiplicative character fibers over "
               "finite fields"};
  app.require_subcommand(1);

  std::int64_t p = 0;
  int m = 1;
  std::int64_t n = 0;
  std::string modulus;
  std::string method = "direct";
  std::string format = "text";
  std::string out_path;
  std::int64_t max_p = 200;
  std::int64_t max_q = 512;

  auto add_field_opts = [&](CLI::App* sub, bool with_n) {
    sub->add_option("-p", p, "field characteristic (prime)")->required();
    sub->add_option("-m", m, "extension degree");
    if (with_n) {
      sub->add_option("-n", n, "character order (divides p^m - 1)")
          ->required();
    }
    sub->add_option("--modulus", modulus,
                    "comma-separated a_0,...,a_{m-1} of the monic defining "
                    "polynomial; found lexicographically when omitted");
  };

  CLI::App* c_field =
      app.add_subcommand("field", "print the powers of the generator");
  add_field_opts(c_field, false);

  CLI::App* c_fibers =
      app.add_subcommand("fibers", "print the character fibers");
  add_field_opts(c_fibers, true);

  CLI::App* c_constants =
      app.add_subcommand("constants", "compute the structure constant table");
  add_field_opts(c_constants, true);
  c_constants
      ->add_option("--method", method, "direct, cyclotomic or bruteforce")
      ->check(CLI::IsMember({"direct", "cyclotomic", "bruteforce"}));
  c_constants->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  c_constants->add_option("-o,--out", out_path, "write to file instead of stdout");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "cross-check all three methods and the algebra laws");
  add_field_opts(c_verify, true);

  CLI::App* c_perron = app.add_subcommand(
      "perron", "check quadratic-residue pair counts for odd primes");
  c_perron->add_option("--max-p", max_p, "largest prime checked");

  CLI::App* c_sweep = app.add_subcommand(
      "sweep", "run the full cross-check over all small fields");
  c_sweep->add_option("--max-q", max_q, "largest field order included");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_field->parsed()) return cmd_field(p, m, modulus);
    if (c_fibers->parsed()) return cmd_fibers(p, m, n, modulus);
    if (c_constants->parsed())
      return cmd_constants(p, m, n, modulus, method, format, out_path);
    if (c_verify->parsed()) return cmd_verify(p, m, n, modulus);
    if (c_perron->parsed()) return cmd_perron(max_p);
    if (c_sweep->parsed()) return cmd_sweep(max_q);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
