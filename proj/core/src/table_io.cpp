#include "charfib/table_io.hpp"

#include <json.hpp>

#include "charfib/errors.hpp"

namespace charfib {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t require_int(const ordered_json& j, const char* key,
                         std::int64_t lo, std::int64_t hi) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParamError(std::string("missing or non-integer field: ") + key);
  }
  auto v = j[key].get<std::int64_t>();
  if (v < lo || v > hi) {
    throw ParamError(std::string("field out of range: ") + key + " = " +
                     std::to_string(v));
  }
  return v;
}

}  // namespace

std::string to_json(const StructureTable& table, int indent) {
  ordered_json j;
  j["p"] = table.p;
  j["m"] = table.m;
  j["n"] = table.n;
  j["s"] = table.s;
  j["modulus"] = table.modulus.modulus;
  ordered_json entries = ordered_json::array();
  for (const auto& [ij, c] : table.entries) {
    ordered_json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["c"] = c;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(indent) + "\n";
}

StructureTable from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("invalid json: ") + e.what());
  }
  if (!j.is_object()) throw ParamError("top-level value is not an object");

  StructureTable t;
  t.p = require_int(j, "p", 2, std::int64_t{1} << 31);
  t.m = static_cast<int>(require_int(j, "m", 1, 64));
  t.n = require_int(j, "n", 1, std::int64_t{1} << 31);
  t.s = require_int(j, "s", 1, std::int64_t{1} << 31);
  if (!j.contains("modulus") || !j["modulus"].is_array() ||
      j["modulus"].size() != static_cast<std::size_t>(t.m)) {
    throw ParamError("modulus must be an array of m coefficients");
  }
  t.modulus.p = t.p;
  t.modulus.m = t.m;
  for (const auto& a : j["modulus"]) {
    if (!a.is_number_integer()) throw ParamError("non-integer modulus entry");
    auto v = a.get<std::int64_t>();
    if (v < 0 || v >= t.p) throw ParamError("modulus entry out of range");
    t.modulus.modulus.push_back(static_cast<int>(v));
  }

  // q = p^m must exist and satisfy n * s = q - 1.
  std::int64_t q = 1;
  for (int d = 0; d < t.m; ++d) {
    if (q > (std::int64_t{1} << 62) / t.p) throw ParamError("field too large");
    q *= t.p;
  }
  if (t.n * t.s != q - 1) {
    throw ParamError("n * s = " + std::to_string(t.n * t.s) +
                     " does not equal q - 1 = " + std::to_string(q - 1));
  }

  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw ParamError("missing entries array");
  }
  for (const auto& e : j["entries"]) {
    if (!e.is_object()) throw ParamError("entry is not an object");
    int i = static_cast<int>(require_int(e, "i", 1, t.n));
    int jj = static_cast<int>(require_int(e, "j", 1, t.n));
    if (i > jj) throw ParamError("entry stored with i > j");
    if (!e.contains("c") || !e["c"].is_array() ||
        e["c"].size() != static_cast<std::size_t>(t.n) + 1) {
      throw ParamError("entry " + std::to_string(i) + "," + std::to_string(jj) +
                       " must carry n + 1 values");
    }
    std::vector<long long> c;
    for (const auto& v : e["c"]) {
      if (!v.is_number_integer()) throw ParamError("non-integer table value");
      c.push_back(v.get<long long>());
    }
    if (!t.entries.emplace(std::make_pair(i, jj), std::move(c)).second) {
      throw ParamError("duplicate entry " + std::to_string(i) + "," +
                       std::to_string(jj));
    }
  }
  t.method = "json";
  return t;
}

std::string to_csv(const StructureTable& table) {
  std::string out = "i,j";
  for (std::int64_t k = 0; k <= table.n; ++k) {
    out += ",c" + std::to_string(k);
  }
  out += "\n";
  for (const auto& [ij, c] : table.entries) {
    out += std::to_string(ij.first) + "," + std::to_string(ij.second);
    for (long long v : c) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string render_modulus(const FieldParams& params) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  append(params.m == 1 ? "x" : "x^" + std::to_string(params.m));
  for (int d = params.m - 1; d >= 0; --d) {
    int a = params.modulus[static_cast<std::size_t>(d)];
    if (a == 0) continue;
    std::string var = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (d == 0) {
      append(std::to_string(a));
    } else if (a == 1) {
      append(var);
    } else {
      append(std::to_string(a) + "*" + var);
    }
  }
  return out;
}

std::string to_text(const StructureTable& table) {
  std::string out = "p = " + std::to_string(table.p) +
                    ", m = " + std::to_string(table.m);
  std::int64_t q = 1;
  for (int d = 0; d < table.m; ++d) q *= table.p;
  out += ", q = " + std::to_string(q);
  out += ", n = " + std::to_string(table.n);
  out += ", s = " + std::to_string(table.s) + "\n";
  out += "modulus: " + render_modulus(table.modulus) + "\n";
  for (const auto& [ij, c] : table.entries) {
    out += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
           "):";
    for (long long v : c) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

}  // namespace charfib
