#pragma once

#include <string>

#include "charfib/structure.hpp"

namespace charfib {

// Serialized object keys, in order: p, m, n, s, modulus, entries.  Each entry
// is {"i": ..., "j": ..., "c": [c0..cn]} and entries are sorted by (i, j)
// with i <= j.  Output is stable byte for byte for equal tables.
std::string to_json(const StructureTable& table, int indent = 2);

// Parses the schema written by to_json.  Malformed input raises ParamError.
StructureTable from_json(const std::string& text);

// Header "i,j,c0,...,cn", one row per stored entry in (i, j) order.
std::string to_csv(const StructureTable& table);

// Human-readable listing: field parameters, then one line per entry.
std::string to_text(const StructureTable& table);

// The defining polynomial as a monic polynomial in x.
std::string render_modulus(const FieldParams& params);

}  // namespace charfib
