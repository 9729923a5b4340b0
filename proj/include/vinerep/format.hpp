#pragma once

#include <string>

#include "vinerep/module.hpp"

namespace vinerep {

// Module file format: a JSON document with exactly the keys
//   field : {"type":"rational"} or {"type":"prime","p":<prime>}
//   times : list of exact rationals ("p/q" strings; integers allowed)
//   vines : list of {id, support:[lo,hi], birth:[...], death:[...]}
//   alpha, beta : one list per consecutive grid pair of sparse entries
//                 [row_vine_id, col_vine_id, scalar]
// Serialization is canonical: reduced fractions, vines sorted by id,
// sparse entries sorted by (row, col), fixed key order, 2-space indent.

// Throws ParseError on malformed documents or unknown keys, and
// ValidationError (embedding the validate_module report) when validate=true
// and the parsed module is invalid.
VineyardModuleRep parse_module(const std::string& text, bool validate = true);

std::string serialize_module(const VineyardModuleRep& m);

}  // namespace vinerep
