#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "hyperdisc/core.hpp"

namespace hyperdisc {

// Weighted-hypergraph text format (.whg):
//
//   # comments run from '#' to end of line; blank lines are ignored
//   n k
//   v_1 v_2 ... v_k weight
//
// Vertices are 1-indexed in files and strictly increasing per line
// (internally the library is 0-indexed).  Unlisted edges have weight 0.
// Listing an edge twice is an error.  All parse errors name the line.

Weighting parse_weighting(const std::filesystem::path& path);
Weighting parse_weighting_text(std::string_view text,
                               std::string_view name = "<input>");

// Writes the header plus every edge with a nonzero weight, in
// colexicographic order, using shortest round-trip formatting so that
// parsing the output reproduces the weights bit-exactly.
void write_weighting(const Weighting& w, std::ostream& out);
void write_weighting(const Weighting& w, const std::filesystem::path& path);

}  // namespace hyperdisc
