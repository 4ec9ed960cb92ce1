#pragma once

#include <iosfwd>
#include <string>

#include "mtbdd/algebra/magma.hpp"

namespace mtbdd::algebra {

// Text format:
//   # comment lines and blank lines are ignored
//   elements: a b c d
//   a a a a        <- row of the composition table for left operand 'a'
//   ...            <- one row per element, entries are labels
// Rows appear in header order. Unknown labels, ragged rows, and missing or
// extra rows are rejected with a ParseError carrying line/column.
FiniteMagma load_magma(std::istream& in, const std::string& display_name);
FiniteMagma load_magma_file(const std::string& path);

std::string magma_to_text(const FiniteMagma& m);

}  // namespace mtbdd::algebra
