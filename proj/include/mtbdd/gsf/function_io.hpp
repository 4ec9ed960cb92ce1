#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mtbdd/algebra/magma.hpp"
#include "mtbdd/gsf/truth_table.hpp"

namespace mtbdd::gsf {

// Text format:
//   vars: 2
//   00 -> a
//   01 -> b
//   10 -> c
//   11 -> d
// Bitstring position 1 = variable 1. Every row must appear exactly once;
// values are labels (finite mode) or numbers (real mode).
struct FunctionFile {
  unsigned n = 0;
  std::vector<std::string> values;  // indexed by row
};

FunctionFile load_function(std::istream& in, const std::string& display_name);
FunctionFile load_function_file(const std::string& path);

/// Resolves values against a magma's labels; unknown labels are reported with
/// the file name (position information is lost after loading, so the row is
/// identified by its bitstring).
TruthTable<algebra::Element> resolve_labels(const FunctionFile& file,
                                            const algebra::FiniteMagma& m);

/// Parses values as doubles.
TruthTable<double> resolve_reals(const FunctionFile& file);

std::string function_to_text(const TruthTable<double>& f);
std::string function_to_text(const TruthTable<algebra::Element>& f, const algebra::FiniteMagma& m);

}  // namespace mtbdd::gsf
