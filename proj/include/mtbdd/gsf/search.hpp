#pragma once

#include <cstdint>
#include <optional>

#include "mtbdd/algebra/magma.hpp"
#include "mtbdd/gsf/truth_table.hpp"

namespace mtbdd::gsf {

struct SearchResult {
  /// An order-dependent function when one exists (the quadruple embedding of
  /// the magma's first medial violation); empty when the magma is medial.
  std::optional<TruthTable<algebra::Element>> counterexample;
  std::optional<algebra::Witness> medial_witness;
  std::uint64_t quadruples_checked = 0;
  /// When the magma is medial and |M|^(2^n) fits the budget, every function
  /// in GSF(n,M) is additionally scanned to confirm abstractability.
  bool exhaustive = false;
  std::uint64_t functions_checked = 0;
};

/// Budget for the confirming scan: |M|^(2^n) <= 1e6 functions.
SearchResult search_counterexample(const algebra::FiniteMagma& m, unsigned n);

}  // namespace mtbdd::gsf
