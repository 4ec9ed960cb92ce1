#include "mtbdd/gsf/search.hpp"

#include <cmath>

namespace mtbdd::gsf {

using algebra::Element;

SearchResult search_counterexample(const algebra::FiniteMagma& m, unsigned n) {
  if (n < 2) throw StructureError("counterexample search needs n >= 2");
  SearchResult result;
  result.quadruples_checked =
      static_cast<std::uint64_t>(m.size()) * m.size() * m.size() * m.size();

  algebra::Witness w;
  if (!algebra::check_medial(m, &w)) {
    result.medial_witness = w;
    result.counterexample =
        make_quadruple_function<Element>(n, w.operands[0], w.operands[1], w.operands[2],
                                         w.operands[3]);
    return result;
  }

  // Medial magma: no counterexample exists (every f commutes). Confirm by
  // exhaustive scan when the function space is small enough.
  const std::size_t rows = std::size_t{1} << n;
  double space = std::pow(static_cast<double>(m.size()), static_cast<double>(rows));
  if (space <= 1e6) {
    auto op = [&m](Element a, Element b) { return m.at(a, b); };
    std::vector<Element> digits(rows, 0);
    bool done = false;
    while (!done) {
      TruthTable<Element> f(n, digits);
      ++result.functions_checked;
      if (!is_function_abstractable(f, op).abstractable)
        throw Error("medial magma '" + m.name() + "' produced an order-dependent function");
      std::size_t i = rows;
      done = true;
      while (i > 0) {
        --i;
        if (++digits[i] < m.size()) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
    }
    result.exhaustive = true;
  }
  return result;
}

}  // namespace mtbdd::gsf
