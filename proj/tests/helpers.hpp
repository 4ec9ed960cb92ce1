#pragma once

#include <random>
#include <vector>

#include "mtbdd/algebra/magma.hpp"
#include "mtbdd/gsf/truth_table.hpp"

namespace testutil {

using mtbdd::algebra::Element;
using mtbdd::algebra::FiniteMagma;

inline FiniteMagma random_magma(unsigned size, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, size - 1);
  std::vector<Element> table(static_cast<std::size_t>(size) * size);
  for (auto& cell : table) cell = d(rng);
  std::vector<std::string> labels;
  for (unsigned i = 0; i < size; ++i) labels.push_back("e" + std::to_string(i));
  return FiniteMagma("random", std::move(labels), std::move(table));
}

template <class T, class Gen>
mtbdd::gsf::TruthTable<T> random_table(unsigned n, Gen&& gen) {
  std::vector<T> values;
  values.reserve(std::size_t{1} << n);
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) values.push_back(gen());
  return mtbdd::gsf::TruthTable<T>(n, std::move(values));
}

}  // namespace testutil
