#pragma once

#include <cstdint>
#include <string>

#include "mtbdd/errors.hpp"

namespace mtbdd::gsf {

/// Variable indices are 1-based throughout, matching file formats and the
/// CLI. Variable 1 is the most significant bit of a row index, so a truth
/// table row index is  b1*2^(n-1) + b2*2^(n-2) + ... + bn.
using VarIndex = unsigned;

inline std::size_t bit_shift(VarIndex i, unsigned n) { return static_cast<std::size_t>(n - i); }

inline bool index_bit(std::size_t row, VarIndex i, unsigned n) {
  return (row >> bit_shift(i, n)) & 1u;
}

inline std::size_t with_index_bit(std::size_t row, VarIndex i, unsigned n, bool value) {
  std::size_t mask = std::size_t{1} << bit_shift(i, n);
  return value ? (row | mask) : (row & ~mask);
}

/// One point of B^n. Thin wrapper over the row-index encoding above.
class Assignment {
 public:
  explicit Assignment(unsigned n, std::size_t row = 0) : n_(n), row_(row) {
    if (n > 20) throw StructureError("assignments support at most 20 variables");
    if (row >> n) throw StructureError("assignment row index out of range");
  }

  unsigned size() const { return n_; }
  std::size_t row() const { return row_; }

  bool bit(VarIndex i) const {
    check(i);
    return index_bit(row_, i, n_);
  }
  void set(VarIndex i, bool v) {
    check(i);
    row_ = with_index_bit(row_, i, n_, v);
  }

  Assignment with(VarIndex i, bool v) const {
    Assignment a = *this;
    a.set(i, v);
    return a;
  }

  /// "b1 b2 ... bn" as a bitstring, position 1 = variable 1.
  std::string to_string() const {
    std::string s(n_, '0');
    for (VarIndex i = 1; i <= n_; ++i)
      if (bit(i)) s[i - 1] = '1';
    return s;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  void check(VarIndex i) const {
    if (i < 1 || i > n_)
      throw StructureError("variable index " + std::to_string(i) + " out of range 1.." +
                           std::to_string(n_));
  }
  unsigned n_;
  std::size_t row_;
};

}  // namespace mtbdd::gsf
