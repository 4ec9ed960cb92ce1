#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtbdd/errors.hpp"

namespace mtbdd::algebra {

/// Index into a finite carrier set. Elements of a magma of size n are 0..n-1.
using Element = unsigned;

enum class Property : std::uint8_t {
  commutativity,
  associativity,
  medial,
  unit_existence,
};

std::string_view property_name(Property p);

/// Concrete violation of a law: the operand tuple together with the two
/// differing evaluations. For commutativity the operands are (x,y) with
/// lhs = x*y, rhs = y*x; for associativity (x,y,z) with lhs = (x*y)*z,
/// rhs = x*(y*z); for the medial law (p,q,r,s) with lhs = (p*q)*(r*s),
/// rhs = (p*r)*(q*s).
struct Witness {
  Property kind;
  std::vector<Element> operands;
  Element lhs;
  Element rhs;
};

/// A finite set with a total binary operation, given by its composition table.
/// Row = left operand, column = right operand. Immutable after construction.
class FiniteMagma {
 public:
  FiniteMagma(std::string name, std::vector<std::string> labels, std::vector<Element> table);

  const std::string& name() const { return name_; }
  unsigned size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const;
  std::optional<Element> element(std::string_view label) const;
  const std::vector<Element>& table() const { return table_; }

  /// table[a][b]; throws CarrierError when an index is outside the carrier.
  Element eval(Element a, Element b) const;

  /// Unchecked lookup for hot loops; caller guarantees a,b < size().
  Element at(Element a, Element b) const { return table_[a * size_ + b]; }

  bool same_table(const FiniteMagma& other) const {
    return size_ == other.size_ && table_ == other.table_;
  }

 private:
  std::string name_;
  unsigned size_;
  std::vector<std::string> labels_;
  std::vector<Element> table_;
};

/// Classification of one magma. A law flag is true iff no witness exists;
/// a false flag is always accompanied by the lexicographically first
/// violating tuple (row-major scan over operand tuples).
struct AlgebraReport {
  bool commutative = false;
  std::optional<Witness> commutative_witness;
  bool associative = false;
  std::optional<Witness> associative_witness;
  bool medial = false;
  std::optional<Witness> medial_witness;
  std::vector<Element> left_units;
  std::vector<Element> right_units;
  std::optional<Element> unit;  // two-sided
};

// Raw-table scans shared by FiniteMagma classifiers and the enumerator.
// `table` is row-major of length n*n; no validation is performed.
bool table_commutative(unsigned n, std::span<const Element> table, Witness* out = nullptr);
bool table_associative(unsigned n, std::span<const Element> table, Witness* out = nullptr);
bool table_medial(unsigned n, std::span<const Element> table, Witness* out = nullptr);
void table_units(unsigned n, std::span<const Element> table, std::vector<Element>& left,
                 std::vector<Element>& right, std::optional<Element>& two_sided);

bool check_commutative(const FiniteMagma& m, Witness* out = nullptr);
bool check_associative(const FiniteMagma& m, Witness* out = nullptr);
bool check_medial(const FiniteMagma& m, Witness* out = nullptr);

struct Units {
  std::vector<Element> left;
  std::vector<Element> right;
  std::optional<Element> two_sided;
};
Units find_units(const FiniteMagma& m);

AlgebraReport classify(const FiniteMagma& m);

/// Renders a witness as "(x,y): x*y = u, y*x = v" using the magma's labels.
std::string format_witness(const FiniteMagma& m, const Witness& w);

}  // namespace mtbdd::algebra
