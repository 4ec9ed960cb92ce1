#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "mtbdd/gsf/assignment.hpp"

namespace mtbdd::gsf {

/// Dense generalised switching function B^n -> T. Deliberately naive: this
/// is the ground-truth representation every diagram operation is checked
/// against. T is the terminal type (finite-magma element index, double, or
/// a term handle in tests).
template <class T>
class TruthTable {
 public:
  TruthTable(unsigned n, std::vector<T> values) : n_(n), values_(std::move(values)) {
    if (n_ < 1 || n_ > 20)
      throw StructureError("variable count " + std::to_string(n_) + " outside 1..20");
    if (values_.size() != (std::size_t{1} << n_))
      throw StructureError("truth table needs " + std::to_string(std::size_t{1} << n_) +
                           " rows, got " + std::to_string(values_.size()));
  }

  static TruthTable constant(unsigned n, const T& v) {
    return TruthTable(n, std::vector<T>(std::size_t{1} << n, v));
  }

  unsigned vars() const { return n_; }
  std::size_t rows() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](std::size_t row) const { return values_[row]; }
  const T& at(const Assignment& b) const {
    if (b.size() != n_) throw StructureError("assignment arity mismatch");
    return values_[b.row()];
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned n_;
  std::vector<T> values_;
};

/// A(i): replaces the value at every assignment by
/// f(..., b_i = 0, ...) * f(..., b_i = 1, ...). The arity stays n and
/// variable i becomes vacuous in the result.
template <class T, class Op>
TruthTable<T> abstract_var(const TruthTable<T>& f, VarIndex i, Op&& op) {
  const unsigned n = f.vars();
  if (i < 1 || i > n)
    throw StructureError("abstract_var: variable " + std::to_string(i) + " out of range 1.." +
                         std::to_string(n));
  std::vector<T> out;
  out.reserve(f.rows());
  for (std::size_t row = 0; row < f.rows(); ++row) {
    std::size_t lo = with_index_bit(row, i, n, false);
    std::size_t hi = with_index_bit(row, i, n, true);
    out.push_back(op(f[lo], f[hi]));
  }
  return TruthTable<T>(n, std::move(out));
}

struct AbstractabilityWitness {
  VarIndex i, j;
  Assignment at;
};

struct AbstractabilityResult {
  bool abstractable;
  std::optional<AbstractabilityWitness> witness;
};

/// f is abstractable when A(i)∘A(j)(f) = A(j)∘A(i)(f) for every pair of
/// variables. Scans pairs i<j in order and assignments in row order; the
/// witness is the first disagreement.
template <class T, class Op, class Eq = std::equal_to<T>>
AbstractabilityResult is_function_abstractable(const TruthTable<T>& f, Op&& op, Eq eq = Eq{}) {
  const unsigned n = f.vars();
  for (VarIndex i = 1; i <= n; ++i)
    for (VarIndex j = i + 1; j <= n; ++j) {
      TruthTable<T> ij = abstract_var(abstract_var(f, j, op), i, op);  // A(i)∘A(j)
      TruthTable<T> ji = abstract_var(abstract_var(f, i, op), j, op);  // A(j)∘A(i)
      for (std::size_t row = 0; row < f.rows(); ++row)
        if (!eq(ij[row], ji[row]))
          return {false, AbstractabilityWitness{i, j, Assignment(n, row)}};
    }
  return {true, std::nullopt};
}

/// Embeds a quadruple as a function: f depends only on (b1,b2) with values
/// a,b,c,d at (0,0),(0,1),(1,0),(1,1).
template <class T>
TruthTable<T> make_quadruple_function(unsigned n, const T& a, const T& b, const T& c,
                                      const T& d) {
  if (n < 2) throw StructureError("quadruple function needs at least 2 variables");
  std::vector<T> values;
  values.reserve(std::size_t{1} << n);
  for (std::size_t row = 0; row < (std::size_t{1} << n); ++row) {
    bool b1 = index_bit(row, 1, n), b2 = index_bit(row, 2, n);
    values.push_back(b1 ? (b2 ? d : c) : (b2 ? b : a));
  }
  return TruthTable<T>(n, std::move(values));
}

/// h(x,y) = f(base with position i := x, position j := y); the
/// two-variable restriction used to pull a violation down to GSF(2,M).
template <class T>
TruthTable<T> restrict_to_pair(const TruthTable<T>& f, VarIndex i, VarIndex j,
                               const Assignment& base) {
  if (base.size() != f.vars()) throw StructureError("restrict_to_pair: base arity mismatch");
  if (!(i < j)) throw StructureError("restrict_to_pair requires i < j");
  std::vector<T> values;
  values.reserve(4);
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y) {
      Assignment b = base.with(i, x != 0).with(j, y != 0);
      values.push_back(f.at(b));
    }
  return TruthTable<T>(2, std::move(values));
}

template <class T>
struct OrderOutcome {
  std::vector<VarIndex> order;  // first permutation achieving this result
  TruthTable<T> result;
};

/// Folds abstract_var over every permutation of `vars` (applied left to
/// right) and collects the distinct outcomes. Exactly one outcome means the
/// abstraction over this variable set is order-independent for f.
template <class T, class Op, class Eq = std::equal_to<T>>
std::vector<OrderOutcome<T>> abstract_all_orders(const TruthTable<T>& f,
                                                 std::vector<VarIndex> vars, Op&& op,
                                                 Eq eq = Eq{}) {
  if (vars.size() > 8)
    throw BudgetError("abstract_all_orders: permutation budget is 8 variables, got " +
                      std::to_string(vars.size()));
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw StructureError("abstract_all_orders: variable set has duplicates");
  auto table_eq = [&](const TruthTable<T>& x, const TruthTable<T>& y) {
    for (std::size_t row = 0; row < x.rows(); ++row)
      if (!eq(x[row], y[row])) return false;
    return true;
  };
  std::vector<OrderOutcome<T>> distinct;
  do {
    TruthTable<T> g = f;
    for (VarIndex v : vars) g = abstract_var(g, v, op);
    bool seen = false;
    for (const auto& o : distinct)
      if (table_eq(o.result, g)) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back({vars, std::move(g)});
  } while (std::next_permutation(vars.begin(), vars.end()));
  return distinct;
}

}  // namespace mtbdd::gsf
