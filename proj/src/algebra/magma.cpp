#include "mtbdd/algebra/magma.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace mtbdd::algebra {

std::string_view property_name(Property p) {
  switch (p) {
    case Property::commutativity: return "commutativity";
    case Property::associativity: return "associativity";
    case Property::medial: return "medial";
    case Property::unit_existence: return "unit-existence";
  }
  return "?";
}

FiniteMagma::FiniteMagma(std::string name, std::vector<std::string> labels,
                         std::vector<Element> table)
    : name_(std::move(name)),
      size_(static_cast<unsigned>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  if (size_ == 0) throw CarrierError("magma '" + name_ + "': empty carrier");
  if (table_.size() != static_cast<std::size_t>(size_) * size_)
    throw CarrierError("magma '" + name_ + "': table has " + std::to_string(table_.size()) +
                       " entries, expected " + std::to_string(size_ * size_));
  for (Element v : table_)
    if (v >= size_)
      throw CarrierError("magma '" + name_ + "': table entry " + std::to_string(v) +
                         " outside carrier of size " + std::to_string(size_));
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw CarrierError("magma '" + name_ + "': duplicate label '" + l + "'");
}

const std::string& FiniteMagma::label(Element e) const {
  if (e >= size_) throw CarrierError("element index " + std::to_string(e) + " out of range");
  return labels_[e];
}

std::optional<Element> FiniteMagma::element(std::string_view label) const {
  for (Element i = 0; i < size_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Element FiniteMagma::eval(Element a, Element b) const {
  if (a >= size_ || b >= size_)
    throw CarrierError("magma '" + name_ + "': eval(" + std::to_string(a) + "," +
                       std::to_string(b) + ") outside carrier of size " + std::to_string(size_));
  return table_[a * size_ + b];
}

bool table_commutative(unsigned n, std::span<const Element> t, Witness* out) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xy = t[x * n + y], yx = t[y * n + x];
      if (xy != yx) {
        if (out) *out = Witness{Property::commutativity, {x, y}, xy, yx};
        return false;
      }
    }
  return true;
}

bool table_associative(unsigned n, std::span<const Element> t, Witness* out) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xy = t[x * n + y];
      for (Element z = 0; z < n; ++z) {
        Element lhs = t[xy * n + z];
        Element rhs = t[x * n + t[y * n + z]];
        if (lhs != rhs) {
          if (out) *out = Witness{Property::associativity, {x, y, z}, lhs, rhs};
          return false;
        }
      }
    }
  return true;
}

bool table_medial(unsigned n, std::span<const Element> t, Witness* out) {
  // (p*q)*(r*s) = (p*r)*(q*s) for all quadruples, first violation row-major.
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) {
      Element pq = t[p * n + q];
      for (Element r = 0; r < n; ++r) {
        Element pr = t[p * n + r];
        for (Element s = 0; s < n; ++s) {
          Element lhs = t[pq * n + t[r * n + s]];
          Element rhs = t[pr * n + t[q * n + s]];
          if (lhs != rhs) {
            if (out) *out = Witness{Property::medial, {p, q, r, s}, lhs, rhs};
            return false;
          }
        }
      }
    }
  return true;
}

void table_units(unsigned n, std::span<const Element> t, std::vector<Element>& left,
                 std::vector<Element>& right, std::optional<Element>& two_sided) {
  left.clear();
  right.clear();
  two_sided.reset();
  for (Element e = 0; e < n; ++e) {
    bool is_left = true, is_right = true;
    for (Element a = 0; a < n; ++a) {
      if (t[e * n + a] != a) is_left = false;
      if (t[a * n + e] != a) is_right = false;
      if (!is_left && !is_right) break;
    }
    if (is_left) left.push_back(e);
    if (is_right) right.push_back(e);
  }
  std::vector<Element> both;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(both));
  if (!left.empty() && !right.empty()) {
    // A left unit composed with a right unit equals both, so the intersection
    // has exactly one element whenever both lists are nonempty.
    assert(both.size() == 1);
  }
  if (!both.empty()) two_sided = both.front();
}

bool check_commutative(const FiniteMagma& m, Witness* out) {
  return table_commutative(m.size(), m.table(), out);
}

bool check_associative(const FiniteMagma& m, Witness* out) {
  return table_associative(m.size(), m.table(), out);
}

bool check_medial(const FiniteMagma& m, Witness* out) {
  return table_medial(m.size(), m.table(), out);
}

Units find_units(const FiniteMagma& m) {
  Units u;
  table_units(m.size(), m.table(), u.left, u.right, u.two_sided);
  return u;
}

AlgebraReport classify(const FiniteMagma& m) {
  AlgebraReport r;
  Witness w;
  r.commutative = check_commutative(m, &w);
  if (!r.commutative) r.commutative_witness = w;
  r.associative = check_associative(m, &w);
  if (!r.associative) r.associative_witness = w;
  r.medial = check_medial(m, &w);
  if (!r.medial) r.medial_witness = w;
  Units u = find_units(m);
  r.left_units = std::move(u.left);
  r.right_units = std::move(u.right);
  r.unit = u.two_sided;
  return r;
}

std::string format_witness(const FiniteMagma& m, const Witness& w) {
  auto lbl = [&](Element e) { return m.label(e); };
  std::string tuple = "(";
  for (std::size_t i = 0; i < w.operands.size(); ++i) {
    if (i) tuple += ",";
    tuple += lbl(w.operands[i]);
  }
  tuple += ")";
  switch (w.kind) {
    case Property::commutativity: {
      const auto &x = lbl(w.operands[0]), &y = lbl(w.operands[1]);
      return tuple + ": " + x + "*" + y + " = " + lbl(w.lhs) + ", " + y + "*" + x + " = " +
             lbl(w.rhs);
    }
    case Property::associativity: {
      const auto &x = lbl(w.operands[0]), &y = lbl(w.operands[1]), &z = lbl(w.operands[2]);
      return tuple + ": (" + x + "*" + y + ")*" + z + " = " + lbl(w.lhs) + ", " + x + "*(" + y +
             "*" + z + ") = " + lbl(w.rhs);
    }
    case Property::medial: {
      const auto &p = lbl(w.operands[0]), &q = lbl(w.operands[1]), &r = lbl(w.operands[2]),
                 &s = lbl(w.operands[3]);
      return tuple + ": (" + p + "*" + q + ")*(" + r + "*" + s + ") = " + lbl(w.lhs) + ", (" + p +
             "*" + r + ")*(" + q + "*" + s + ") = " + lbl(w.rhs);
    }
    case Property::unit_existence:
      return tuple + ": not a unit";
  }
  return tuple;
}

}  // namespace mtbdd::algebra
