#pragma once

#include <memory>
#include <string>

// Free magma over named leaves: combining two terms just records the pair.
// Used to check that composed abstractions expand to the exact bracketings,
// independent of any concrete operation.

namespace testutil {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  std::string leaf;  // empty for internal nodes
  TermPtr l, r;
};

inline TermPtr leaf(std::string name) {
  return std::make_shared<Term>(Term{std::move(name), nullptr, nullptr});
}

inline TermPtr combine(const TermPtr& a, const TermPtr& b) {
  return std::make_shared<Term>(Term{{}, a, b});
}

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return a == b;
  if (a->leaf != b->leaf) return false;
  if (!a->l != !b->l) return false;
  if (a->l && !term_equal(a->l, b->l)) return false;
  if (!a->r != !b->r) return false;
  if (a->r && !term_equal(a->r, b->r)) return false;
  return true;
}

inline std::string term_to_string(const TermPtr& t) {
  if (!t) return "?";
  if (!t->leaf.empty()) return t->leaf;
  return "(" + term_to_string(t->l) + "*" + term_to_string(t->r) + ")";
}

}  // namespace testutil
