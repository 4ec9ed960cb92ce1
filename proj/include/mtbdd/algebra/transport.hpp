#pragma once

#include <span>
#include <string>
#include <vector>

#include "mtbdd/algebra/magma.hpp"

namespace mtbdd::algebra {

/// Result of transporting a magma structure from M onto a finite set S
/// through a surjection f: S -> M with section g: M -> S (f∘g = id).
/// The induced operation on representatives is a ** b = g(f(a) * f(b));
/// `magma` is its table over the representative set g(M), labelled by the
/// S-labels of the representatives. `classes` lists, per representative,
/// the members of its equivalence class {s : g(f(s)) = r}.
struct TransportResult {
  FiniteMagma magma;
  std::vector<unsigned> representatives;          // S-indices g(0..n-1)
  std::vector<std::vector<unsigned>> classes;     // S-indices per representative
};

/// `f` has one entry per element of S (values are M-indices); `g` has one
/// entry per element of M (values are S-indices). `s_labels` may be empty,
/// in which case elements of S are labelled s0..s{|S|-1}. Throws
/// TransportError when f is not surjective or f∘g is not the identity.
TransportResult transport(const FiniteMagma& m, std::span<const unsigned> f,
                          std::span<const unsigned> g,
                          std::vector<std::string> s_labels = {});

}  // namespace mtbdd::algebra
