#include "mtbdd/algebra/transport.hpp"

#include <algorithm>

namespace mtbdd::algebra {

TransportResult transport(const FiniteMagma& m, std::span<const unsigned> f,
                          std::span<const unsigned> g, std::vector<std::string> s_labels) {
  const unsigned n = m.size();
  const unsigned s_size = static_cast<unsigned>(f.size());
  if (g.size() != n)
    throw TransportError("section g must have one entry per element of M");
  if (s_labels.empty()) {
    s_labels.reserve(s_size);
    for (unsigned s = 0; s < s_size; ++s) s_labels.push_back("s" + std::to_string(s));
  }
  if (s_labels.size() != s_size)
    throw TransportError("label list does not match |S|");

  std::vector<bool> hit(n, false);
  for (unsigned s = 0; s < s_size; ++s) {
    if (f[s] >= n) throw TransportError("f maps outside the carrier of M");
    hit[f[s]] = true;
  }
  for (unsigned x = 0; x < n; ++x)
    if (!hit[x])
      throw TransportError("f is not surjective: element '" + m.label(x) + "' has no preimage");
  for (unsigned x = 0; x < n; ++x) {
    if (g[x] >= s_size) throw TransportError("g maps outside S");
    if (f[g[x]] != x)
      throw TransportError("f∘g is not the identity at '" + m.label(x) + "'");
  }

  // Representatives are g(M); the induced table a ** b = g(f(a) * f(b))
  // lands on representatives again, so it closes over g(M). Representative
  // g(x) sits at index x, g being injective.
  std::vector<unsigned> reps(g.begin(), g.end());
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) table[i * n + j] = m.at(f[reps[i]], f[reps[j]]);

  std::vector<std::string> rep_labels;
  rep_labels.reserve(n);
  for (unsigned i = 0; i < n; ++i) rep_labels.push_back(s_labels[reps[i]]);

  std::vector<std::vector<unsigned>> classes(n);
  for (unsigned s = 0; s < s_size; ++s) classes[f[s]].push_back(s);

  TransportResult result{
      FiniteMagma("transport(" + m.name() + ")", std::move(rep_labels), std::move(table)),
      std::move(reps), std::move(classes)};
  return result;
}

}  // namespace mtbdd::algebra
