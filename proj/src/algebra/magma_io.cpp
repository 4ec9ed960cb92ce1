#include "mtbdd/algebra/magma_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mtbdd::algebra {

namespace {

struct Token {
  std::string text;
  unsigned column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<unsigned>(start + 1)});
  }
  return out;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;  // blank
}

}  // namespace

FiniteMagma load_magma(std::istream& in, const std::string& display_name) {
  std::string line;
  unsigned lineno = 0;

  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0].text != "elements:")
      throw ParseError(display_name, lineno, toks.empty() ? 1 : toks[0].column,
                       "expected 'elements:' header");
    if (toks.size() < 2)
      throw ParseError(display_name, lineno, toks[0].column, "header lists no elements");
    for (std::size_t i = 1; i < toks.size(); ++i) labels.push_back(toks[i].text);
    break;
  }
  if (labels.empty()) throw ParseError(display_name, lineno ? lineno : 1, 1, "missing 'elements:' header");

  const unsigned n = static_cast<unsigned>(labels.size());
  auto index_of = [&](const std::string& label) -> std::optional<Element> {
    for (unsigned i = 0; i < n; ++i)
      if (labels[i] == label) return i;
    return std::nullopt;
  };

  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  unsigned rows = 0;
  while (rows < n && std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto toks = tokenize(line);
    if (toks.size() != n)
      throw ParseError(display_name, lineno, toks.empty() ? 1 : toks.back().column,
                       "row " + std::to_string(rows + 1) + " has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(n));
    for (const auto& t : toks) {
      auto e = index_of(t.text);
      if (!e) throw ParseError(display_name, lineno, t.column, "unknown label '" + t.text + "'");
      table.push_back(*e);
    }
    ++rows;
  }
  if (rows < n)
    throw ParseError(display_name, lineno + 1, 1,
                     "table ended after " + std::to_string(rows) + " of " + std::to_string(n) +
                         " rows");
  while (std::getline(in, line)) {
    ++lineno;
    if (!skippable(line))
      throw ParseError(display_name, lineno, tokenize(line)[0].column,
                       "unexpected content after table");
  }

  try {
    return FiniteMagma(display_name, std::move(labels), std::move(table));
  } catch (const CarrierError& e) {
    throw ParseError(display_name, lineno, 1, e.what());
  }
}

FiniteMagma load_magma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 1, 1, "cannot open file");
  return load_magma(in, path);
}

std::string magma_to_text(const FiniteMagma& m) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& l : m.labels()) out << ' ' << l;
  out << '\n';
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < m.size(); ++b) {
      if (b) out << ' ';
      out << m.label(m.at(a, b));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mtbdd::algebra
