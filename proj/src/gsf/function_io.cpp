#include "mtbdd/gsf/function_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mtbdd::gsf {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

}  // namespace

FunctionFile load_function(std::istream& in, const std::string& name) {
  std::string line;
  unsigned lineno = 0;
  FunctionFile file;

  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream hdr(line);
    std::string key;
    hdr >> key;
    if (key != "vars:") throw ParseError(name, lineno, 1, "expected 'vars: <n>' header");
    long n = -1;
    hdr >> n;
    if (!hdr || n < 1 || n > 20)
      throw ParseError(name, lineno, 7, "variable count must be in 1..20");
    file.n = static_cast<unsigned>(n);
    break;
  }
  if (file.n == 0) throw ParseError(name, lineno ? lineno : 1, 1, "missing 'vars:' header");

  const std::size_t rows = std::size_t{1} << file.n;
  file.values.assign(rows, {});
  std::vector<bool> seen(rows, false);
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ParseError(name, lineno, 1, "expected '<bitstring> -> <value>'");
    std::string bits = strip(line.substr(0, arrow));
    std::string value = strip(line.substr(arrow + 2));
    if (bits.size() != file.n)
      throw ParseError(name, lineno, 1,
                       "bitstring '" + bits + "' has length " + std::to_string(bits.size()) +
                           ", expected " + std::to_string(file.n));
    std::size_t row = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k] != '0' && bits[k] != '1')
        throw ParseError(name, lineno, static_cast<unsigned>(k + 1),
                         "bitstring must contain only 0 and 1");
      row = (row << 1) | static_cast<std::size_t>(bits[k] - '0');
    }
    if (value.empty())
      throw ParseError(name, lineno, static_cast<unsigned>(arrow + 3), "missing value");
    if (seen[row])
      throw ParseError(name, lineno, 1, "duplicate row '" + bits + "'");
    seen[row] = true;
    file.values[row] = value;
  }
  for (std::size_t row = 0; row < rows; ++row)
    if (!seen[row]) {
      Assignment a(file.n, row);
      throw ParseError(name, lineno + 1, 1, "missing row '" + a.to_string() + "'");
    }
  return file;
}

FunctionFile load_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 1, 1, "cannot open file");
  return load_function(in, path);
}

TruthTable<algebra::Element> resolve_labels(const FunctionFile& file,
                                            const algebra::FiniteMagma& m) {
  std::vector<algebra::Element> values;
  values.reserve(file.values.size());
  for (std::size_t row = 0; row < file.values.size(); ++row) {
    auto e = m.element(file.values[row]);
    if (!e)
      throw Error("row " + Assignment(file.n, row).to_string() + ": '" + file.values[row] +
                  "' is not an element of magma '" + m.name() + "'");
    values.push_back(*e);
  }
  return TruthTable<algebra::Element>(file.n, std::move(values));
}

TruthTable<double> resolve_reals(const FunctionFile& file) {
  std::vector<double> values;
  values.reserve(file.values.size());
  for (std::size_t row = 0; row < file.values.size(); ++row) {
    const std::string& s = file.values[row];
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || std::isnan(v))
      throw Error("row " + Assignment(file.n, row).to_string() + ": '" + s +
                  "' is not a number");
    values.push_back(v);
  }
  return TruthTable<double>(file.n, std::move(values));
}

namespace {

template <class T, class Fmt>
std::string render(const TruthTable<T>& f, Fmt&& fmt) {
  std::ostringstream out;
  out << "vars: " << f.vars() << '\n';
  for (std::size_t row = 0; row < f.rows(); ++row)
    out << Assignment(f.vars(), row).to_string() << " -> " << fmt(f[row]) << '\n';
  return out.str();
}

}  // namespace

std::string function_to_text(const TruthTable<double>& f) {
  return render(f, [](double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
  });
}

std::string function_to_text(const TruthTable<algebra::Element>& f,
                             const algebra::FiniteMagma& m) {
  return render(f, [&m](algebra::Element e) { return m.label(e); });
}

}  // namespace mtbdd::gsf
