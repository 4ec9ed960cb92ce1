#include "mtbdd/algebra/builtins.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "mtbdd/errors.hpp"

namespace mtbdd::algebra {

namespace {

std::vector<std::string> letter_labels(unsigned n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    if (n <= 26)
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      labels.push_back("e" + std::to_string(i));
  }
  return labels;
}

std::vector<std::string> digit_labels(unsigned n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Parses "name(k)" into name and k; bare names leave k unset.
struct ParsedName {
  std::string_view base;
  std::optional<unsigned> arg;
};

ParsedName parse_name(std::string_view name) {
  auto open = name.find('(');
  if (open == std::string_view::npos) return {name, std::nullopt};
  if (name.back() != ')') throw CatalogError("malformed builtin name '" + std::string(name) + "'");
  std::string_view digits = name.substr(open + 1, name.size() - open - 2);
  unsigned k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || k == 0)
    throw CatalogError("builtin '" + std::string(name) + "': size argument must be a positive integer");
  return {name.substr(0, open), k};
}

}  // namespace

FiniteMagma tamura() {
  return FiniteMagma("tamura", letter_labels(4),
                     {0, 0, 0, 0,    // a* : a a a a
                      1, 1, 1, 1,    // b* : b b b b
                      2, 2, 2, 2,    // c* : c c c c
                      0, 0, 1, 0});  // d* : a a b a
}

FiniteMagma flip2() {
  return FiniteMagma("flip2", digit_labels(2),
                     {1, 0,    // 0* : 1 0
                      1, 0});  // 1* : 1 0
}

FiniteMagma comm_nonassoc4() {
  return FiniteMagma("comm-nonassoc4", letter_labels(4),
                     {0, 2, 1, 3,    // a* : a c b d
                      2, 0, 3, 1,    // b* : c a d b
                      1, 3, 0, 2,    // c* : b d a c
                      3, 1, 2, 0});  // d* : d b c a
}

FiniteMagma proj_left(unsigned n) {
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = a;
  return FiniteMagma("proj-left(" + std::to_string(n) + ")", letter_labels(n), std::move(t));
}

FiniteMagma proj_right(unsigned n) {
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = b;
  return FiniteMagma("proj-right(" + std::to_string(n) + ")", letter_labels(n), std::move(t));
}

FiniteMagma z_add(unsigned n) {
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteMagma("z-add(" + std::to_string(n) + ")", digit_labels(n), std::move(t));
}

namespace {

bool any_real(double, double) { return true; }

bool both_integral(double x, double y) {
  return std::rint(x) == x && std::rint(y) == y && std::abs(x) < 9.0e15 && std::abs(y) < 9.0e15;
}

double sample_int(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  return static_cast<double>(d(rng));
}

RealOp make_real_op(std::string name, std::function<bool(double, double)> dom,
                    std::function<double(double, double)> fn, bool medial, bool exact) {
  RealOp op;
  op.name = std::move(name);
  op.in_domain = std::move(dom);
  op.fn = std::move(fn);
  op.medial = medial;
  op.exact = exact;
  return op;
}

}  // namespace

RealOp add_real() {
  return make_real_op("add-real", any_real, [](double x, double y) { return x + y; }, true, false);
}

RealOp mul_real() {
  return make_real_op("mul-real", any_real, [](double x, double y) { return x * y; }, true, false);
}

RealOp sub_real() {
  return make_real_op("sub-real", any_real, [](double x, double y) { return x - y; }, true, false);
}

RealOp sub_int() {
  RealOp op = make_real_op("sub-int", both_integral,
                           [](double x, double y) { return x - y; }, true, true);
  op.sample_range = {-1000000.0, 1000000.0};
  op.sample = sample_int;
  return op;
}

RealOp min_real() {
  return make_real_op("min-real", any_real,
                      [](double x, double y) { return std::min(x, y); }, true, true);
}

RealOp max_real() {
  return make_real_op("max-real", any_real,
                      [](double x, double y) { return std::max(x, y); }, true, true);
}

RealOp h_continuous() {
  RealOp op = make_real_op(
      "h-continuous", [](double x, double y) { return x > 4.0 && y > 4.0; },
      [](double x, double y) { return std::min(std::min(x + 1.0, 16.0) * y, 64.0); }, true, true);
  op.sample_range = {4.0 + 1e-9, 100.0};
  return op;
}

PairOp pair_matrix() {
  return PairOp{"pair-matrix",
                [](std::array<double, 2> u, std::array<double, 2> v) -> std::array<double, 2> {
                  bool u_id = u[0] == 0.0 && u[1] == 0.0;
                  bool v_id = v[0] == 0.0 && v[1] == 0.0;
                  if (u_id) return v;
                  if (v_id) return u;
                  double s = v[0] + v[1];
                  return {u[0] * s, u[1] * s};
                },
                /*medial=*/false};
}

Builtin builtin(std::string_view name) {
  auto [base, arg] = parse_name(name);
  auto sized = [&](unsigned dflt) { return arg.value_or(dflt); };
  if (base == "tamura") return tamura();
  if (base == "flip2") return flip2();
  if (base == "comm-nonassoc4") return comm_nonassoc4();
  if (base == "proj-left") return proj_left(sized(2));
  if (base == "proj-right") return proj_right(sized(2));
  if (base == "z-add") return z_add(sized(2));
  if (base == "add-real") return add_real();
  if (base == "mul-real") return mul_real();
  if (base == "sub-real") return sub_real();
  if (base == "sub-int") return sub_int();
  if (base == "min-real") return min_real();
  if (base == "max-real") return max_real();
  if (base == "h-continuous") return h_continuous();
  if (base == "pair-matrix") return pair_matrix();
  throw CatalogError("unknown builtin '" + std::string(name) + "'");
}

FiniteMagma builtin_magma(std::string_view name) {
  Builtin b = builtin(name);
  if (auto* m = std::get_if<FiniteMagma>(&b)) return std::move(*m);
  throw CatalogError("builtin '" + std::string(name) + "' is not a finite magma");
}

RealOp builtin_real_op(std::string_view name) {
  Builtin b = builtin(name);
  if (auto* op = std::get_if<RealOp>(&b)) return std::move(*op);
  throw CatalogError("builtin '" + std::string(name) + "' is not a real-valued operation");
}

std::vector<std::string> builtin_names() {
  return {"tamura",   "flip2",    "comm-nonassoc4", "proj-left(k)", "proj-right(k)",
          "z-add(k)", "sub-int",  "add-real",       "mul-real",     "sub-real",
          "min-real", "max-real", "h-continuous",   "pair-matrix"};
}

}  // namespace mtbdd::algebra
