#include "mtbdd/algebra/affine.hpp"

#include <cmath>

#include "mtbdd/algebra/real_op.hpp"

namespace mtbdd::algebra {

namespace {

// Fixed evaluation sample; includes negatives, zero, and non-integers so a
// coefficient mismatch cannot hide behind a special value.
constexpr std::array<std::array<double, 3>, 6> kSample = {{
    {0.5, -1.25, 2.0},
    {1.0, 2.0, 3.0},
    {-0.75, 0.25, -3.5},
    {4.0, -2.0, 0.0},
    {0.0, 1.5, -1.0},
    {-2.25, -0.5, 5.0},
}};

bool affine_associative(double a, double b, double c) {
  auto t = [&](double x, double y) { return a * x + b * y + c; };
  for (const auto& [x, y, z] : kSample)
    if (!real_close(t(x, t(y, z)), t(t(x, y), z))) return false;
  return true;
}

bool affine_commutative(double a, double b, double c) {
  auto t = [&](double x, double y) { return a * x + b * y + c; };
  for (const auto& [x, y, z] : kSample) {
    if (!real_close(t(x, y), t(y, x))) return false;
    if (!real_close(t(y, z), t(z, y))) return false;
  }
  return true;
}

}  // namespace

std::vector<std::array<double, 3>> affine_base_grid() {
  std::vector<std::array<double, 3>> grid;
  for (double a : {0.0, 1.0})
    for (double b : {0.0, 1.0})
      for (double c : {-1.0, 0.0, 1.0}) grid.push_back({a, b, c});
  return grid;
}

void append_random_triples(std::vector<std::array<double, 3>>& grid, unsigned count,
                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (unsigned i = 0; i < count; ++i) grid.push_back({d(rng), d(rng), d(rng)});
}

AffineReport check_affine_projection_claim(const std::vector<std::array<double, 3>>& grid) {
  AffineReport report;
  report.rows.reserve(grid.size());
  for (const auto& [a, b, c] : grid) {
    AffineTriple row{a, b, c, affine_associative(a, b, c), affine_commutative(a, b, c)};
    report.rows.push_back(row);
    if (row.associative && !row.commutative)
      report.associative_noncommutative.push_back(row);
  }
  bool left = false, right = false, other = false;
  for (const auto& row : report.associative_noncommutative) {
    if (row.a == 1.0 && row.b == 0.0 && row.c == 0.0)
      left = true;
    else if (row.a == 0.0 && row.b == 1.0 && row.c == 0.0)
      right = true;
    else
      other = true;
  }
  report.only_projections = left && right && !other;
  return report;
}

}  // namespace mtbdd::algebra
