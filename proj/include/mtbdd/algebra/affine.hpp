#pragma once

#include <array>
#include <random>
#include <vector>

namespace mtbdd::algebra {

/// t(x,y) = a*x + b*y + c, tested for associativity and commutativity on a
/// fixed real sample.
struct AffineTriple {
  double a, b, c;
  bool associative;
  bool commutative;
};

struct AffineReport {
  std::vector<AffineTriple> rows;
  std::vector<AffineTriple> associative_noncommutative;
  // True iff the associative-and-non-commutative set is exactly the two
  // projections {(1,0,0), (0,1,0)} (intersected with the supplied grid).
  bool only_projections;
};

/// The minimal coefficient grid {0,1} x {0,1} x {-1,0,1}.
std::vector<std::array<double, 3>> affine_base_grid();

/// Appends `count` uniformly random coefficient triples in [-5,5]^3.
void append_random_triples(std::vector<std::array<double, 3>>& grid, unsigned count,
                           std::mt19937_64& rng);

/// Tests each triple on a fixed sample of reals. The grid must contain the
/// base grid (callers start from affine_base_grid()).
AffineReport check_affine_projection_claim(const std::vector<std::array<double, 3>>& grid);

}  // namespace mtbdd::algebra
