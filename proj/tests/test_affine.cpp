#include "mtbdd/algebra/affine.hpp"

#include <random>

#include "doctest.h"

using namespace mtbdd::algebra;

TEST_CASE("base grid separates the projections") {
  AffineReport r = check_affine_projection_claim(affine_base_grid());
  CHECK(r.only_projections);
  REQUIRE(r.associative_noncommutative.size() == 2);

  for (const auto& row : r.rows) {
    if (row.a == 1.0 && row.b == 0.0 && row.c == 0.0) {
      CHECK(row.associative);       // left projection
      CHECK_FALSE(row.commutative);
    }
    if (row.a == 1.0 && row.b == 1.0 && row.c == 0.0) {
      CHECK(row.associative);       // addition
      CHECK(row.commutative);
    }
    if (row.a == 1.0 && row.b == 0.0 && row.c == 1.0) {
      CHECK_FALSE(row.associative);  // t(x,y) = x + 1 shifts twice on the left
    }
  }
}

TEST_CASE("t(x,y) = x + 2y fails associativity on the sample") {
  // t(x,t(y,z)) = x + 2y + 4z but t(t(x,y),z) = x + 2y + 2z
  AffineReport r = check_affine_projection_claim({{1.0, 2.0, 0.0}});
  REQUIRE(r.rows.size() == 1);
  CHECK_FALSE(r.rows[0].associative);
}

TEST_CASE("random triples do not enlarge the associative non-commutative set") {
  std::mt19937_64 rng(37);
  auto grid = affine_base_grid();
  append_random_triples(grid, 100, rng);
  AffineReport r = check_affine_projection_claim(grid);
  CHECK(r.only_projections);
}
