#include "mtbdd/algebra/builtins.hpp"

#include <random>

#include "doctest.h"
#include "mtbdd/errors.hpp"

using namespace mtbdd;
using namespace mtbdd::algebra;

TEST_CASE("catalog resolves every catalogued name") {
  for (const char* name : {"tamura", "flip2", "comm-nonassoc4", "proj-left(3)", "proj-right(4)",
                           "z-add(5)", "sub-int", "add-real", "mul-real", "sub-real", "min-real",
                           "max-real", "h-continuous", "pair-matrix"})
    CHECK_NOTHROW(builtin(name));
  CHECK_THROWS_AS(builtin("frobnicate"), CatalogError);
  CHECK_THROWS_AS(builtin("z-add(0)"), CatalogError);
  CHECK_THROWS_AS(builtin("z-add(x)"), CatalogError);
  CHECK_THROWS_AS(builtin_magma("min-real"), CatalogError);
  CHECK_THROWS_AS(builtin_real_op("tamura"), CatalogError);
}

TEST_CASE("tamura table rows match the classical semigroup") {
  FiniteMagma tam = tamura();
  REQUIRE(tam.size() == 4);
  // row d reads (a,a,b,a)
  CHECK(tam.at(3, 0) == 0);
  CHECK(tam.at(3, 1) == 0);
  CHECK(tam.at(3, 2) == 1);
  CHECK(tam.at(3, 3) == 0);
  // rows a,b,c are constant
  for (Element b = 0; b < 4; ++b) {
    CHECK(tam.at(0, b) == 0);
    CHECK(tam.at(1, b) == 1);
    CHECK(tam.at(2, b) == 2);
  }
}

TEST_CASE("flip2 is complement-of-right-operand") {
  FiniteMagma f2 = flip2();
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y) CHECK(f2.at(x, y) == 1 - y);
}

TEST_CASE("projection and modular-addition families") {
  FiniteMagma pl = proj_left(4), pr = proj_right(4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) {
      CHECK(pl.at(a, b) == a);
      CHECK(pr.at(a, b) == b);
    }
  FiniteMagma z1 = z_add(1);
  CHECK(z1.size() == 1);
  CHECK(classify(z1).unit == 0u);
  FiniteMagma z4 = z_add(4);
  CHECK(z4.at(3, 2) == 1);
}

TEST_CASE("h-continuous evaluates its defining clamp formula") {
  RealOp h = h_continuous();
  CHECK(h.fn(5, 4) == 24.0);
  CHECK(h.fn(4, 5) == 25.0);
  CHECK(h.medial);
  CHECK(h.exact);
  CHECK(h.in_domain(4.5, 5.5));
  CHECK_FALSE(h.in_domain(4.0, 5.0));
}

TEST_CASE("h composition collapses to 64 on its domain") {
  // any nested application h(h(x,y),z) or h(x,h(y,z)) is exactly 64
  RealOp h = h_continuous();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(4.0 + 1e-9, 100.0);
  for (int k = 0; k < 1000; ++k) {
    double x = d(rng), y = d(rng), z = d(rng);
    CHECK(h.fn(h.fn(x, y), z) == 64.0);
    CHECK(h.fn(x, h.fn(y, z)) == 64.0);
  }
}

TEST_CASE("subtraction satisfies the interchange law exactly") {
  RealOp s = sub_int();
  CHECK(s.fn(2, 3) == -1.0);
  CHECK(s.fn(3, 2) == 1.0);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int k = 0; k < 1000; ++k) {
    long long x1 = d(rng), x2 = d(rng), x3 = d(rng), x4 = d(rng);
    double lhs = s.fn(s.fn(x1, x2), s.fn(x3, x4));
    double rhs = s.fn(s.fn(x1, x3), s.fn(x2, x4));
    CHECK(lhs == rhs);
    CHECK(lhs == static_cast<double>(x1 - x2 - x3 + x4));
  }
}

TEST_CASE("real op closure holds on sampled domain points") {
  std::mt19937_64 rng(17);
  for (const char* name : {"add-real", "sub-real", "min-real", "max-real", "h-continuous",
                           "sub-int"}) {
    RealOp op = builtin_real_op(name);
    CAPTURE(name);
    CHECK(check_closure_by_sampling(op, rng, 500));
  }
}

TEST_CASE("random medial search finds nothing for the certified ops") {
  std::mt19937_64 rng(19);
  for (const char* name : {"add-real", "sub-real", "min-real", "max-real", "h-continuous"}) {
    RealOp op = builtin_real_op(name);
    CAPTURE(name);
    CHECK_FALSE(search_medial_violation(op, rng, 500).has_value());
  }
}

TEST_CASE("pair-matrix behaves like the rank-one matrix embedding") {
  PairOp pm = pair_matrix();
  using P = std::array<double, 2>;

  // identity pair
  CHECK(pm.fn(P{0, 0}, P{3, 4}) == P{3, 4});
  CHECK(pm.fn(P{3, 4}, P{0, 0}) == P{3, 4});

  // non-commutative
  CHECK(pm.fn(P{1, 2}, P{3, 4}) != pm.fn(P{3, 4}, P{1, 2}));

  // associative on random samples (c+d = 0 collapses have measure zero)
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int k = 0; k < 1000; ++k) {
    P u{d(rng), d(rng)}, v{d(rng), d(rng)}, w{d(rng), d(rng)};
    P lhs = pm.fn(pm.fn(u, v), w);
    P rhs = pm.fn(u, pm.fn(v, w));
    CHECK(real_close(lhs[0], rhs[0], 1e-9));
    CHECK(real_close(lhs[1], rhs[1], 1e-9));
  }

  // pairs summing to zero collapse onto the identity pair (degenerate image)
  CHECK(pm.fn(P{1, 2}, P{5, -5}) == P{0, 0});

  CHECK_FALSE(pm.medial);
}

TEST_CASE("pair-matrix medial violation: random search result pinned") {
  PairOp pm = pair_matrix();
  using P = std::array<double, 2>;
  // search over small integer pairs (the violation needs the identity pair,
  // which continuous sampling never hits)
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> d(-3, 3);
  std::optional<std::array<P, 4>> found;
  for (int k = 0; k < 20000 && !found; ++k) {
    std::array<P, 4> q;
    for (auto& p : q) p = P{double(d(rng)), double(d(rng))};
    P lhs = pm.fn(pm.fn(q[0], q[1]), pm.fn(q[2], q[3]));
    P rhs = pm.fn(pm.fn(q[0], q[2]), pm.fn(q[1], q[3]));
    if (lhs != rhs) found = q;
  }
  REQUIRE(found.has_value());

  // regression: the quadruple ((0,0),(1,2),(3,4),(0,0)) violates the law
  P lhs = pm.fn(pm.fn(P{0, 0}, P{1, 2}), pm.fn(P{3, 4}, P{0, 0}));
  P rhs = pm.fn(pm.fn(P{0, 0}, P{3, 4}), pm.fn(P{1, 2}, P{0, 0}));
  CHECK(lhs == P{7, 14});
  CHECK(rhs == P{9, 12});
}
