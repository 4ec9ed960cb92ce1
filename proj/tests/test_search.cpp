#include "mtbdd/gsf/search.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "mtbdd/algebra/builtins.hpp"
#include "mtbdd/algebra/enumerate.hpp"
#include "mtbdd/gsf/function_io.hpp"

using namespace mtbdd;
using namespace mtbdd::gsf;
using mtbdd::algebra::Element;
using mtbdd::algebra::FiniteMagma;

TEST_CASE("search_counterexample embeds the first medial violation") {
  FiniteMagma tam = mtbdd::algebra::tamura();
  SearchResult r = search_counterexample(tam, 2);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.quadruples_checked == 256);
  // quadruple (d,a,c,a) placed at rows 00,01,10,11
  CHECK(r.counterexample->values() == std::vector<Element>{3, 0, 2, 0});
  auto op = [&tam](Element a, Element b) { return tam.at(a, b); };
  CHECK_FALSE(is_function_abstractable(*r.counterexample, op).abstractable);
  CHECK_THROWS_AS(search_counterexample(tam, 1), StructureError);
}

TEST_CASE("search_counterexample confirms small medial magmas exhaustively") {
  SearchResult flip = search_counterexample(mtbdd::algebra::flip2(), 2);
  CHECK_FALSE(flip.counterexample.has_value());
  CHECK(flip.exhaustive);
  CHECK(flip.functions_checked == 16);

  // 4^(2^2) = 256 functions: still within budget
  SearchResult c4 = search_counterexample(mtbdd::algebra::comm_nonassoc4(), 2);
  CHECK_FALSE(c4.counterexample.has_value());
  CHECK(c4.exhaustive);
  CHECK(c4.functions_checked == 256);

  // 4^(2^5) > 1e6: quadruple scan only
  SearchResult big = search_counterexample(mtbdd::algebra::comm_nonassoc4(), 5);
  CHECK_FALSE(big.counterexample.has_value());
  CHECK_FALSE(big.exhaustive);

  SearchResult proj = search_counterexample(mtbdd::algebra::proj_left(3), 3);
  CHECK_FALSE(proj.counterexample.has_value());
  CHECK(proj.exhaustive);  // 3^8 = 6561
}

// Two-variable equivalence, exhaustively for every table of size <= 3 and every
// f in GSF(2,M): the pairwise-commutation check agrees with the direct
// comparison of the two bracketings.
TEST_CASE("two-variable abstractability agrees with the bracketing identity for all small magmas") {
  for (unsigned size = 1; size <= 3; ++size) {
    std::uint64_t mismatches = 0;
    algebra::for_each_table(size, [&](std::span<const Element> t) {
      auto op = [&](Element a, Element b) { return t[a * size + b]; };
      std::vector<Element> digits(4, 0);
      while (true) {
        TruthTable<Element> f(2, digits);
        bool via_def = is_function_abstractable(f, op).abstractable;
        Element lhs = op(op(f[0], f[1]), op(f[2], f[3]));
        Element rhs = op(op(f[0], f[2]), op(f[1], f[3]));
        if (via_def != (lhs == rhs)) ++mismatches;
        unsigned i = 4;
        bool done = true;
        while (i > 0) {
          --i;
          if (++digits[i] < size) {
            done = false;
            break;
          }
          digits[i] = 0;
        }
        if (done) break;
      }
    });
    CAPTURE(size);
    CHECK(mismatches == 0);
  }
}

// Interchange-law equivalence on size-3 tables with n=3: the violating direction is
// exhaustive via the quadruple embedding; the converse (medial => all f
// abstractable) is sampled with 10,000 random functions drawn across the
// medial tables.
TEST_CASE("medial law tracks order-independence of three-variable abstraction") {
  std::vector<std::vector<Element>> medial_tables;
  algebra::for_each_table(3, [&](std::span<const Element> t) {
    algebra::Witness w;
    bool medial = algebra::table_medial(3, t, &w);
    if (medial) {
      medial_tables.emplace_back(t.begin(), t.end());
      return;
    }
    auto op = [&](Element a, Element b) { return t[a * 3 + b]; };
    TruthTable<Element> f = make_quadruple_function<Element>(3, w.operands[0], w.operands[1],
                                                             w.operands[2], w.operands[3]);
    CHECK_FALSE(is_function_abstractable(f, op).abstractable);
  });
  REQUIRE(medial_tables.size() == 369);

  std::mt19937_64 rng(67);
  for (int k = 0; k < 10000; ++k) {
    const auto& t = medial_tables[rng() % medial_tables.size()];
    auto op = [&](Element a, Element b) { return t[a * 3 + b]; };
    auto f = testutil::random_table<Element>(3, [&] { return Element(rng() % 3); });
    CHECK(is_function_abstractable(f, op).abstractable);
  }
}

// n-independence on size-2 tables: the GSF(2,.) and GSF(3,.) verdicts agree,
// both exhaustive (16 and 256 functions per table).
TEST_CASE("abstractability verdict does not depend on the variable count") {
  algebra::for_each_table(2, [&](std::span<const Element> t) {
    auto op = [&](Element a, Element b) { return t[a * 2 + b]; };
    auto all_abstractable = [&](unsigned n) {
      std::size_t rows = std::size_t{1} << n;
      std::vector<Element> digits(rows, 0);
      while (true) {
        if (!is_function_abstractable(TruthTable<Element>(n, digits), op).abstractable)
          return false;
        std::size_t i = rows;
        bool done = true;
        while (i > 0) {
          --i;
          if (++digits[i] < 2) {
            done = false;
            break;
          }
          digits[i] = 0;
        }
        if (done) return true;
      }
    };
    bool v2 = all_abstractable(2);
    bool v3 = all_abstractable(3);
    CHECK(v2 == v3);
    CHECK(v2 == algebra::table_medial(2, t));
  });
}

TEST_CASE("function files parse, resolve, and render") {
  std::istringstream in(
      "# tamura embedding\n"
      "vars: 2\n"
      "00 -> d\n"
      "01 -> a\n"
      "11 -> b\n"
      "10 -> c\n");
  FunctionFile file = load_function(in, "test");
  CHECK(file.n == 2);
  FiniteMagma tam = mtbdd::algebra::tamura();
  TruthTable<Element> f = resolve_labels(file, tam);
  CHECK(f.values() == std::vector<Element>{3, 0, 2, 1});
  CHECK(function_to_text(f, tam) == "vars: 2\n00 -> d\n01 -> a\n10 -> c\n11 -> b\n");

  std::istringstream rin("vars: 1\n0 -> 2.5\n1 -> -3\n");
  TruthTable<double> rf = resolve_reals(load_function(rin, "reals"));
  CHECK(rf.values() == std::vector<double>{2.5, -3.0});
  CHECK(function_to_text(rf) == "vars: 1\n0 -> 2.5\n1 -> -3\n");
}

TEST_CASE("function file errors carry positions") {
  auto expect_error = [](const char* text, unsigned line) {
    std::istringstream in(text);
    try {
      load_function(in, "bad");
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("vars: 2\n00 -> a\n01 -> b\n10 -> c\n", 5);          // missing row
  expect_error("vars: 2\n00 -> a\n00 -> b\n10 -> c\n11 -> d\n", 3); // duplicate
  expect_error("vars: 2\n000 -> a\n", 2);                           // wrong width
  expect_error("vars: 0\n", 1);                                     // bad arity
  expect_error("00 -> a\n", 1);                                     // missing header
  expect_error("vars: 2\n0x -> a\n", 2);                            // bad bit

  std::istringstream in("vars: 1\n0 -> a\n1 -> q\n");
  FunctionFile file = load_function(in, "labels");
  CHECK_THROWS_AS(resolve_labels(file, mtbdd::algebra::tamura()), Error);
  std::istringstream rin("vars: 1\n0 -> 1.5\n1 -> fish\n");
  CHECK_THROWS_AS(resolve_reals(load_function(rin, "reals")), Error);
}
