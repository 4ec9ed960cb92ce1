#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "mtbdd/algebra/magma.hpp"
#include "mtbdd/algebra/real_op.hpp"

namespace mtbdd::algebra {

using Builtin = std::variant<FiniteMagma, RealOp, PairOp>;

/// Catalog of named example structures. Parameterized names take a size
/// argument in parentheses: proj-left(3), proj-right(5), z-add(4).
/// Throws CatalogError for unknown names.
Builtin builtin(std::string_view name);

/// Convenience lookups; throw CatalogError when the name resolves to a
/// different kind.
FiniteMagma builtin_magma(std::string_view name);
RealOp builtin_real_op(std::string_view name);

std::vector<std::string> builtin_names();

// Direct constructors for the fixed tables.
FiniteMagma tamura();           // 4-element associative non-commutative semigroup
FiniteMagma flip2();            // {0,1}, x*y = complement of y
FiniteMagma comm_nonassoc4();   // 4-element commutative non-associative table
FiniteMagma proj_left(unsigned n);
FiniteMagma proj_right(unsigned n);
FiniteMagma z_add(unsigned n);  // addition mod n

RealOp add_real();
RealOp mul_real();
RealOp sub_real();
RealOp sub_int();
RealOp min_real();
RealOp max_real();
RealOp h_continuous();          // h(x,y) = min(min(x+1,16)*y, 64) on (4,inf)

/// (a,b)*(c,d) = (a*(c+d), b*(c+d)) with (0,0) acting as identity, i.e. the
/// rank-one matrix embedding [[a,a],[b,b]] under matrix multiplication. Pairs
/// with c+d = 0 collapse to (0,0), the degenerate image of the embedding.
PairOp pair_matrix();

}  // namespace mtbdd::algebra
