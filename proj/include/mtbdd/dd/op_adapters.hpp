#pragma once

#include "mtbdd/algebra/magma.hpp"
#include "mtbdd/algebra/real_op.hpp"
#include "mtbdd/dd/manager.hpp"

namespace mtbdd {

/// Terminal operation backed by a finite composition table. The medial
/// certificate is computed here by full quadruple scan, so the gate decision
/// for finite magmas is always exact.
inline BinaryOp<algebra::Element> magma_op(const algebra::FiniteMagma& m) {
  BinaryOp<algebra::Element> op;
  op.name = m.name();
  algebra::Witness w;
  op.medial = algebra::check_medial(m, &w);
  if (!op.medial) op.medial_witness = algebra::format_witness(m, w);
  op.fn = [m](algebra::Element a, algebra::Element b) { return m.eval(a, b); };
  return op;
}

/// Real built-ins carry a static medial flag (mediality of an arbitrary real
/// function is not decidable by sampling); the refusal witness is empty.
inline BinaryOp<double> real_terminal_op(const algebra::RealOp& r) {
  return BinaryOp<double>{r.name, r.fn, r.medial, {}};
}

}  // namespace mtbdd
