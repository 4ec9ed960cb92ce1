#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtbdd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element index outside the carrier, or an operation left the carrier.
struct CarrierError : Error {
  using Error::Error;
};

// Malformed magma/function file. Positions are 1-based.
struct ParseError : Error {
  ParseError(std::string file, unsigned line, unsigned column, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        file(std::move(file)),
        line(line),
        column(column) {}
  std::string file;
  unsigned line;
  unsigned column;
};

// Unknown builtin name.
struct CatalogError : Error {
  using Error::Error;
};

// Permutation or enumeration budget exceeded.
struct BudgetError : Error {
  using Error::Error;
};

// Decision-diagram structural violation (variable order, arity mismatch, bad terminal).
struct StructureError : Error {
  using Error::Error;
};

// Transport preconditions violated (f not surjective, or f∘g != id).
struct TransportError : Error {
  using Error::Error;
};

// Gated multi-variable abstraction refused: the terminal operation does not
// satisfy the interchange law, so the result would depend on variable order.
struct RefusedAbstraction : Error {
  RefusedAbstraction(const std::string& op_name, std::string witness)
      : Error("abstraction over op '" + op_name + "' is not well-defined: " +
              (witness.empty() ? std::string("operation is not medial") : witness)),
        op(op_name),
        witness_text(std::move(witness)) {}
  std::string op;
  std::string witness_text;
};

}  // namespace mtbdd
