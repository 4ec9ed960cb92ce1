#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mtbdd/gsf/truth_table.hpp"

namespace mtbdd {

using NodeId = std::uint32_t;
using OpId = std::uint32_t;
using gsf::VarIndex;

/// Terminal admission and canonicalization per value type. Canonicity of the
/// diagram needs a total, reflexive equality on terminals, so doubles
/// canonicalize -0.0 to 0.0 and NaN is rejected outright.
template <class T>
struct TerminalPolicy {
  static T canonical(T v) { return v; }
  static void validate(const T&) {}
};

template <>
struct TerminalPolicy<double> {
  static double canonical(double v) { return v == 0.0 ? 0.0 : v; }
  static void validate(const double& v) {
    if (std::isnan(v)) throw StructureError("NaN terminal rejected");
  }
};

/// Binary operation over terminals. `medial` is the well-definedness
/// certificate consulted by gated multi-variable abstraction: computed by
/// table scan for finite magmas, a static catalog flag for real built-ins,
/// and user-asserted for anything else. `medial_witness` (when known) is the
/// formatted violating quadruple shown in refusals.
template <class T>
struct BinaryOp {
  std::string name;
  std::function<T(T, T)> fn;
  bool medial = false;
  std::string medial_witness;
};

struct AbstractionRequest {
  enum class Policy { gated, forced_order };
  OpId op = 0;
  std::vector<VarIndex> vars;
  Policy policy = Policy::gated;
};

/// Hash-consed reduced ordered multi-terminal decision diagrams over a fixed
/// variable count. Nodes are interned: structurally equal diagrams share one
/// id, so function equality is id equality. The manager only grows; there is
/// no garbage collection. Not thread-safe; confine a manager and its node
/// ids to one thread.
template <class T>
class DDManager {
 public:
  explicit DDManager(unsigned var_count) : n_(var_count) {
    if (var_count > 20) throw StructureError("managers support at most 20 variables");
  }

  unsigned var_count() const { return n_; }

  // ---- node construction ------------------------------------------------

  NodeId terminal(T value) {
    TerminalPolicy<T>::validate(value);
    value = TerminalPolicy<T>::canonical(value);
    auto it = terminal_ids_.find(value);
    if (it != terminal_ids_.end()) return it->second;
    NodeId id = fresh_node(kTerminalVar, static_cast<NodeId>(terminals_.size()), 0);
    terminals_.push_back(value);
    terminal_ids_.emplace(std::move(value), id);
    return id;
  }

  /// Reduction and interning in one step: node(v, t, t) collapses to t, and
  /// structurally equal internals share an id. `var` must precede the top
  /// variables of both children.
  NodeId node(VarIndex var, NodeId lo, NodeId hi) {
    if (var < 1 || var > n_)
      throw StructureError("variable " + std::to_string(var) + " out of range 1.." +
                           std::to_string(n_));
    check_id(lo);
    check_id(hi);
    if (var >= top_var(lo) || var >= top_var(hi))
      throw StructureError("ordering violation: var " + std::to_string(var) +
                           " must precede its children");
    if (lo == hi) return lo;
    NodeKey key{var, lo, hi};
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    NodeId id = fresh_node(var, lo, hi);
    unique_.emplace(key, id);
    return id;
  }

  // ---- structure accessors ----------------------------------------------

  bool is_terminal(NodeId u) const {
    check_id(u);
    return nodes_[u].var == kTerminalVar;
  }
  const T& terminal_value(NodeId u) const {
    if (!is_terminal(u)) throw StructureError("not a terminal node");
    return terminals_[nodes_[u].lo];
  }
  VarIndex var_of(NodeId u) const {
    if (is_terminal(u)) throw StructureError("terminal has no variable");
    return nodes_[u].var;
  }
  NodeId low(NodeId u) const {
    if (is_terminal(u)) throw StructureError("terminal has no children");
    return nodes_[u].lo;
  }
  NodeId high(NodeId u) const {
    if (is_terminal(u)) throw StructureError("terminal has no children");
    return nodes_[u].hi;
  }

  // ---- operations registry ----------------------------------------------

  OpId register_op(BinaryOp<T> op) {
    ops_.push_back(std::move(op));
    return static_cast<OpId>(ops_.size() - 1);
  }
  const BinaryOp<T>& op(OpId id) const {
    if (id >= ops_.size()) throw StructureError("unknown op id");
    return ops_[id];
  }

  // ---- bridge to the dense representation --------------------------------

  NodeId from_truth_table(const gsf::TruthTable<T>& f) {
    if (f.vars() != n_)
      throw StructureError("truth table has " + std::to_string(f.vars()) +
                           " variables, manager has " + std::to_string(n_));
    return build(f, 1, 0);
  }

  gsf::TruthTable<T> to_truth_table(NodeId u) const {
    std::vector<T> values;
    values.reserve(std::size_t{1} << n_);
    for (std::size_t row = 0; row < (std::size_t{1} << n_); ++row)
      values.push_back(eval(u, gsf::Assignment(n_, row)));
    return gsf::TruthTable<T>(n_, std::move(values));
  }

  T eval(NodeId u, const gsf::Assignment& b) const {
    if (b.size() != n_) throw StructureError("assignment arity mismatch");
    check_id(u);
    while (!is_terminal(u)) u = b.bit(var_of(u)) ? high(u) : low(u);
    return terminal_value(u);
  }

  // ---- core operations ----------------------------------------------------

  /// The cofactor u|_{var i := bit}; variable i is absent from the result.
  NodeId cofactor(NodeId u, VarIndex i, bool bit) {
    if (i < 1 || i > n_) throw StructureError("cofactor variable out of range");
    check_id(u);
    std::unordered_map<NodeId, NodeId> memo;
    return cofactor_rec(u, i, bit, memo);
  }

  /// Pointwise op: eval(apply(op,u,v), b) = op(eval(u,b), eval(v,b)).
  /// Memoized on ordered (op,u,v); op need not be commutative, so operands
  /// are never swapped in the cache key.
  NodeId apply(OpId op_id, NodeId u, NodeId v) {
    (void)op(op_id);
    check_id(u);
    check_id(v);
    return apply_rec(op_id, u, v);
  }

  /// A(i): op-combination of the two cofactors. Variable i is absent from
  /// the result (the diagram form of the dense definition, which keeps the
  /// variable but makes it vacuous).
  NodeId abstract(OpId op_id, VarIndex i, NodeId u) {
    return apply(op_id, cofactor(u, i, false), cofactor(u, i, true));
  }

  /// Multi-variable abstraction. Policy gated: for more than one variable
  /// the operation must certify the interchange law, otherwise the fold
  /// order could change the result and the request is refused; folds in
  /// ascending variable order (semantically irrelevant once gated, but it
  /// keeps node-id traces reproducible). Policy forced_order: folds in the
  /// given order unconditionally.
  NodeId abstract_set(const AbstractionRequest& req, NodeId u) {
    const BinaryOp<T>& o = op(req.op);
    if (req.vars.empty()) throw StructureError("abstraction needs at least one variable");
    std::vector<VarIndex> vars = req.vars;
    {
      std::vector<VarIndex> sorted = vars;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw StructureError("abstraction variable set has duplicates");
      if (sorted.back() > n_ || sorted.front() < 1)
        throw StructureError("abstraction variable out of range");
      if (req.policy == AbstractionRequest::Policy::gated) {
        if (vars.size() > 1 && !o.medial) throw RefusedAbstraction(o.name, o.medial_witness);
        vars = std::move(sorted);
      }
    }
    NodeId r = u;
    for (VarIndex v : vars) r = abstract(req.op, v, r);
    return r;
  }

  // ---- diagnostics --------------------------------------------------------

  /// Distinct nodes reachable from u, terminals included.
  std::size_t node_count(NodeId u) const {
    check_id(u);
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> stack{u};
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second || is_terminal(x)) continue;
      stack.push_back(low(x));
      stack.push_back(high(x));
    }
    return seen.size();
  }

  std::size_t live_nodes() const { return nodes_.size(); }
  std::size_t apply_cache_size() const { return apply_cache_.size(); }
  void clear_apply_cache() { apply_cache_.clear(); }

  /// Deterministic text dump of the diagram rooted at u. Reachable nodes are
  /// renumbered 0..k-1 in creation order (children before parents), so equal
  /// construction histories produce byte-identical dumps.
  std::string dump(NodeId u, const std::function<std::string(const T&)>& fmt = {}) const {
    auto format = fmt ? fmt : default_format();
    std::vector<NodeId> order = reachable_sorted(u);
    std::unordered_map<NodeId, std::size_t> local;
    for (std::size_t k = 0; k < order.size(); ++k) local[order[k]] = k;
    std::string out;
    for (NodeId id : order) {
      out += "node " + std::to_string(local[id]) + " = ";
      if (is_terminal(id)) {
        out += "terminal " + format(terminal_value(id));
      } else {
        out += "var " + std::to_string(var_of(id)) + " ? " + std::to_string(local[high(id)]) +
               " : " + std::to_string(local[low(id)]);
      }
      out += '\n';
    }
    return out;
  }

  /// Structural audit over every node in the manager: reduction (lo != hi),
  /// strict variable increase toward terminals, and unique-table consistency.
  /// Throws StructureError on any violation.
  void audit() const {
    std::unordered_set<NodeKey, NodeKeyHash> keys;
    for (NodeId id = 0; id < nodes_.size(); ++id) {
      const NodeData& nd = nodes_[id];
      if (nd.var == kTerminalVar) continue;
      if (nd.lo == nd.hi) throw StructureError("audit: unreduced node " + std::to_string(id));
      if (nd.var >= top_var(nd.lo) || nd.var >= top_var(nd.hi))
        throw StructureError("audit: ordering violation at node " + std::to_string(id));
      if (nd.lo >= id || nd.hi >= id)
        throw StructureError("audit: child created after parent at node " + std::to_string(id));
      if (!keys.insert(NodeKey{nd.var, nd.lo, nd.hi}).second)
        throw StructureError("audit: duplicate structural node " + std::to_string(id));
    }
    if (unique_.size() + terminals_.size() != nodes_.size())
      throw StructureError("audit: unique table out of sync");
  }

 private:
  static constexpr VarIndex kTerminalVar = ~VarIndex{0};

  struct NodeData {
    VarIndex var;  // kTerminalVar for terminals
    NodeId lo;     // terminal: index into terminals_
    NodeId hi;
  };

  struct NodeKey {
    VarIndex var;
    NodeId lo, hi;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
      std::uint64_t x = (std::uint64_t{k.var} << 42) ^ (std::uint64_t{k.lo} << 21) ^ k.hi;
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdULL;
      x ^= x >> 33;
      return static_cast<std::size_t>(x);
    }
  };

  struct ApplyKey {
    OpId op;
    NodeId u, v;
    bool operator==(const ApplyKey&) const = default;
  };
  struct ApplyKeyHash {
    std::size_t operator()(const ApplyKey& k) const {
      return NodeKeyHash{}(NodeKey{k.op, k.u, k.v});
    }
  };

  NodeId fresh_node(VarIndex var, NodeId lo, NodeId hi) {
    nodes_.push_back(NodeData{var, lo, hi});
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  void check_id(NodeId u) const {
    if (u >= nodes_.size()) throw StructureError("node id " + std::to_string(u) + " unknown");
  }

  VarIndex top_var(NodeId u) const { return nodes_[u].var; }  // kTerminalVar sorts last

  NodeId build(const gsf::TruthTable<T>& f, VarIndex v, std::size_t base) {
    if (v > n_) return terminal(f[base]);
    std::size_t half = std::size_t{1} << (n_ - v);
    NodeId lo = build(f, v + 1, base);  // low child first: creation order is part
    NodeId hi = build(f, v + 1, base + half);  // of the dump contract
    return node_or_child(v, lo, hi);
  }

  // node() without the redundant range checks; inputs are trusted internals.
  NodeId node_or_child(VarIndex var, NodeId lo, NodeId hi) {
    if (lo == hi) return lo;
    NodeKey key{var, lo, hi};
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    NodeId id = fresh_node(var, lo, hi);
    unique_.emplace(key, id);
    return id;
  }

  NodeId cofactor_rec(NodeId u, VarIndex i, bool bit, std::unordered_map<NodeId, NodeId>& memo) {
    if (is_terminal(u) || var_of(u) > i) return u;  // i cannot occur below
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    NodeId r;
    if (var_of(u) == i) {
      r = bit ? high(u) : low(u);
    } else {
      NodeId lo = cofactor_rec(low(u), i, bit, memo);
      NodeId hi = cofactor_rec(high(u), i, bit, memo);
      r = node_or_child(var_of(u), lo, hi);
    }
    memo.emplace(u, r);
    return r;
  }

  NodeId apply_rec(OpId op_id, NodeId u, NodeId v) {
    if (is_terminal(u) && is_terminal(v))
      return terminal(ops_[op_id].fn(terminal_value(u), terminal_value(v)));
    ApplyKey key{op_id, u, v};
    auto it = apply_cache_.find(key);
    if (it != apply_cache_.end()) return it->second;
    VarIndex tu = top_var(u), tv = top_var(v);
    VarIndex m = std::min(tu, tv);
    NodeId u0 = tu == m ? nodes_[u].lo : u;
    NodeId u1 = tu == m ? nodes_[u].hi : u;
    NodeId v0 = tv == m ? nodes_[v].lo : v;
    NodeId v1 = tv == m ? nodes_[v].hi : v;
    NodeId lo = apply_rec(op_id, u0, v0);
    NodeId hi = apply_rec(op_id, u1, v1);
    NodeId r = node_or_child(m, lo, hi);
    apply_cache_.emplace(key, r);
    return r;
  }

  std::vector<NodeId> reachable_sorted(NodeId u) const {
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> stack{u}, out;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      out.push_back(x);
      if (!is_terminal(x)) {
        stack.push_back(low(x));
        stack.push_back(high(x));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  static std::function<std::string(const T&)> default_format() {
    return [](const T& v) {
      if constexpr (std::is_floating_point_v<T>) {
        char buf[64];
        auto r = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, r.ptr);
      } else {
        return std::to_string(v);
      }
    };
  }

  unsigned n_;
  std::vector<NodeData> nodes_;
  std::vector<T> terminals_;
  std::unordered_map<T, NodeId> terminal_ids_;
  std::unordered_map<NodeKey, NodeId, NodeKeyHash> unique_;
  std::unordered_map<ApplyKey, NodeId, ApplyKeyHash> apply_cache_;
  std::vector<BinaryOp<T>> ops_;
};

}  // namespace mtbdd
