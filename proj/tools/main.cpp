// Command-line front end: classification, abstraction experiments,
// counterexample search, and small-table enumeration.
//
// Exit codes: 0 success, 2 input/parse error, 3 budget exceeded,
// 4 well-definedness refusal (gated abstraction).

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "mtbdd/algebra/affine.hpp"
#include "mtbdd/algebra/builtins.hpp"
#include "mtbdd/algebra/enumerate.hpp"
#include "mtbdd/algebra/magma_io.hpp"
#include "mtbdd/dd/manager.hpp"
#include "mtbdd/dd/op_adapters.hpp"
#include "mtbdd/gsf/function_io.hpp"
#include "mtbdd/gsf/search.hpp"

namespace {

using namespace mtbdd;
using algebra::Element;
using algebra::FiniteMagma;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRefused = 4;

// ---------------------------------------------------------------------------
// run report: ordered KEY: value lines, rendered to stdout; wall-clock time
// goes to stderr so identical inputs produce byte-identical stdout.

struct RunReport {
  std::vector<std::string> lines;

  void kv(std::string_view key, std::string_view value) {
    lines.push_back(std::string(key) + ": " + std::string(value));
  }
  void block(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  void print() const {
    for (const auto& l : lines) std::cout << l << '\n';
  }
};

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 1, 1, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a_hex(buf.str());
}

std::string format_real(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string join_labels(const FiniteMagma& m, const std::vector<Element>& es) {
  if (es.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ' ';
    out += m.label(es[i]);
  }
  return out;
}

std::string join_vars(const std::vector<gsf::VarIndex>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vars[i]);
  }
  return out;
}

// Resolves --builtin/--magma into a magma or real op, recording input lines.
struct OpInput {
  std::variant<FiniteMagma, algebra::RealOp> value;
  bool is_magma() const { return std::holds_alternative<FiniteMagma>(value); }
  const FiniteMagma& magma() const { return std::get<FiniteMagma>(value); }
  const algebra::RealOp& real() const { return std::get<algebra::RealOp>(value); }
};

OpInput resolve_op(const std::string& builtin_name, const std::string& magma_file,
                   RunReport& report) {
  if (!builtin_name.empty() && !magma_file.empty())
    throw Error("--builtin and --magma are mutually exclusive");
  if (!builtin_name.empty()) {
    report.kv("input", "builtin:" + builtin_name);
    report.kv("input-digest", fnv1a_hex(builtin_name));
    algebra::Builtin b = algebra::builtin(builtin_name);
    if (auto* m = std::get_if<FiniteMagma>(&b)) return OpInput{std::move(*m)};
    if (auto* r = std::get_if<algebra::RealOp>(&b)) return OpInput{std::move(*r)};
    throw Error("builtin '" + builtin_name + "' has no truth-table representation here");
  }
  if (!magma_file.empty()) {
    report.kv("input", "file:" + magma_file);
    report.kv("input-digest", file_digest(magma_file));
    return OpInput{algebra::load_magma_file(magma_file)};
  }
  throw Error("one of --builtin or --magma is required");
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& builtin_name, const std::string& magma_file) {
  RunReport report;
  report.kv("command", "classify");
  OpInput in = resolve_op(builtin_name, magma_file, report);
  if (!in.is_magma()) throw Error("classify needs a finite magma");
  const FiniteMagma& m = in.magma();

  algebra::AlgebraReport r = algebra::classify(m);
  report.kv("magma", m.name());
  report.kv("size", std::to_string(m.size()));
  std::string labels;
  for (const auto& l : m.labels()) labels += (labels.empty() ? "" : " ") + l;
  report.kv("elements", labels);
  report.kv("commutative", r.commutative ? "yes" : "no");
  if (r.commutative_witness)
    report.kv("commutative-witness", algebra::format_witness(m, *r.commutative_witness));
  report.kv("associative", r.associative ? "yes" : "no");
  if (r.associative_witness)
    report.kv("associative-witness", algebra::format_witness(m, *r.associative_witness));
  report.kv("medial", r.medial ? "yes" : "no");
  if (r.medial_witness)
    report.kv("medial-witness", algebra::format_witness(m, *r.medial_witness));
  report.kv("left-units", join_labels(m, r.left_units));
  report.kv("right-units", join_labels(m, r.right_units));
  report.kv("unit", r.unit ? m.label(*r.unit) : "none");
  report.print();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// abstract

template <class T>
void describe_result(DDManager<T>& mgr, NodeId r, std::string_view key,
                     const std::function<std::string(const T&)>& fmt, RunReport& report) {
  if (mgr.is_terminal(r)) {
    report.kv(key, "constant " + fmt(mgr.terminal_value(r)));
  } else {
    report.kv(key, "diagram (" + std::to_string(mgr.node_count(r)) + " nodes)");
    report.block(mgr.dump(r, fmt));
  }
}

template <class T>
int run_abstract(DDManager<T>& mgr, OpId op, const gsf::TruthTable<T>& f,
                 std::vector<gsf::VarIndex> vars, const std::string& order,
                 const std::string& policy, const std::function<std::string(const T&)>& fmt,
                 RunReport& report) {
  report.kv("vars", join_vars(vars));
  report.kv("policy", policy);
  report.kv("order", order);
  NodeId root = mgr.from_truth_table(f);

  if (order == "all") {
    if (vars.size() > 6)
      throw BudgetError("--order all is limited to 6 variables, got " +
                        std::to_string(vars.size()));
    std::sort(vars.begin(), vars.end());
    std::vector<std::pair<NodeId, std::vector<gsf::VarIndex>>> distinct;
    do {
      AbstractionRequest req{op, vars, AbstractionRequest::Policy::forced_order};
      NodeId r = mgr.abstract_set(req, root);
      bool seen = false;
      for (auto& [id, first] : distinct)
        if (id == r) seen = true;
      if (!seen) distinct.emplace_back(r, vars);
    } while (std::next_permutation(vars.begin(), vars.end()));
    report.kv("distinct-results", std::to_string(distinct.size()));
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      std::string tag = "result " + std::to_string(k + 1);
      report.kv(tag + " order", join_vars(distinct[k].second));
      describe_result(mgr, distinct[k].first, tag, fmt, report);
    }
    report.print();
    return kExitOk;
  }

  AbstractionRequest req;
  req.op = op;
  req.vars = vars;
  if (policy == "gated") {
    req.policy = AbstractionRequest::Policy::gated;
  } else {
    req.policy = AbstractionRequest::Policy::forced_order;
    if (order == "ascending") std::sort(req.vars.begin(), req.vars.end());
  }
  try {
    NodeId r = mgr.abstract_set(req, root);
    describe_result(mgr, r, "result", fmt, report);
  } catch (const RefusedAbstraction& e) {
    report.kv("refused", "abstraction over op '" + e.op + "' is not well-defined");
    if (!e.witness_text.empty()) report.kv("medial-witness", e.witness_text);
    report.print();
    return kExitRefused;
  }
  report.print();
  return kExitOk;
}

int cmd_abstract(const std::string& builtin_name, const std::string& magma_file,
                 const std::string& function_file, std::vector<unsigned> vars,
                 const std::string& order, const std::string& policy) {
  RunReport report;
  report.kv("command", "abstract");
  OpInput in = resolve_op(builtin_name, magma_file, report);
  report.kv("function", "file:" + function_file);
  report.kv("function-digest", file_digest(function_file));
  gsf::FunctionFile ff = gsf::load_function_file(function_file);
  report.kv("op", in.is_magma() ? in.magma().name() : in.real().name);

  if (in.is_magma()) {
    const FiniteMagma& m = in.magma();
    gsf::TruthTable<Element> f = gsf::resolve_labels(ff, m);
    DDManager<Element> mgr(f.vars());
    OpId op = mgr.register_op(magma_op(m));
    auto fmt = [&m](const Element& e) { return m.label(e); };
    return run_abstract<Element>(mgr, op, f, vars, order, policy, fmt, report);
  }
  const algebra::RealOp& r = in.real();
  gsf::TruthTable<double> f = gsf::resolve_reals(ff);
  DDManager<double> mgr(f.vars());
  OpId op = mgr.register_op(real_terminal_op(r));
  return run_abstract<double>(mgr, op, f, vars, order, policy, format_real, report);
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const std::string& builtin_name, const std::string& magma_file, unsigned n) {
  RunReport report;
  report.kv("command", "search");
  OpInput in = resolve_op(builtin_name, magma_file, report);
  if (!in.is_magma()) throw Error("search needs a finite magma");
  const FiniteMagma& m = in.magma();

  report.kv("magma", m.name());
  report.kv("n", std::to_string(n));
  gsf::SearchResult r = gsf::search_counterexample(m, n);
  report.kv("quadruples-checked", std::to_string(r.quadruples_checked));
  if (!r.counterexample) {
    report.kv("verdict",
              "abstractable (medial law verified over " + std::to_string(r.quadruples_checked) +
                  " quadruples)");
    report.kv("exhaustive", r.exhaustive ? "yes" : "no (function space exceeds budget)");
    if (r.exhaustive) report.kv("functions-checked", std::to_string(r.functions_checked));
    report.print();
    return kExitOk;
  }

  report.kv("verdict", "order-dependent");
  report.kv("medial-witness", algebra::format_witness(m, *r.medial_witness));
  report.lines.push_back("function:");
  report.block(gsf::function_to_text(*r.counterexample, m));

  // both two-variable outcomes, computed on the diagram engine
  DDManager<Element> mgr(n);
  OpId op = mgr.register_op(magma_op(m));
  NodeId root = mgr.from_truth_table(*r.counterexample);
  auto fmt = [&m](const Element& e) { return m.label(e); };
  for (auto order : {std::vector<gsf::VarIndex>{1, 2}, std::vector<gsf::VarIndex>{2, 1}}) {
    AbstractionRequest req{op, order, AbstractionRequest::Policy::forced_order};
    describe_result<Element>(mgr, mgr.abstract_set(req, root), "order " + join_vars(order), fmt,
                             report);
  }
  report.print();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(unsigned size, const std::string& filter_csv, unsigned limit,
                  std::uint64_t samples, std::uint64_t seed) {
  RunReport report;
  report.kv("command", "enumerate");
  report.kv("size", std::to_string(size));
  algebra::ProfileFilter filter = algebra::ProfileFilter::parse(filter_csv);

  algebra::EnumerationSummary s;
  if (size >= 1 && size <= 3) {
    report.kv("mode", "exhaustive");
    s = algebra::enumerate_tables(size, filter, limit);
  } else if (size == 4) {
    if (samples == 0)
      throw BudgetError("size 4 has 4^16 tables; pass --sample N to draw a random sample");
    report.kv("mode", "sampled");
    report.kv("samples", std::to_string(samples));
    report.kv("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);
    s = algebra::enumerate_sampled(size, samples, rng, filter, limit);
  } else {
    throw BudgetError("enumeration supports sizes 1..3 exhaustively and 4 with --sample");
  }

  report.kv("tables", std::to_string(s.total));
  report.kv("filter", filter.tokens.empty() ? "(none)" : filter_csv);
  report.kv("matching", std::to_string(s.matching));
  for (unsigned key = 0; key < 64; ++key) {
    if (s.profile_counts[key] == 0) continue;
    auto flag = [&](unsigned bit) { return (key & bit) ? "yes" : "no"; };
    std::string desc = std::string("profile commutative=") + flag(1) + " associative=" +
                       flag(2) + " medial=" + flag(4) + " left-unit=" + flag(8) +
                       " right-unit=" + flag(16) + " unit=" + flag(32);
    report.kv(desc, std::to_string(s.profile_counts[key]));
    for (std::size_t k = 0; k < s.exemplars[key].size(); ++k) {
      const auto& t = s.exemplars[key][k];
      std::string row;
      for (unsigned i = 0; i < size; ++i) {
        if (i) row += " / ";
        for (unsigned j = 0; j < size; ++j) {
          if (j) row += ' ';
          row += std::to_string(t[i * size + j]);
        }
      }
      report.kv("  exemplar " + std::to_string(k + 1), row);
    }
  }
  report.print();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision-diagram abstraction over terminal magmas"};
  app.require_subcommand(1);

  std::string builtin_name, magma_file, function_file, order = "ascending", policy = "gated";
  std::string filter_csv;
  std::vector<unsigned> vars;
  unsigned n = 2, size = 2, limit = 3;
  std::uint64_t samples = 0, seed = 0;

  auto* classify = app.add_subcommand("classify", "classify a finite magma");
  classify->add_option("--builtin", builtin_name, "builtin structure name");
  classify->add_option("--magma", magma_file, "magma table file");

  auto* abstract_cmd = app.add_subcommand("abstract", "abstract variables of a function");
  abstract_cmd->add_option("--builtin", builtin_name, "builtin operation name");
  abstract_cmd->add_option("--magma", magma_file, "magma table file");
  abstract_cmd->add_option("--function", function_file, "function file")->required();
  abstract_cmd->add_option("--vars", vars, "variables to abstract")->required()->expected(-1);
  abstract_cmd->add_option("--order", order, "given|ascending|all")
      ->check(CLI::IsMember({"given", "ascending", "all"}));
  abstract_cmd->add_option("--policy", policy, "gated|forced")
      ->check(CLI::IsMember({"gated", "forced"}));

  auto* search = app.add_subcommand("search", "search for an order-dependent function");
  search->add_option("--builtin", builtin_name, "builtin structure name");
  search->add_option("--magma", magma_file, "magma table file");
  search->add_option("--n", n, "variable count of the searched function");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate small composition tables");
  enumerate->add_option("--size", size, "carrier size")->required();
  enumerate->add_option("--filter", filter_csv, "comma-separated profile filter");
  enumerate->add_option("--limit", limit, "max exemplar tables to print");
  enumerate->add_option("--sample", samples, "sample count (required for size 4)");
  enumerate->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = kExitOk;
  try {
    if (app.got_subcommand(classify)) {
      rc = cmd_classify(builtin_name, magma_file);
    } else if (app.got_subcommand(abstract_cmd)) {
      rc = cmd_abstract(builtin_name, magma_file, function_file, vars, order, policy);
    } else if (app.got_subcommand(search)) {
      rc = cmd_search(builtin_name, magma_file, n);
    } else if (app.got_subcommand(enumerate)) {
      rc = cmd_enumerate(size, filter_csv, limit, samples, seed);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = kExitBudget;
  } catch (const RefusedAbstraction& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = kExitRefused;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    rc = 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed-ms: " << elapsed.count() << '\n';
  return rc;
}
