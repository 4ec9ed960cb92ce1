#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

// Process-level checks of the command-line tool: output contracts, exit
// codes, and byte-level determinism.

namespace {

struct CmdResult {
  int rc;
  std::string out;
};

CmdResult run(const std::string& args) {
  std::string cmd = std::string(MTBDD_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("classify reports the Tamura landscape") {
  CmdResult r = run("classify --builtin tamura");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "associative: yes"));
  CHECK(contains(r.out, "commutative: no"));
  CHECK(contains(r.out, "medial: no"));
  CHECK(contains(r.out, "medial-witness: (d,a,c,a): (d*a)*(c*a) = a, (d*c)*(a*a) = b"));
  CHECK(contains(r.out, "unit: none"));
}

TEST_CASE("classify reports the commutative non-associative table") {
  CmdResult r = run("classify --builtin comm-nonassoc4");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "commutative: yes"));
  CHECK(contains(r.out, "associative: no"));
  CHECK(contains(r.out, "medial: yes"));
  CHECK(contains(r.out, "unit: none"));
}

TEST_CASE("classify of the trivial monoid") {
  CmdResult r = run("classify --builtin 'z-add(1)'");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "commutative: yes"));
  CHECK(contains(r.out, "associative: yes"));
  CHECK(contains(r.out, "medial: yes"));
  CHECK(contains(r.out, "unit: 0"));
}

TEST_CASE("classify accepts a magma file and rejects malformed ones") {
  auto good = write_temp("cli_good.magma",
                         "elements: x y\n"
                         "y x\n"
                         "x y\n");
  CmdResult ok = run("classify --magma " + good.string());
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "commutative: yes"));

  auto bad = write_temp("cli_bad.magma",
                        "elements: x y\n"
                        "y q\n"
                        "x y\n");
  CmdResult fail = run("classify --magma " + bad.string());
  CHECK(fail.rc == 2);

  CmdResult missing = run("classify --magma /nonexistent/file.magma");
  CHECK(missing.rc == 2);

  CmdResult unknown = run("classify --builtin not-a-thing");
  CHECK(unknown.rc == 2);

  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("identical invocations produce byte-identical stdout") {
  for (const char* args : {"classify --builtin tamura",
                           "enumerate --size 2 --filter medial",
                           "enumerate --size 4 --sample 50 --seed 9 --filter has-unit",
                           "search --builtin tamura --n 3"}) {
    CmdResult a = run(args);
    CmdResult b = run(args);
    CAPTURE(args);
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("abstract: gated refusal carries the witness and exit code 4") {
  auto fn = write_temp("cli_tamq.fn",
                       "vars: 2\n00 -> d\n01 -> a\n10 -> c\n11 -> b\n");
  CmdResult r = run("abstract --builtin tamura --function " + fn.string() + " --vars 1 2");
  CHECK(r.rc == 4);
  CHECK(contains(r.out, "refused"));
  CHECK(contains(r.out, "medial-witness: (d,a,c,a)"));

  CmdResult all = run("abstract --builtin tamura --function " + fn.string() +
                      " --vars 1 2 --order all");
  CHECK(all.rc == 0);
  CHECK(contains(all.out, "distinct-results: 2"));
  CHECK(contains(all.out, "constant a"));
  CHECK(contains(all.out, "constant b"));
  std::filesystem::remove(fn);
}

TEST_CASE("abstract: subtraction quadruple and single variable") {
  auto fn = write_temp("cli_sub.fn",
                       "vars: 2\n00 -> 10\n01 -> 3\n10 -> 4\n11 -> 1\n");
  CmdResult r = run("abstract --builtin sub-int --function " + fn.string() + " --vars 1 2");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "result: constant 4"));

  CmdResult one = run("abstract --builtin sub-int --function " + fn.string() +
                      " --vars 1 --order all");
  CHECK(one.rc == 0);
  CHECK(contains(one.out, "distinct-results: 1"));
  std::filesystem::remove(fn);
}

TEST_CASE("abstract: permutation budget yields exit code 3") {
  std::string text = "vars: 7\n";
  for (int row = 0; row < 128; ++row) {
    std::string bits;
    for (int b = 6; b >= 0; --b) bits += ((row >> b) & 1) ? '1' : '0';
    text += bits + " -> 1\n";
  }
  auto fn = write_temp("cli_budget.fn", text);
  CmdResult r = run("abstract --builtin sub-int --function " + fn.string() +
                    " --vars 1 2 3 4 5 6 7 --order all");
  CHECK(r.rc == 3);
  std::filesystem::remove(fn);
}

TEST_CASE("abstract: function parse errors yield exit code 2") {
  auto fn = write_temp("cli_parse.fn", "vars: 2\n00 -> a\n");
  CmdResult r = run("abstract --builtin tamura --function " + fn.string() + " --vars 1");
  CHECK(r.rc == 2);
  std::filesystem::remove(fn);
}

TEST_CASE("search reports both outcomes or confirms abstractability") {
  CmdResult tam = run("search --builtin tamura --n 2");
  CHECK(tam.rc == 0);
  CHECK(contains(tam.out, "verdict: order-dependent"));
  CHECK(contains(tam.out, "order 1 2: constant b"));
  CHECK(contains(tam.out, "order 2 1: constant a"));

  CmdResult flip = run("search --builtin flip2 --n 2");
  CHECK(flip.rc == 0);
  CHECK(contains(flip.out, "verdict: abstractable"));
  CHECK(contains(flip.out, "functions-checked: 16"));

  CmdResult proj = run("search --builtin 'proj-left(3)' --n 3");
  CHECK(proj.rc == 0);
  CHECK(contains(proj.out, "verdict: abstractable"));
}

TEST_CASE("enumerate: filters, size-1 edge, and sampling budget") {
  CmdResult one = run("enumerate --size 1");
  CHECK(one.rc == 0);
  CHECK(contains(one.out, "tables: 1"));
  CHECK(contains(one.out, "matching: 1"));

  CmdResult two = run("enumerate --size 2 --filter medial,non-associative");
  CHECK(two.rc == 0);
  CHECK(contains(two.out, "matching: 2"));

  CmdResult empty = run("enumerate --size 3 --filter medial,has-unit,non-commutative");
  CHECK(empty.rc == 0);
  CHECK(contains(empty.out, "matching: 0"));

  CmdResult nosample = run("enumerate --size 4");
  CHECK(nosample.rc == 3);
  CmdResult toobig = run("enumerate --size 5 --sample 10");
  CHECK(toobig.rc == 3);
  CmdResult badfilter = run("enumerate --size 2 --filter bogus");
  CHECK(badfilter.rc == 2);
}
