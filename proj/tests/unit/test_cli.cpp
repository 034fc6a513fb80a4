#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using namespace surreal::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
  auto r = run_cli({"eval", "dali(2) + dali(2)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "value: 4\ngeneration: 4\nidentical-to-canonical: true\n");

  r = run_cli({"eval", "dali(2) * dali(3)"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "value: 6\n"));
  CHECK(has(r.out, "generation: 12\n"));
  CHECK(has(r.out, "identical-to-canonical: false\n"));

  r = run_cli({"eval", "{phi|phi} + {phi|phi}"});
  CHECK(r.out == "value: 0\ngeneration: 0\nidentical-to-canonical: true\n");
}

TEST_CASE("eval --expand") {
  auto r = run_cli({"eval", "dali(1) + dali(1/2)", "--expand"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "form: { { { phi | phi } | { { phi | phi } | phi } }, { { phi | phi } | phi } | "
                   "{ { { phi | phi } | phi } | phi } }\n"));
  r = run_cli({"eval", "dali(2) * dali(2)", "--expand", "2"});
  CHECK(has(r.out, "form: { { <2> | <4> } | phi }\n"));
  r = run_cli({"eval", "--expand", "1", "dali(2) * dali(2)"});
  CHECK(has(r.out, "form: { <3> | phi }\n"));
  CHECK(run_cli({"eval", "dali(2)", "--expand", "x"}).code == kExitUsage);
}

TEST_CASE("errors map to exit codes") {
  auto r = run_cli({"eval", "dali(1/3)"});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
  CHECK(run_cli({"eval", "{3|5}"}).code == kExitUsage);
  CHECK(run_cli({"eval", "{dali(1)|dali(0)}"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"verify", "thm9"}).code == kExitUsage);
  CHECK(run_cli({"--max-depth", "10", "value", "dali(50)"}).code == kExitIncomplete);
  CHECK(run_cli({"--max-cache", "10", "value", "dali(2) * dali(3)"}).code == kExitIncomplete);
  CHECK(run_cli({"--max-cache", "10", "--cache-policy", "evict-none", "value", "dali(2) * dali(2)"}).out ==
        "4\n");
  CHECK(run_cli({"--help"}).code == kExitOk);
}

TEST_CASE("value, dot, json") {
  CHECK(run_cli({"value", "dali(3/4) + dali(3/4)"}).out == "3/2\n");
  CHECK(run_cli({"value", "dali(-1/2) * dali(3)"}).out == "-3/2\n");

  auto r = run_cli({"dot", "dali(0)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "digraph surreal {\n  node [shape=record];\n  n0 [label=\"{0|{<L>phi|<R>phi}}\"];\n}\n");
  r = run_cli({"dot", "{ {phi|phi} | phi }"});
  CHECK(has(r.out, "n1:L -> n0 [color=red];"));
  r = run_cli({"dot", "dali(3/4) + dali(3/4)"});
  CHECK(has(r.out, "{3/2|"));
  CHECK(r.out == run_cli({"dot", "dali(3/4) + dali(3/4)"}).out);

  r = run_cli({"json", "dali(2) * dali(3)"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "\"generation\": 12"));
  CHECK(has(r.out, "\"format\": \"surreal-dag\""));
}

TEST_CASE("table add") {
  auto r = run_cli({"table", "add"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "          x:     0   1/2   3/4     1     2\n"
        "     y  g(y)     0     2     3     1     2  <- g(x)\n"
        "     0     0     0     2     3     1     2\n"
        "   1/2     2     2     4     5     3     4\n"
        "   3/4     3     3     5     6     4     5\n"
        "     1     1     1     3     4     2     3\n"
        "     2     2     2     4     5     3     4\n");
}

TEST_CASE("table mul") {
  auto r = run_cli({"table", "mul", "0"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "     0   0\n"));

  r = run_cli({"table", "mul", "6", "--ceiling", "12"});
  CHECK(r.code == kExitOk);
  for (auto cell : {"(188)", "(644)", "(1826)", "(4494)", "(31)", "(115)"}) CHECK(has(r.out, cell));
  CHECK(has(r.out, "     2      0      2      6     12 "));

  r = run_cli({"table", "mul", "3", "--ceiling", "31", "--csv"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "n,m,f,measured,status\n"));
  CHECK(has(r.out, "3,3,31,31,verified\n"));
  CHECK(has(r.out, "2,3,12,12,verified\n"));
}

TEST_CASE("recurrence") {
  CHECK(run_cli({"recurrence", "3", "5"}).out == "115\n");
  CHECK(run_cli({"recurrence", "6", "6"}).out == "4494\n");
  CHECK(run_cli({"recurrence", "--diagonal", "6"}).out == "0,1,6,31,160,841,4494\n");
  CHECK(run_cli({"recurrence", "--pow2", "4"}).out == "2,6,42,1806\n");
  CHECK(run_cli({"recurrence"}).code == kExitUsage);
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "lemma1"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "lemma1: "));
  CHECK(has(r.out, " 0 failed"));

  r = run_cli({"verify", "thm1", "--seed", "7"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, " 0 failed"));
  CHECK(r.out == run_cli({"verify", "thm1", "--seed", "7"}).out);

  r = run_cli({"verify", "thm2", "--ceiling", "12"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "f(2,3) = 12: verified"));

  r = run_cli({"verify", "laws", "--samples", "20"});
  CHECK(r.code == kExitOk);
}

}
