#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FERRERS_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("normal-form") {
  CliResult r = run_cli("normal-form g:2,2,3,2,1,0,1,0,0,3,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "blocks: 1 | 22321 ; tail: 32\n");

  CHECK(run_cli("normal-form 1,2,3").out == "blocks: ; tail: -\n");
  CHECK(run_cli("normal-form 3,3,5,6,6").out == "blocks: 21 | 221 ; tail: -\n");
  CHECK(run_cli("normal-form \"\"").out == "blocks: ; tail: -\n");
  CHECK(run_cli("normal-form 3,2").exit_code == 2);
}

TEST_CASE("equiv") {
  CliResult r = run_cli("equiv g:2,2,3,2,1,0,1,0,0,3,2 g:1,3,2,2,2,1,3,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "equivalent\n");

  CHECK(run_cli("equiv 2,2 2,2").exit_code == 0);
  CHECK(run_cli("equiv 2,2 2,3").exit_code == 1);
  CHECK(run_cli("equiv 2,2 junk").exit_code == 2);

  r = run_cli("equiv 2,3,5,6,6 3,4,4,5,6 --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("oracle: isomorphic") != std::string::npos);
  CHECK(r.out.find("agreement: yes") != std::string::npos);

  CHECK(run_cli("equiv 2,3,5,6,6 3,4,4,5,6 --oracle --max-elements 10")
            .exit_code == 3);
}

TEST_CASE("poset output and reconstruction round trip") {
  const std::string path = "/tmp/ferrers_cli_test_poset.json";
  CliResult r = run_cli("poset 3,3,5,6,6 -o " + path);
  CHECK(r.exit_code == 0);
  CliResult rt = run_cli("reconstruct " + path);
  CHECK(rt.exit_code == 0);
  CHECK(rt.out == run_cli("normal-form 3,3,5,6,6").out);
  std::remove(path.c_str());

  CliResult dot = run_cli("poset 2,4 --format dot");
  CHECK(dot.exit_code == 0);
  int nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.out.find("[label", pos)) !=
                            std::string::npos;
       ++pos)
    ++nodes;
  for (std::size_t pos = 0; (pos = dot.out.find("->", pos)) !=
                            std::string::npos;
       ++pos)
    ++edges;
  CHECK(nodes == 6);
  CHECK(edges == 7);

  CHECK(run_cli("poset g:2,2,3,2,1,0,1,0,0,3,2").exit_code == 3);
}

TEST_CASE("reconstruct rejects bad input") {
  const std::string path = "/tmp/ferrers_cli_test_bad.json";
  {
    std::ofstream out(path);
    out << R"({"elements": ["a", "b", "c"], "covers": [["a","c"],["b","c"]]})";
  }
  CliResult r = run_cli("reconstruct " + path);
  CHECK(r.exit_code == 4);
  CHECK(r.out.find("not a rook poset: structure") != std::string::npos);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK(run_cli("reconstruct " + path).exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("poincare, perm, entangle, interval") {
  CHECK(run_cli("poincare 2,4").out == "1 2 2 1\n");

  CliResult r = run_cli("perm 3,3,5,6,6");
  CHECK(r.out == "[3,2,5,6,4,1]\n312-avoiding: yes\n");

  r = run_cli("entangle 3,3,5,6,6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("r1 -- r2") != std::string::npos);
  CHECK(r.out.find("r3 -- r5") != std::string::npos);
  CHECK(r.out.find("r4 -- r5") != std::string::npos);

  r = run_cli("interval [2,1]");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"[1,2]\"") != std::string::npos);
  CHECK(r.out.find("\"[2,1]\"") != std::string::npos);
  CHECK(run_cli("interval [4,3,2,1] --max-elements 5").exit_code == 3);
}

TEST_CASE("verify at a small scale") {
  CliResult r = run_cli("verify --max-rows 2 --max-poset-size 20");
  CHECK(r.exit_code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_SUITE_END();
