#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <unistd.h>

#include "mhc/constructions.hpp"
#include "mhc/graph6.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string temp_file() {
  char name[] = "/tmp/mhc-cli-test-XXXXXX";
  int fd = mkstemp(name);
  REQUIRE(fd >= 0);
  close(fd);
  return name;
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string in_file = temp_file();
  std::string out_file = temp_file();
  {
    std::ofstream f(in_file);
    f << stdin_text;
  }
  std::string cmd = std::string(MHC_CLI_PATH) + " " + args + " < " + in_file +
                    " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream f(out_file);
  std::string line;
  while (std::getline(f, line)) r.out += line + "\n";
  std::remove(in_file.c_str());
  std::remove(out_file.c_str());
  return r;
}

}  // namespace

TEST_CASE("construct formats and exit codes") {
  auto k4 = run("construct 4 3 --graph6");
  CHECK(k4.exit_code == 0);
  CHECK(k4.out == "C~\n");

  auto dot = run("construct 16 5 --dot");
  CHECK(dot.exit_code == 0);
  for (const char* name : {"x1", "y1", "z7"})
    CHECK(dot.out.find(name) != std::string::npos);

  auto excluded = run("construct 7 5");
  CHECK(excluded.exit_code == 1);
  CHECK(excluded.out.find("DeltaEqualsNMinus2") != std::string::npos);

  auto cubic_odd = run("construct 7 3");
  CHECK(cubic_odd.exit_code == 1);
  CHECK(cubic_odd.out.find("CubicOddOrder") != std::string::npos);

  CHECK(run("construct 6 6").exit_code == 2);  // range error
  CHECK(run("construct 6").exit_code == 2);    // missing argument

  auto edgelist = run("construct 6 3 --edgelist");
  CHECK(edgelist.out.substr(0, 4) == "6 9\n");

  // family override bypasses dispatch but keeps structural checks
  auto forced = run("construct 8 5 --family odd --records");
  CHECK(forced.exit_code == 0);
  CHECK(forced.out.find("\"family\":\"odd\"") != std::string::npos);
  CHECK(run("construct 8 4 --family odd").exit_code == 4);  // parity violation
}

TEST_CASE("check subcommand") {
  auto w8 = mhc::emit_graph6(mhc::build_wheel(8).graph());
  auto verdict = run("check --mhc", w8 + "\n");
  CHECK(verdict.exit_code == 0);
  CHECK(verdict.out.find("\"is_minimal\":true") != std::string::npos);

  auto c6 = mhc::emit_graph6(mhc::Graph::cycle(6));
  auto hc = run("check --hc", c6 + "\n");
  CHECK(hc.out.find("\"is_hc\":false") != std::string::npos);
  CHECK(hc.out.find("\"pruned_by\":\"MinDegree\"") != std::string::npos);
  CHECK(run("check --hc --assert", c6 + "\n").exit_code == 1);

  auto parse = run("check --hc", "not graph6\n");
  CHECK(parse.exit_code == 3);

  CHECK(run("check --hc --mhc", "").exit_code == 2);

  // order above the solver bound: capability exit code
  auto big = run("check --hc", mhc::emit_graph6(mhc::Graph::cycle(30)) + "\n");
  CHECK(big.exit_code == 4);
}

TEST_CASE("drop-edge pipes into connectivity") {
  auto dropped = run("construct 17 5 --drop-edge x,z1 --graph6");
  REQUIRE(dropped.exit_code == 0);
  auto conn = run("check --connectivity", dropped.out);
  CHECK(conn.out.find("\"kappa\":2") != std::string::npos);
}

TEST_CASE("verify-formulas single parameter set") {
  auto rep = run("verify-formulas 16 5");
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("pairs=120 verified=120 failures=0") != std::string::npos);
}

TEST_CASE("search with expectations") {
  CHECK(run("search 6 --expect-max-degrees 3,5").exit_code == 0);
  CHECK(run("search 6 --expect-max-degrees 3,4,5").exit_code == 1);
  CHECK(run("search 7 --expect-min-degrees 3").exit_code == 0);
  CHECK(run("search 9").exit_code == 2);

  auto csv = run("search 5 --csv");
  CHECK(csv.out.find("5,34,3,3,3,1,4,3,true") != std::string::npos);
}

TEST_CASE("search over a stream") {
  std::string lines = mhc::emit_graph6(mhc::build_wheel(6).graph()) + "\n" +
                      mhc::emit_graph6(mhc::Graph::cycle(6)) + "\n";
  auto rep = run("search --stdin-graph6", lines);
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("\"mhc_count\":1") != std::string::npos);
  CHECK(rep.out.find("\"source\":\"stream\"") != std::string::npos);

  auto hunt = run("search --stdin-graph6 --hunt-min-degree-4", lines);
  CHECK(hunt.out.find("\"found\":false") != std::string::npos);
}

TEST_CASE("stats") {
  auto rep = run("stats", mhc::emit_graph6(mhc::Graph::cycle(5)) + "\n");
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("\"kappa\":2") != std::string::npos);
  CHECK(rep.out.find("\"degrees\":[2,2,2,2,2]") != std::string::npos);

  auto el = run("stats --input-format edgelist", "3 2\n0 1\n1 2\n");
  CHECK(el.out.find("\"m\":2") != std::string::npos);
}

TEST_CASE("reruns are byte-identical regardless of workers") {
  auto a = run("search 6 --workers 1");
  auto b = run("search 6 --workers 4");
  auto c = run("search 6 --workers 4");
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);

  auto v1 = run("verify-formulas 8 4 --format records");
  auto v2 = run("verify-formulas 8 4 --format records");
  CHECK(v1.out == v2.out);
}
