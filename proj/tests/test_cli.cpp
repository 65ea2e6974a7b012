#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#ifndef QUASICUT_SAMPLE_DIR
#define QUASICUT_SAMPLE_DIR "samples"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr interleaved
};

std::string cli_path() {
  const char* bin = std::getenv("QUASICUT_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempFile {
 public:
  TempFile(const std::string& tag, const std::string& content) {
    path_ = "/tmp/quasicut_test_" + std::to_string(getpid()) + "_" + tag;
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const std::vector<std::string> kExamples = {"kite", "square-diagonal",
                                            "quadrant-blowup", "arbitrary-c2"};

}  // namespace

TEST_CASE("analyze runs on every builtin example") {
  for (const auto& name : kExamples) {
    RunResult r = run_cli("analyze --example " + name);
    INFO(name << ": " << r.out);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "pointed: yes, simple: yes"));
    CHECK(has_line(r.out, "dimension: 2"));
  }
}

TEST_CASE("kite presentation output") {
  RunResult r = run_cli("delzant --example kite");
  INFO(r.out);
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "u = sqrt(5/2 + 1/2*sqrt5)"));
  CHECK(has_line(r.out, "combinatorial type: 4 facets, 4 vertices, simplex: no"));
  CHECK(has_line(r.out, "relation rank: 1"));
  CHECK(has_line(r.out, "(-1, -1, -1, -1, -1)"));
  CHECK(has_line(r.out, "free rank: 4"));
  CHECK(has_line(r.out, "  [3] (-1, -1, -1, -1, 0)"));
  CHECK(has_line(r.out, "level system (2 rows):"));
  CHECK(has_line(r.out,
                 "1|z0|^2 + (-1/2 + 1/2*sqrt5)|z2|^2 + (1/2 - 1/2*sqrt5)|z3|^2 = "
                 "3/2 - 1/2*sqrt5"));
  CHECK(has_line(r.out, "1|z1|^2 + (-1/2 + 1/2*sqrt5)|z2|^2 + 1|z3|^2 = 1"));
  CHECK(has_line(r.out, "smooth: no"));
  CHECK(has_line(r.out, "fixed points: 4"));
}

TEST_CASE("kite cut output") {
  RunResult r = run_cli("cut --example kite");
  INFO(r.out);
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "line group along (1, 0): dense"));
  CHECK(has_line(r.out, "scalar generators: 1/2 + 1/2*sqrt5, sqrt5"));
  CHECK(has_line(r.out, "Y over the chart basis: (1/2 - 1/2*sqrt5, -1)"));
  // the two halves carry the triangle plane in mirrored forms
  CHECK(has_line(r.out, "1|z0|^2 + (1/2 + 1/2*sqrt5)|z1|^2 + (1/2 + 1/2*sqrt5)|z2|^2 = 1"));
  CHECK(has_line(r.out, "1|z0|^2 + (-1/2 + 1/2*sqrt5)|z1|^2 + 1|z2|^2 = -1/2 + 1/2*sqrt5"));
  CHECK(has_line(r.out, "facet origins: 0 1 4"));
  CHECK(has_line(r.out, "facet origins: 2 3 4"));
  CHECK(has_line(r.out, "input vertices on the hyperplane: 1 2"));
  CHECK(has_line(r.out, "slice vertices: 2"));
  CHECK(has_line(r.out, "fixed input vertices: 1 2"));
}

TEST_CASE("square diagonal cut output") {
  RunResult r = run_cli("cut --example square-diagonal");
  INFO(r.out);
  REQUIRE(r.exit_code == 0);
  // the same simplex row appears once per half
  const std::string row = "1|z0|^2 + 1|z1|^2 + 1|z2|^2 = 1";
  std::size_t first = r.out.find(row);
  REQUIRE(first != std::string::npos);
  CHECK(r.out.find(row, first + row.size()) != std::string::npos);
  CHECK(has_line(r.out, "line group along (1, 1): trivial (order 1)"));
  CHECK(has_line(r.out, "smooth: yes"));
}

TEST_CASE("quadrant blowup output") {
  RunResult r = run_cli("blowup --example quadrant-blowup");
  INFO(r.out);
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "blow-up vertex: [0] (0, 0)"));
  CHECK(has_line(r.out, "dual pairings: (1, 1)"));
  CHECK(has_line(r.out, "admissible: yes"));
  CHECK(has_line(r.out, "largest simplex-type level: unbounded"));
  CHECK(has_line(r.out, "the plus side is the blown-up model, the minus side the sliced-off corner"));
  CHECK(has_line(r.out, "chart group Gamma: trivial"));
  CHECK(has_line(r.out, "dual pairings with Y: (1, 1)"));
  // rotation exponents of the two pieces differ only in the cut slot
  CHECK(has_line(r.out, "(1, 1, -1)"));
  CHECK(has_line(r.out, "(1, 1, 1)"));
  CHECK(has_line(r.out, "1 -> (1, 1, 0, 0)"));
}

TEST_CASE("arbitrary cut output") {
  RunResult r = run_cli("arbitrary-cut --example arbitrary-c2");
  INFO(r.out);
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "extended: yes"));
  CHECK(has_line(r.out, "quotient group Gamma: free rank 1"));
  CHECK(has_line(r.out, "line group along (1, 1/2 + 1/2*sqrt5): trivial (order 1)"));
  CHECK(has_line(r.out, "scalar generators: 1"));
  CHECK(has_line(r.out, "rotation exponents (chart order 0 1 2): (1, 1/2 + 1/2*sqrt5, 0)"));
  CHECK(has_line(r.out, "1|z0|^2 + (1/2 + 1/2*sqrt5)|z1|^2 + 1|z2|^2 = 1"));
  CHECK(has_line(r.out, "  [0] free rank 1"));
}

TEST_CASE("example listing matches the sample files") {
  RunResult list = run_cli("example");
  REQUIRE(list.exit_code == 0);
  for (const auto& name : kExamples) CHECK(has_line(list.out, name + " - "));

  for (const auto& name : kExamples) {
    RunResult r = run_cli("example " + name);
    REQUIRE(r.exit_code == 0);
    std::string sample = read_file(std::string(QUASICUT_SAMPLE_DIR) + "/" + name + ".qc");
    CHECK(r.out == sample);
  }
}

TEST_CASE("files and examples are interchangeable") {
  std::string sample = std::string(QUASICUT_SAMPLE_DIR) + "/kite.qc";
  RunResult by_file = run_cli("cut --input " + sample);
  RunResult by_name = run_cli("cut --example kite");
  CHECK(by_file.exit_code == 0);
  CHECK(by_file.out == by_name.out);
}

TEST_CASE("svg rendering") {
  TempFile svg("render.svg", "");
  RunResult r = run_cli("render --example kite --svg " + svg.path());
  REQUIRE(r.exit_code == 0);
  std::string body = read_file(svg.path());
  CHECK(body.rfind("<svg", 0) == 0);
  CHECK(body.find("polygon") != std::string::npos);
  CHECK(body.find("dash") != std::string::npos);  // the cut hyperplane overlay

  RunResult direct = run_cli("render --example square-diagonal");
  CHECK(direct.exit_code == 0);
  CHECK(direct.out.rfind("<svg", 0) == 0);
}

TEST_CASE("usage and parse failures exit with 2") {
  CHECK(run_cli("cut --example no-such-example").exit_code == 2);
  CHECK(run_cli("cut").exit_code == 2);                 // no input at all
  CHECK(run_cli("cut --bogus-flag").exit_code == 2);    // unknown option
  CHECK(run_cli("no-such-command").exit_code == 2);     // unknown subcommand
  CHECK(run_cli("cut --input /no/such/file.qc").exit_code == 2);

  TempFile bad("bad.qc", "dim 2\nfacet (1 >= 0\n");
  RunResult r = run_cli("analyze --input " + bad.path());
  CHECK(r.exit_code == 2);
  CHECK(has_line(r.out, "parse error"));
  CHECK(has_line(r.out, "line 2"));
}

TEST_CASE("validation failures exit with 1") {
  // the hyperplane misses the square entirely
  TempFile miss("miss.qc",
                "dim 2\n"
                "generator (1, 0)\n"
                "generator (0, 1)\n"
                "facet (1, 0) >= 0\n"
                "facet (0, 1) >= 0\n"
                "facet (-1, 0) >= -1\n"
                "facet (0, -1) >= -1\n"
                "cut Y (1, 1) epsilon 5\n");
  RunResult r = run_cli("cut --input " + miss.path());
  CHECK(r.exit_code == 1);
  CHECK(has_line(r.out, "error:"));

  // blow-up direction pointing out of the corner cone
  TempFile out_of_cone("inadmissible.qc",
                       "dim 2\n"
                       "generator (1, 0)\n"
                       "generator (0, 1)\n"
                       "facet (1, 0) >= 0\n"
                       "facet (0, 1) >= 0\n"
                       "blowup vertex (0, 0) Y (1, -1) epsilon 1\n");
  RunResult b = run_cli("blowup --input " + out_of_cone.path());
  CHECK(b.exit_code == 1);
  CHECK(has_line(b.out, "admissible: no"));
}

TEST_CASE("example commands are deterministic") {
  const std::vector<std::string> cmds = {
      "analyze --example kite",
      "delzant --example kite",
      "cut --example kite",
      "cut --example square-diagonal",
      "blowup --example quadrant-blowup",
      "arbitrary-cut --example arbitrary-c2",
      "render --example kite",
  };
  for (const auto& c : cmds) {
    RunResult a = run_cli(c);
    RunResult b = run_cli(c);
    INFO(c);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
