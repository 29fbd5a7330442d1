#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tropcram/io.hpp"

// End-to-end checks of the command-line front end: golden outputs for the
// worked 3x3 system, re-parseable matrix output, and the exit-code contract.

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TROPCRAM_BIN) + " " + args + " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int rc = pclose(p);
  r.status = WEXITSTATUS(rc);
  return r;
}

std::string data(const char* name) { return std::string(TROPCRAM_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/tropcram_test_" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("determinant and permanent of the worked example") {
  CHECK(run("det " + data("example3x3_A.mat")).out == "b(9)\n");
  CHECK(run("per " + data("example3x3_A.mat")).out == "9\n");
}

TEST_CASE("iteration trace golden output") {
  RunResult r = run("jacobi " + data("example3x3_A.mat") + " " + data("example3x3_b.vec") +
                    " --policy prefer-positive --trace");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "iter 1: n(-4) p(1) p(-1)\n"
        "iter 2: n(-3) p(1) p(2)\n"
        "iter 3: n(0) p(1) p(2)\n"
        "sweeps: 3\n"
        "solution: n(0) p(1) p(2)\n");
  // Byte-identical across runs.
  CHECK(run("jacobi " + data("example3x3_A.mat") + " " + data("example3x3_b.vec") +
            " --policy prefer-positive --trace")
            .out == r.out);

  RunResult neg = run("jacobi " + data("example3x3_A.mat") + " " + data("example3x3_b.vec") +
                      " --policy prefer-negative");
  CHECK(neg.out ==
        "sweeps: 3\n"
        "solution: p(0) n(1) n(2)\n");

  RunResult gs = run("gauss-seidel " + data("example3x3_A.mat") + " " + data("example3x3_b.vec") +
                     " --policy prefer-positive --trace");
  CHECK(gs.out ==
        "iter 1: n(-4) p(1) p(2)\n"
        "iter 2: n(0) p(1) p(2)\n"
        "iter 3: n(0) p(1) p(2)\n"
        "sweeps: 2\n"
        "solution: n(0) p(1) p(2)\n");
}

TEST_CASE("solve report") {
  RunResult r = run("solve " + data("example3x3_A.mat") + " " + data("example3x3_b.vec"));
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "status: balanced_determinant");
  std::getline(lines, line);
  CHECK(line == "det: b(9)");
  std::getline(lines, line);
  CHECK(line.substr(0, 8) == "cramer: ");
  std::getline(lines, line);
  CHECK(line == "moduli: 0 1 2");
}

TEST_CASE("printed matrices re-parse to equal values") {
  using namespace tropcram;
  RunResult adj = run("adj " + data("example3x3_A.mat"));
  std::istringstream in(adj.out);
  Mat M = to_mat(read_matrix_file(in, "<adj>"));
  CHECK(M.rows == 3);
  // And the star of an rmax matrix round-trips too.
  std::string p = write_temp("star.mat", "semiring rmax\n2 2\n-inf -1\n-2 -inf\n");
  RunResult star = run("star " + p);
  std::istringstream sin(star.out);
  CHECK(to_mpmat(read_matrix_file(sin, "<star>")) ==
        [] {
          MpMat W(2, 2);
          W.at(0, 0) = MaxPlus::unit();
          W.at(0, 1) = MaxPlus(Rat(-1));
          W.at(1, 0) = MaxPlus(Rat(-2));
          W.at(1, 1) = MaxPlus::unit();
          return W;
        }());
}

TEST_CASE("exit codes") {
  // Usage error: missing arguments.
  CHECK(run("det").status == 1);
  // Parse error names the location.
  std::string bad = write_temp("bad.mat", "semiring smax\n2 2\np(1) wat\np(0) p(0)\n");
  RunResult pe = run("det " + bad);
  CHECK(pe.status == 1);
  CHECK(pe.out.find("cannot parse") != std::string::npos);
  // Mathematical infeasibility: exit 2 with the status reported.
  std::string sing = write_temp("sing.mat", "semiring smax\n2 2\np(0) z\np(0) z\n");
  std::string rhs = write_temp("rhs.vec", "semiring smax\n2 1\np(0)\np(1)\n");
  RunResult si = run("solve " + sing + " " + rhs);
  CHECK(si.status == 2);
  CHECK(si.out.find("structurally_singular") != std::string::npos);
  std::string div = write_temp("div.mat", "semiring rmax\n2 2\n1 0\n0 0\n");
  CHECK(run("star " + div).status == 2);
  std::string infe = write_temp("infe.mat", "semiring rmax\n2 3\n-inf 0 0\n-inf 0 0\n");
  CHECK(run("transport " + infe).status == 2);
  CHECK(run("cross-check random --n 3 --cases 4").status == 1);  // seed is mandatory
}

TEST_CASE("random cross-check is reproducible") {
  RunResult a = run("cross-check random --n 4 --cases 20 --seed 7");
  CHECK(a.status == 0);
  CHECK(a.out.substr(0, 9) == "OK 20/20\n");
  CHECK(a.out.find("timings:") != std::string::npos);
  CHECK(run("cross-check random --n 4 --cases 20 --seed 7").out.substr(0, 9) ==
        a.out.substr(0, 9));
}

TEST_CASE("axiom report and remaining commands execute") {
  RunResult ax = run("check-axioms sbool --mode exhaustive");
  CHECK(ax.status == 0);
  CHECK(ax.out.find("elimination: strong") != std::string::npos);

  std::string v = write_temp("pts.mat", "semiring smax\n2 1\np(0)\np(0)\n");
  RunResult hyp = run("hyperplane-through " + v);
  CHECK(hyp.status == 0);
  CHECK(hyp.out.find("semiring smax") != std::string::npos);

  std::string h = write_temp("hyp.mat", "semiring smax\n1 2\np(0) n(0)\n");
  RunResult meet = run("meet " + h);
  CHECK(meet.status == 0);
  CHECK(meet.out ==
        "eps: + +\n"
        "point: 0 0\n");

  std::string hom = write_temp("hom.mat", "semiring smax\n2 2\np(0) p(0)\np(0) p(0)\n");
  RunResult ho = run("homogeneous " + hom);
  CHECK(ho.status == 0);
  CHECK(ho.out.find("status: balanced_determinant") != std::string::npos);

  std::string A = write_temp("ca_A.mat", "semiring rmax\n3 3\n5 0 3\n1 3 1\n3 2 1\n");
  std::string b = write_temp("ca_b.vec", "semiring rmax\n3 1\n1\n4\n0\n");
  CHECK(run("cramer-all " + A + " " + b).out == "9 10 11\n");

  std::string C = write_temp("tr.mat", "semiring rmax\n2 3\n5 0 3\n1 3 1\n");
  RunResult tr = run("transport " + C);
  CHECK(tr.status == 0);
  CHECK(tr.out.find("permanents: 6 6 8") != std::string::npos);

  RunResult sc = run("scale " + A);
  CHECK(sc.status == 0);
  CHECK(sc.out.find("per: 9") != std::string::npos);

  // --semiring lifts rmax inputs into an extension (thin entries, so the
  // determinant of the lifted example keeps the balanced value).
  CHECK(run("det " + A + " --semiring t2").out == "t2(9)\n");
  CHECK(run("det " + A + " --semiring smax").out == "b(9)\n");
  CHECK(run("det " + A).out == "b(9)\n");
}
