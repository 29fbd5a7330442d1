#include "tropcram/assignment.hpp"

#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tropcram/io.hpp"

using namespace tropcram;
using namespace tropcram::testing;

namespace {

MpMat parse_mpmat(const std::string& text) {
  std::istringstream in(text);
  return to_mpmat(read_matrix_file(in, "<test>"));
}

Mat parse_mat(const std::string& text) {
  std::istringstream in(text);
  return to_mat(read_matrix_file(in, "<test>"));
}

bool oracle_multiple_optima(const MpMat& M) { return oracle_optimal_perms(M).size() > 1; }

bool oracle_mixed_parity(const MpMat& M) {
  auto perms = oracle_optimal_perms(M);
  bool odd = false, even = false;
  for (const auto& p : perms) (perm_odd(p) ? odd : even) = true;
  return odd && even;
}

}  // namespace

TEST_CASE("tight graphs") {
  TightGraph G = tight_graph(MpMat::identity(2));
  CHECK(G.arcs[0] == std::vector<int>{0});
  CHECK(G.arcs[1] == std::vector<int>{1});

  TightGraph full = tight_graph(parse_mpmat("semiring rmax\n2 2\n0 0\n0 0\n"));
  CHECK(full.arcs[0] == std::vector<int>{0, 1});
  CHECK(full.arcs[1] == std::vector<int>{0, 1});

  TightGraph slack = tight_graph(parse_mpmat("semiring rmax\n2 2\n0 -1\n-1 0\n"));
  CHECK(slack.arcs[0] == std::vector<int>{0});
  CHECK(slack.arcs[1] == std::vector<int>{1});

  CHECK_THROWS_AS(tight_graph(MpMat(2, 2)), std::domain_error);
}

TEST_CASE("multiple optima = a non-loop cycle") {
  CHECK(!has_multiple_optima(tight_graph(MpMat::identity(3))));
  CHECK(has_multiple_optima(tight_graph(parse_mpmat("semiring rmax\n2 2\n0 0\n0 0\n"))));

  TightGraph g3;
  g3.n = 3;
  g3.arcs = {{0, 1}, {1, 2}, {0, 2}};  // loops plus the 3-cycle 0->1->2->0
  CHECK(has_multiple_optima(g3));

  Rng rng(67);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng.below(7));
    MpMat M = random_mpmat(rng, n, n, 3, 15);
    if (oracle_permanent(M).is_bottom()) continue;
    CHECK(has_multiple_optima(tight_graph(M)) == oracle_multiple_optima(M));
  }
}

TEST_CASE("mixed-parity optima = an even cycle") {
  CHECK(has_odd_optimum_pair(tight_graph(parse_mpmat("semiring rmax\n2 2\n0 0\n0 0\n"))));

  TightGraph g3;
  g3.n = 3;
  g3.arcs = {{0, 1}, {1, 2}, {0, 2}};  // only a 3-cycle: every deviation stays even
  CHECK(!has_odd_optimum_pair(g3));

  TightGraph g5;
  g5.n = 5;
  g5.arcs = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 4}};  // 3-cycle plus a disjoint 2-cycle
  CHECK(has_odd_optimum_pair(g5));

  Rng rng(71);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng.below(7));
    MpMat M = random_mpmat(rng, n, n, 3, 15);
    if (oracle_permanent(M).is_bottom()) continue;
    CHECK(has_odd_optimum_pair(tight_graph(M)) == oracle_mixed_parity(M));
  }

  std::vector<std::vector<int>> big(25);
  CHECK_THROWS_AS(
      enumerate_cycles(big, [](const std::vector<int>&) { return true; }),
      std::invalid_argument);
}

TEST_CASE("bi-valued determinant shortcuts") {
  Semiring T = Semiring::t2();
  CHECK(det_t2(parse_mat("semiring t2\n2 2\nt1(0) t1(0)\nt1(0) t1(0)\n")) == T.parse("t2(0)"));
  CHECK(det_t2(parse_mat("semiring t2\n2 2\nt1(0) t1(-1)\nt1(-1) t1(0)\n")) == T.parse("t1(0)"));
  CHECK(det_t2(parse_mat("semiring t2\n2 2\nt2(0) z\nz t1(0)\n")) == T.parse("t2(0)"));
  CHECK(det_t2(parse_mat("semiring t2\n2 2\nz z\nt1(0) t1(0)\n")) == T.zero());

  Rng rng(73);
  for (int t = 0; t < 250; ++t) {
    int n = 1 + static_cast<int>(rng.below(5));
    Mat A = random_mat(T, rng, n, n, 6, 20, 25);
    CHECK(det_t2(A) == det(A));
  }
}

TEST_CASE("signed determinant of a nonnegative matrix") {
  Semiring S = Semiring::smax();
  CHECK(det_sign_rmax(parse_mpmat("semiring rmax\n2 2\n0 0\n0 0\n")) == S.parse("b(0)"));
  CHECK(det_sign_rmax(parse_mpmat("semiring rmax\n2 2\n0 -1\n-1 0\n")) == S.parse("p(0)"));
  CHECK(det_sign_rmax(parse_mpmat("semiring rmax\n2 2\n-1 0\n0 -1\n")) == S.parse("n(0)"));
  CHECK(det_sign_rmax(MpMat(2, 2)) == S.zero());

  Rng rng(79);
  for (int t = 0; t < 250; ++t) {
    int n = 1 + static_cast<int>(rng.below(5));
    MpMat M = random_mpmat(rng, n, n, 5, 20);
    CHECK(det_sign_rmax(M) == oracle_det(lift_matrix(S, M)));
  }
}

TEST_CASE("signed determinant in polynomial time") {
  Semiring S = Semiring::smax();
  Mat ex = parse_mat(
      "semiring smax\n3 3\n"
      "p(5) n(0) p(3)\n"
      "p(1) p(3) n(1)\n"
      "p(3) n(2) b(1)\n");
  CHECK(det_smax(ex) == S.parse("b(9)"));
  CHECK(det_smax(parse_mat("semiring smax\n2 2\np(1) z\nz p(2)\n")) == S.parse("p(3)"));
  CHECK(det_smax(parse_mat("semiring smax\n2 2\np(0) n(0)\np(0) p(0)\n")) == S.parse("p(0)"));

  Rng rng(83);
  for (int t = 0; t < 250; ++t) {
    int n = 1 + static_cast<int>(rng.below(5));
    Mat A = random_mat(S, rng, n, n, 5, 20, 25);
    CHECK_MESSAGE(det_smax(A) == det(A), format_matrix(A));
  }

  // Adversarial tie pressure: every entry at one modulus, so the whole
  // computation is sign accounting over a dense tight graph.
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.below(6));
    Mat A(S, n, n);
    for (Elem& e : A.a) {
      switch (rng.below(4)) {
        case 0: e = S.parse("p(0)"); break;
        case 1: e = S.parse("n(0)"); break;
        case 2: e = S.parse("b(0)"); break;
        default: e = S.zero(); break;
      }
    }
    CHECK_MESSAGE(det_smax(A) == det(A), format_matrix(A));
  }
}
