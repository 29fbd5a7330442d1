#include "tropcram/geometry.hpp"

#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tropcram/assignment.hpp"
#include "tropcram/io.hpp"
#include "tropcram/transport.hpp"

using namespace tropcram;
using namespace tropcram::testing;

namespace {

std::vector<Elem> parse_vec(const Semiring& S, const std::vector<std::string>& toks) {
  std::vector<Elem> out;
  for (const auto& t : toks) out.push_back(S.parse(t));
  return out;
}

// A thin matrix in general position, by rejection sampling.
Mat random_general_position(const Semiring& S, Rng& rng, int n) {
  while (true) {
    Mat V(S, n, n - 1);
    for (Elem& e : V.a) e = random_thin(S, rng, 8, 5);
    if (general_position(V)) return V;
  }
}

}  // namespace

TEST_CASE("membership") {
  Semiring T = Semiring::t2();
  Hyperplane H = make_hyperplane(T, parse_vec(T, {"t1(0)", "t1(0)", "t1(0)"}));
  CHECK(contains(H, parse_vec(T, {"t1(0)", "t1(0)", "t1(-1)"})));
  CHECK(!contains(H, parse_vec(T, {"t1(1)", "t1(0)", "t1(0)"})));

  Semiring S = Semiring::smax();
  Hyperplane Hs = make_hyperplane(S, parse_vec(S, {"p(0)", "n(0)"}));
  CHECK(contains(Hs, parse_vec(S, {"p(3)", "p(3)"})));
  CHECK(!contains(Hs, parse_vec(S, {"p(3)", "p(2)"})));
  CHECK_THROWS_AS(contains(Hs, parse_vec(S, {"p(3)"})), std::invalid_argument);
  CHECK_THROWS_AS(make_hyperplane(S, parse_vec(S, {"z", "z"})), std::invalid_argument);
  CHECK_THROWS_AS(make_hyperplane(S, parse_vec(S, {"b(0)", "p(0)"})), std::invalid_argument);
}

TEST_CASE("general position") {
  Semiring S = Semiring::smax();
  Mat V(S, 3, 2);
  V.at(0, 0) = S.parse("p(0)");
  V.at(1, 1) = S.parse("p(0)");
  V.at(2, 0) = S.parse("p(-5)");
  V.at(2, 1) = S.parse("p(-7)");
  CHECK(general_position(V));

  Mat W = V;
  for (int i = 0; i < 3; ++i) W.at(i, 1) = W.at(i, 0);  // equal columns
  CHECK(!general_position(W));
  CHECK(!degenerate_minors(W).empty());

  Rng rng(131);
  int gp = 0;
  for (int t = 0; t < 40; ++t) {
    Mat R(S, 4, 3);
    for (Elem& e : R.a) e = random_thin(S, rng, 20, 0);
    gp += general_position(R) ? 1 : 0;
  }
  CHECK(gp >= 35);  // generic data is almost surely in general position
}

TEST_CASE("the hyperplane through given points") {
  Semiring S = Semiring::smax();
  Mat P(S, 2, 1);
  P.at(0, 0) = S.parse("p(0)");
  P.at(1, 0) = S.parse("p(0)");
  Hyperplane H = hyperplane_through(P);
  CHECK(H.params[0].m == H.params[1].m);
  CHECK(std::get<BoolC>(H.params[0].c) != std::get<BoolC>(H.params[1].c));

  // Bi-valued, two points in dimension three: parameter moduli are the
  // maximal-minor permanents of the point matrix.
  Semiring T = Semiring::t2();
  Mat V(T, 3, 2);
  V.at(0, 0) = T.parse("t1(0)");
  V.at(1, 0) = T.parse("t1(0)");
  V.at(2, 0) = T.parse("t1(-1)");
  V.at(0, 1) = T.parse("t1(0)");
  V.at(1, 1) = T.parse("t1(-1)");
  V.at(2, 1) = T.parse("t1(0)");
  Hyperplane HT = hyperplane_through(V);
  MpMat M = modulus_matrix(V);
  for (int k = 0; k < 3; ++k) {
    MpMat minor(2, 2);
    int r = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == k) continue;
      minor.at(r, 0) = M.at(i, 0);
      minor.at(r, 1) = M.at(i, 1);
      ++r;
    }
    CHECK(HT.params[k].m == oracle_permanent(minor));
  }
  for (int j = 0; j < 2; ++j) {
    std::vector<Elem> col = {V.at(0, j), V.at(1, j), V.at(2, j)};
    CHECK(contains(HT, col));
  }

  Mat bad(S, 2, 1);
  bad.at(0, 0) = S.parse("p(0)");
  CHECK(bad.at(1, 0).is_zero());
  // A zero point column makes the single 1x1 minor zero.
  CHECK_THROWS_AS(hyperplane_through(bad), std::domain_error);

  Rng rng(137);
  for (const Semiring& R : {Semiring::smax(), Semiring::t2()}) {
    for (int t = 0; t < 50; ++t) {
      int n = 2 + static_cast<int>(rng.below(4));
      Mat G = random_general_position(R, rng, n);
      Hyperplane HG = hyperplane_through(G);
      for (int j = 0; j < n - 1; ++j) {
        std::vector<Elem> col(n);
        for (int i = 0; i < n; ++i) col[i] = G.at(i, j);
        CHECK(contains(HG, col));
      }
    }
  }
}

TEST_CASE("sign transformations") {
  Semiring S = Semiring::smax();
  Hyperplane H = make_hyperplane(S, parse_vec(S, {"p(0)", "n(0)", "n(0)"}));
  SignPattern all_plus{{1, 1, 1}};
  CHECK(sign_transform(H, all_plus).params == H.params);

  SignPattern eps{{-1, -1, 1}};
  Hyperplane Ht = sign_transform(H, eps);
  CHECK(Ht.params == parse_vec(S, {"n(0)", "p(0)", "n(0)"}));
  CHECK(sign_transform(Ht, eps).params == H.params);

  CHECK_THROWS_AS(sign_transform(make_hyperplane(Semiring::t2(),
                                                 {Semiring::t2().one(), Semiring::t2().one()}),
                                 SignPattern{{1, -1}}),
                  std::invalid_argument);
}

TEST_CASE("membership transfers through the sign transformation") {
  // x lies in H over the sign extension iff |x| lies in H(sign(x)).
  Semiring S = Semiring::smax();
  Rng rng(139);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng.below(3));
    std::vector<Elem> params(n), x(n);
    bool ok = false;
    for (Elem& e : params) {
      e = random_thin(S, rng, 6, 10);
      ok = ok || !e.is_zero();
    }
    if (!ok) continue;
    for (Elem& e : x) e = random_thin(S, rng, 6, 10);
    Hyperplane H = make_hyperplane(S, params);
    SignPattern eps;
    eps.eps.resize(n);
    std::vector<Elem> absx(n);
    for (int i = 0; i < n; ++i) {
      eps.eps[i] = (!x[i].is_zero() && std::get<BoolC>(x[i].c) == BoolC::N) ? -1 : 1;
      absx[i] = S.iota(x[i].m);
    }
    CHECK(contains(H, x) == contains(sign_transform(H, eps), absx));
  }
}

TEST_CASE("meet of signed hyperplanes") {
  Semiring S = Semiring::smax();
  Hyperplane H = make_hyperplane(S, parse_vec(S, {"p(0)", "n(0)"}));
  MeetResult mr = meet_hyperplanes({H});
  CHECK(mr.eps.eps == std::vector<int>{1, 1});
  CHECK(mr.point == std::vector<MaxPlus>{MaxPlus(Rat(0)), MaxPlus(Rat(0))});
  CHECK(mr.projectively_unique);

  // Exhaustive sign-pattern oracle in dimension three.
  Rng rng(149);
  int done = 0;
  while (done < 50) {
    Mat W(S, 2, 3);
    for (Elem& e : W.a) e = random_thin(S, rng, 6, 0);
    Mat T(S, 3, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) T.at(j, i) = W.at(i, j);
    if (!general_position(T)) continue;
    ++done;
    std::vector<Hyperplane> hs;
    for (int i = 0; i < 2; ++i)
      hs.push_back(make_hyperplane(S, {W.at(i, 0), W.at(i, 1), W.at(i, 2)}));
    MeetResult got = meet_hyperplanes(hs);

    // Candidate moduli: brute-force Cramer permanents of the parameter rows.
    std::vector<MaxPlus> cand = cramer_permanents_brute(modulus_matrix(W));
    MaxPlus shift;
    for (const MaxPlus& c : cand)
      if (!c.is_bottom()) {
        shift = c.inverse();
        break;
      }
    int count = 0;
    std::vector<int> found_eps;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<Elem> x(3);
      for (int i = 0; i < 3; ++i) {
        x[i] = S.iota(cand[i]);
        if (mask & (1 << i)) x[i] = S.negate(x[i]);
      }
      bool in_all = true;
      for (const Hyperplane& h : hs) in_all = in_all && contains(h, x);
      if (in_all) {
        ++count;
        found_eps.clear();
        for (int i = 0; i < 3; ++i) found_eps.push_back(mask & (1 << i) ? -1 : 1);
      }
    }
    // The pattern is unique up to global negation.
    CHECK(count == 2);
    bool same = got.eps.eps == found_eps;
    bool negated = true;
    for (int i = 0; i < 3; ++i) negated = negated && got.eps.eps[i] == -found_eps[i];
    CHECK((same || negated));
    for (int i = 0; i < 3; ++i) CHECK(got.point[i] == cand[i] * shift);
    // The nonnegative point lies on every transformed hyperplane.
    std::vector<Elem> lifted(3);
    for (int i = 0; i < 3; ++i) lifted[i] = S.iota(got.point[i]);
    for (const Hyperplane& h : hs) CHECK(contains(sign_transform(h, got.eps), lifted));

    // Permuting the hyperplanes cannot move the meet.
    MeetResult swapped = meet_hyperplanes({hs[1], hs[0]});
    CHECK(swapped.point == got.point);
    bool eps_same = swapped.eps.eps == got.eps.eps;
    bool eps_neg = true;
    for (int i = 0; i < 3; ++i) eps_neg = eps_neg && swapped.eps.eps[i] == -got.eps.eps[i];
    CHECK((eps_same || eps_neg));
  }

  Mat degenerate(S, 2, 3);
  for (int j = 0; j < 3; ++j) {
    degenerate.at(0, j) = S.parse("p(0)");
    degenerate.at(1, j) = S.parse("p(0)");
  }
  std::vector<Hyperplane> dh = {
      make_hyperplane(S, {degenerate.at(0, 0), degenerate.at(0, 1), degenerate.at(0, 2)}),
      make_hyperplane(S, {degenerate.at(1, 0), degenerate.at(1, 1), degenerate.at(1, 2)})};
  CHECK_THROWS_AS(meet_hyperplanes(dh), std::domain_error);
}

TEST_CASE("columns share a hyperplane exactly when the determinant balances") {
  Semiring S = Semiring::smax();
  Rng rng(151);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng.below(3));
    Mat V(S, n, n);
    for (Elem& e : V.a) e = random_thin(S, rng, 4, 10);
    Elem d = det_smax(V);
    Mat Tr(S, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Tr.at(i, j) = V.at(j, i);
    SolveReport rep = homogeneous_solve(Tr);
    if (S.is_balanced(d)) {
      REQUIRE(rep.solution.has_value());
      Hyperplane H = make_hyperplane(S, *rep.solution);
      for (int j = 0; j < n; ++j) {
        std::vector<Elem> col(n);
        for (int i = 0; i < n; ++i) col[i] = V.at(i, j);
        CHECK(contains(H, col));
      }
    } else {
      CHECK(rep.status == SolveStatus::NoThinCertificate);
    }
  }
}
