// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Every tolerance is exact; the two timed criteria enforce
// their wall-clock budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "test_util.hpp"
#include "tropcram/assignment.hpp"
#include "tropcram/axioms.hpp"
#include "tropcram/geometry.hpp"
#include "tropcram/io.hpp"
#include "tropcram/solvers.hpp"
#include "tropcram/transport.hpp"

using namespace tropcram;
using namespace tropcram::testing;

namespace {

int failures = 0;

struct Criterion {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
};

void report(int number, const std::string& label, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  if (!c.ok) ++failures;
  std::cout << "criterion " << number << ": " << (c.ok ? "PASS" : "FAIL") << " - " << label;
  if (!c.ok) std::cout << " [" << c.why.str() << "]";
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Mat example_matrix() {
  std::istringstream in(
      "semiring smax\n3 3\n"
      "p(5) n(0) p(3)\n"
      "p(1) p(3) n(1)\n"
      "p(3) n(2) b(1)\n");
  return to_mat(read_matrix_file(in, "<example>"));
}

std::vector<Elem> parse_vec(const Semiring& S, const std::vector<std::string>& toks) {
  std::vector<Elem> out;
  for (const auto& t : toks) out.push_back(S.parse(t));
  return out;
}

ChoicePolicy policy(ChoicePolicy::Kind choice, ChoicePolicy::Kind diag) {
  ChoicePolicy p;
  p.choice = choice;
  p.diag = diag;
  return p;
}

// Adjugate of a max-plus matrix through assignment values of the minors;
// shares nothing with the Kleene-star route it is compared against.
MpMat assignment_adjugate(const MpMat& A) {
  int n = A.rows;
  MpMat adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = MaxPlus::unit();
    return adj;
  }
  MpMat minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int r = 0;
      for (int p = 0; p < n; ++p) {
        if (p == j) continue;
        int c = 0;
        for (int q = 0; q < n; ++q) {
          if (q == i) continue;
          minor.at(r, c++) = A.at(p, q);
        }
        ++r;
      }
      adj.at(i, j) = permanent(minor);
    }
  return adj;
}

void criterion1(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  Semiring S = Semiring::smax();
  Mat A = example_matrix();
  std::vector<Elem> b = parse_vec(S, {"n(1)", "b(4)", "p(0)"});

  SolveReport rep = jacobi_solve(A, b);
  c.require(rep.trace.size() == 3, "expected three iterates");
  if (rep.trace.size() == 3) {
    c.require(rep.trace[0] == parse_vec(S, {"n(-4)", "p(1)", "p(-1)"}), "first iterate");
    c.require(rep.trace[1] == parse_vec(S, {"n(-3)", "p(1)", "p(2)"}), "second iterate");
    c.require(rep.trace[2] == parse_vec(S, {"n(0)", "p(1)", "p(2)"}), "third iterate");
  }
  std::vector<MaxPlus> expect_mod = {MaxPlus(Rat(0)), MaxPlus(Rat(1)), MaxPlus(Rat(2))};
  c.require(modulus_vector(S, *rep.solution) == expect_mod, "|x| != (0,1,2)");
  Elem d = det(A);
  std::vector<Elem> adjb = mat_vec(adjugate(A), b);
  for (int i = 0; i < 3; ++i)
    c.require(d.m.inverse() * adjb[i].m == expect_mod[i], "|det|^-1|adj b| != (0,1,2)");

  std::set<std::string> seen;
  for (auto choice : {ChoicePolicy::PreferPositive, ChoicePolicy::PreferNegative})
    for (auto diag : {ChoicePolicy::PreferPositive, ChoicePolicy::PreferNegative})
      seen.insert(format_tokens(S, *jacobi_solve(A, b, policy(choice, diag)).solution));
  c.require(seen == std::set<std::string>{"n(0) p(1) p(2)", "p(0) n(1) n(2)", "p(0) p(1) n(2)",
                                          "n(0) n(1) p(2)"},
            "policy runs must produce exactly the four published solutions");

  SolveReport gs = gauss_seidel_solve(A, b);
  c.require(*gs.solution == parse_vec(S, {"n(0)", "p(1)", "p(2)"}), "Gauss-Seidel limit");
  c.require(gs.sweeps == 2, "Gauss-Seidel must settle in exactly 2 sweeps");

  double dt = seconds_since(t0);
  c.require(dt < 1.0, "exceeded the 1 s budget");
}

void criterion2(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(2025);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng.below(8));
    MpMat M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        M.at(i, j) = i == j ? MaxPlus::unit()
                            : (rng.below(5) == 0 ? MaxPlus::bottom()
                                                 : MaxPlus(Rat(-static_cast<long long>(
                                                       rng.below(9)))));
    MpMat star = yoeli_adjugate(M);
    MpMat adj = assignment_adjugate(M);
    for (size_t k = 0; k < star.a.size(); ++k)
      c.require(star.a[k] == adj.a[k], "adjugate and star disagree");
    if (!c.ok) return;
  }
  double dt = seconds_since(t0);
  c.require(dt < 10.0, "exceeded the 10 s budget");
}

void criterion3(Criterion& c) {
  Rng rng(777);
  Semiring S = Semiring::smax(), T = Semiring::t2();
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng.below(7));
    Mat A = random_mat(S, rng, n, n, 6, 15, 20);
    if (det_smax(A) != det(A)) {
      c.require(false, "det_smax mismatch:\n" + format_matrix(A));
      return;
    }
  }
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng.below(7));
    Mat A = random_mat(T, rng, n, n, 6, 15, 20);
    if (det_t2(A) != det(A)) {
      c.require(false, "det_t2 mismatch:\n" + format_matrix(A));
      return;
    }
  }
}

void criterion4(Criterion& c) {
  Rng rng(31337);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng.below(6));
    MpMat C(n - 1, n);
    for (MaxPlus& e : C.a) e = MaxPlus(Rat(rng.below(21) - 10));
    CrossCheckReport rep = cross_check_permanents(C);
    if (!rep.ok()) {
      c.require(false, "three-way disagreement: " + rep.first_failure);
      return;
    }
    // Dual invariants on every instance.
    TransportSolution sol = solve_transport(TransportProblem{C});
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n; ++j) {
        c.require(C.at(i, j).v <= sol.dual.u[i] + sol.dual.v[j], "dual infeasible");
        if (!sol.y[i][j].is_zero())
          c.require(C.at(i, j).v == sol.dual.u[i] + sol.dual.v[j],
                    "complementary slackness violated");
      }
    std::vector<MaxPlus> per = cramer_permanents_transport(C);
    Rat shift(static_cast<long long>(rng.below(13)) - 6);
    Rat usum(0), vsum(0);
    for (const Rat& x : sol.dual.u) usum = usum + (x + shift);
    for (const Rat& x : sol.dual.v) vsum = vsum + (x - shift);
    for (int k = 0; k < n; ++k)
      c.require(per[k] == MaxPlus(usum + vsum - (sol.dual.v[k] - shift)),
                "formula not shift-invariant");
    if (!c.ok) return;
  }
}

void criterion5(Criterion& c) {
  Rng rng(555);
  for (const Semiring& S : {Semiring::smax(), Semiring::t2()}) {
    int done = 0;
    while (done < 150) {
      int n = 1 + static_cast<int>(rng.below(6));
      Mat A = random_mat(S, rng, n, n, 6, 15, 20);
      if (permanent(modulus_matrix(A)).is_bottom()) continue;
      ++done;
      std::vector<Elem> b(n);
      for (Elem& e : b) e = random_elem(S, rng, 6, 15, 25);
      Elem d = det(A);
      std::vector<Elem> adjb = mat_vec(adjugate(A), b);
      for (bool gs : {false, true}) {
        SolveReport rep = gs ? gauss_seidel_solve(A, b) : jacobi_solve(A, b);
        const std::vector<Elem>& x = *rep.solution;
        std::vector<Elem> Ax = mat_vec(A, x);
        for (int i = 0; i < n; ++i) c.require(S.balance(Ax[i], b[i]), "A x does not balance b");
        std::vector<Elem> prev(n, S.zero());
        for (const auto& it : rep.trace) {
          for (int i = 0; i < n; ++i) c.require(S.preorder_le(prev[i], it[i]), "not monotone");
          prev = it;
        }
        // Stationarity within n sweeps: the n-th iterate already carries the
        // limit moduli prescribed by the adjugate identity below.
        c.require(static_cast<int>(rep.trace.size()) <= n, "more than n sweeps recorded");
        for (int i = 0; i < n; ++i) {
          c.require(x[i].m == d.m.inverse() * adjb[i].m, "|x| != |det|^-1 |adj b|");
          if (S.base() == BaseKind::N2)
            c.require(x[i] == S.iota(d.m.inverse() * adjb[i].m),
                      "bi-valued output must be the lifted modulus vector");
        }
        if (!c.ok) return;
      }
    }
  }
}

void criterion6(Criterion& c) {
  Rng rng(999);
  Semiring S = Semiring::smax();
  int done = 0;
  while (done < 200) {
    int n = 2 + static_cast<int>(rng.below(4));
    Mat A = random_mat(S, rng, n, n, 5, 15, 15);
    switch (rng.below(3)) {
      case 0: {
        int i = static_cast<int>(rng.below(n)), j = (i + 1) % n;
        Elem f = random_thin(S, rng, 3, 0);
        for (int k = 0; k < n; ++k) A.at(j, k) = S.mul(f, A.at(i, k));
        break;
      }
      case 1: {
        int i = static_cast<int>(rng.below(n));
        A.at(i, i) = S.make(BoolC::B, MaxPlus(Rat(9)));
        break;
      }
      default:
        break;
    }
    Elem d = det(A);
    if (d.is_zero() || !S.is_balanced(d)) continue;
    ++done;
    SolveReport rep = homogeneous_solve(A);
    if (!rep.solution) {
      c.require(false, "no solution returned for a balanced determinant");
      return;
    }
    bool nonzero = false;
    for (const Elem& e : *rep.solution) {
      c.require(S.is_thin(e), "solution entry not thin");
      nonzero = nonzero || !e.is_zero();
    }
    c.require(nonzero, "zero vector returned");
    for (const Elem& e : mat_vec(A, *rep.solution))
      c.require(S.is_balanced(e), "A x does not balance zero");
    if (!c.ok) return;
  }

  done = 0;
  while (done < 200) {
    int n = 2 + static_cast<int>(rng.below(2));
    Mat A = random_mat(S, rng, n, n, 4, 10, 10);
    Elem d = det(A);
    if (d.is_zero() || S.is_balanced(d)) continue;
    ++done;
    SolveReport rep = homogeneous_solve(A);
    c.require(rep.status == SolveStatus::NoThinCertificate, "thin determinant misclassified");
    // Exhaustive sign patterns at the adjugate-column moduli find nothing.
    Mat adj = adjugate(A);
    for (int k = 0; k < n; ++k) {
      bool all_bottom = true;
      for (int i = 0; i < n; ++i) all_bottom = all_bottom && adj.at(i, k).is_zero();
      if (all_bottom) continue;
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Elem> x(n);
        for (int i = 0; i < n; ++i) {
          x[i] = S.iota(adj.at(i, k).m);
          if (mask & (1 << i)) x[i] = S.negate(x[i]);
        }
        bool solves = true;
        for (const Elem& e : mat_vec(A, x)) solves = solves && S.is_balanced(e);
        c.require(!solves, "sign search found a thin solution despite a thin determinant");
      }
    }
    if (!c.ok) return;
  }
}

void criterion7(Criterion& c) {
  // Exhaustive elimination laws and the published tables on the finite bases.
  for (const Semiring& S : {Semiring::sbool(), Semiring::n2()}) {
    AxiomReport r = check_axioms(S, CheckMode::Exhaustive);
    for (const char* id : {"thin-unique", "thin-mult", "weak-trans-systems"}) {
      const PropertyResult* p = r.find(id);
      c.require(p && p->pass, S.name() + " fails " + id);
    }
    c.require(r.strong_elimination, S.name() + " not classified strong");
  }
  {
    Semiring B = Semiring::sbool();
    const char* names[4] = {"z", "p", "n", "b"};
    const char* add[4][4] = {{"z", "p", "n", "b"},
                             {"p", "p", "b", "b"},
                             {"n", "b", "n", "b"},
                             {"b", "b", "b", "b"}};
    const char* mul[4][4] = {{"z", "z", "z", "z"},
                             {"z", "p", "n", "b"},
                             {"z", "n", "p", "b"},
                             {"z", "b", "b", "b"}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        c.require(B.add(B.parse(names[i]), B.parse(names[j])) == B.parse(add[i][j]),
                  "sign addition table");
        c.require(B.mul(B.parse(names[i]), B.parse(names[j])) == B.parse(mul[i][j]),
                  "sign multiplication table");
      }
  }
  // Sampled monotone laws on the three extensions.
  for (const Semiring& S : {Semiring::smax(), Semiring::t2(), Semiring::phasemax()}) {
    AxiomReport r = check_axioms(S, CheckMode::Sampled, 2000000, 11);
    for (const char* id : {"order-witness", "chain-finite", "order-equal", "diag-invert"}) {
      const PropertyResult* p = r.find(id);
      c.require(p && p->pass,
                S.name() + " fails " + id + (p && !p->witness.empty()
                                                 ? " (witness " + p->witness + ")"
                                                 : ""));
    }
  }
  // The phase extension must be flagged as failing the homogeneous family.
  AxiomReport rp = check_axioms(Semiring::phasemax(), CheckMode::Sampled, 2000000, 11);
  for (const char* id : {"invertible-thin-field", "balanced-sum-pair", "balanced-absorb"}) {
    const PropertyResult* p = rp.find(id);
    c.require(p && !p->pass, std::string("phasemax unexpectedly satisfies ") + id);
  }
  c.require(!rp.homogeneous_family, "phasemax not flagged");
}

void criterion8(Criterion& c) {
  Rng rng(808);
  Semiring S = Semiring::smax(), T = Semiring::t2();
  int done = 0;
  while (done < 200) {
    const Semiring& R = done % 2 ? S : T;
    int n = 2 + static_cast<int>(rng.below(4));
    Mat V(R, n, n - 1);
    for (Elem& e : V.a) e = random_thin(R, rng, 8, 5);
    if (!general_position(V)) continue;
    ++done;
    Hyperplane H = hyperplane_through(V);
    for (int j = 0; j < n - 1; ++j) {
      std::vector<Elem> col(n);
      for (int i = 0; i < n; ++i) col[i] = V.at(i, j);
      c.require(contains(H, col), "a defining point is missing from its hyperplane");
    }
    if (!c.ok) return;
  }

  // Meet versus the exhaustive sign-pattern search in dimension three.
  done = 0;
  while (done < 60) {
    Mat W(S, 2, 3);
    for (Elem& e : W.a) e = random_thin(S, rng, 6, 0);
    Mat Tr(S, 3, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) Tr.at(j, i) = W.at(i, j);
    if (!general_position(Tr)) continue;
    ++done;
    std::vector<Hyperplane> hs;
    for (int i = 0; i < 2; ++i)
      hs.push_back(make_hyperplane(S, {W.at(i, 0), W.at(i, 1), W.at(i, 2)}));
    MeetResult got = meet_hyperplanes(hs);
    std::vector<MaxPlus> cand = cramer_permanents_brute(modulus_matrix(W));
    MaxPlus shift;
    for (const MaxPlus& x : cand)
      if (!x.is_bottom()) {
        shift = x.inverse();
        break;
      }
    int count = 0;
    std::vector<int> found;
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
        found.clear();
        for (int i = 0; i < 3; ++i) found.push_back(mask & (1 << i) ? -1 : 1);
      }
    }
    c.require(count == 2, "sign pattern not unique up to global negation");
    bool same = got.eps.eps == found;
    bool negated = !found.empty();
    for (int i = 0; i < 3 && negated; ++i) negated = got.eps.eps[i] == -found[i];
    c.require(same || negated, "meet pattern disagrees with the brute-force search");
    for (int i = 0; i < 3; ++i)
      c.require(got.point[i] == cand[i] * shift, "meet point disagrees");
    if (!c.ok) return;
  }

  // The sign-transformation example round-trips.
  Hyperplane H = make_hyperplane(S, parse_vec(S, {"p(0)", "n(0)", "n(0)"}));
  SignPattern eps{{-1, -1, 1}};
  Hyperplane Ht = sign_transform(H, eps);
  c.require(Ht.params == parse_vec(S, {"n(0)", "p(0)", "n(0)"}),
            "transformed parameters wrong");
  c.require(sign_transform(Ht, eps).params == H.params, "double transform is not the identity");
}

}  // namespace

int main() {
  report(1, "worked 3x3 system: exact iterates, all policies, two sweeps", criterion1);
  report(2, "adjugate = Kleene star on 500 normalized matrices (n <= 8)", criterion2);
  report(3, "polynomial determinants match brute force (500 + 500, n <= 7)", criterion3);
  report(4, "three-way Cramer permanents + dual invariants (200, n <= 7)", criterion4);
  report(5, "iteration post-conditions on 300 systems (n <= 6)", criterion5);
  report(6, "homogeneous solutions and certificates (200 + 200)", criterion6);
  report(7, "axiom suites: exhaustive bases, sampled extensions, phase flags", criterion7);
  report(8, "geometry: points on hyperplanes, meets, sign transforms", criterion8);
  if (failures == 0)
    std::cout << "acceptance: all criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
  return failures;
}
