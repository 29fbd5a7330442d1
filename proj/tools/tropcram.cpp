// tropcram: batch front-end for linear algebra over extended tropical
// semirings. Exit codes: 0 success, 1 usage or parse error, 2 mathematical
// infeasibility (reported on stdout).

#include <iostream>

#include "CLI11.hpp"
#include "tropcram/assignment.hpp"
#include "tropcram/axioms.hpp"
#include "tropcram/geometry.hpp"
#include "tropcram/io.hpp"
#include "tropcram/solvers.hpp"
#include "tropcram/transport.hpp"

using namespace tropcram;

namespace {

struct Options {
  std::string policy = "prefer-positive";
  std::string diag_sign = "positive";
  std::string semiring_override;
  uint64_t seed = 0;
  bool trace = false;
};

// Apply --semiring: re-read the tokens under the named semiring, lifting
// plain max-plus files into an extension when asked.
Mat override_mat(const MatrixFile& f, const std::string& name) {
  auto s = Semiring::by_name(name);
  if (!s) throw std::runtime_error("unknown semiring '" + name + "'");
  if (f.semiring_name == "rmax") return lift_matrix(*s, to_mpmat(f));
  MatrixFile g = f;
  g.semiring_name = name;
  return to_mat(g);
}

Mat load_mat(const std::string& path, const Options& opt) {
  MatrixFile f = read_matrix_file_path(path);
  if (!opt.semiring_override.empty()) return override_mat(f, opt.semiring_override);
  return to_mat(f);
}

std::vector<Elem> load_vec(const std::string& path, const Options& opt, Semiring* out_s) {
  MatrixFile f = read_matrix_file_path(path);
  if (f.rows != 1 && f.cols != 1)
    throw std::runtime_error("expected a vector (one row or one column) in '" + path + "'");
  if (!opt.semiring_override.empty()) {
    Mat M = override_mat(f, opt.semiring_override);
    if (out_s) *out_s = M.S;
    return M.a;
  }
  return to_vec(f, out_s);
}

ChoicePolicy make_policy(const Options& o) {
  ChoicePolicy pol;
  if (o.policy == "prefer-positive")
    pol.choice = ChoicePolicy::PreferPositive;
  else if (o.policy == "prefer-negative")
    pol.choice = ChoicePolicy::PreferNegative;
  else if (o.policy == "seeded-random")
    pol.choice = ChoicePolicy::SeededRandom;
  else
    throw CLI::ValidationError("--policy must be prefer-positive, prefer-negative or "
                               "seeded-random");
  pol.diag = o.diag_sign == "negative" ? ChoicePolicy::PreferNegative
                                       : ChoicePolicy::PreferPositive;
  pol.seed = o.seed;
  return pol;
}

void print_report(const Semiring& S, const SolveReport& rep, bool trace, bool classified) {
  if (classified) {
    std::cout << "status: " << to_string(rep.status) << "\n";
    std::cout << "det: " << S.print(rep.det) << "\n";
    std::cout << "cramer: " << format_tokens(S, rep.cramer) << "\n";
    if (rep.all_solutions_modulus)
      std::cout << "moduli: " << format_mp_tokens(*rep.all_solutions_modulus) << "\n";
  }
  if (trace)
    for (size_t k = 0; k < rep.trace.size(); ++k)
      std::cout << "iter " << (k + 1) << ": " << format_tokens(S, rep.trace[k]) << "\n";
  if (!rep.trace.empty()) std::cout << "sweeps: " << rep.sweeps << "\n";
  if (rep.solution) std::cout << "solution: " << format_tokens(S, *rep.solution) << "\n";
}

int status_exit(const SolveReport& rep) {
  switch (rep.status) {
    case SolveStatus::StructurallySingular:
    case SolveStatus::NoThinCertificate:
      return 2;
    default:
      return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear systems over extensions of the tropical semiring"};
  app.require_subcommand(1);
  Options opt;

  std::string file_a, file_b, semiring_name, mode = "sampled";
  long budget = 2000000;
  int rand_n = 4, rand_cases = 100, magnitude = 10;

  auto add_semiring_opt = [&](CLI::App* cmd) {
    cmd->add_option("--semiring", opt.semiring_override,
                    "reinterpret the input under this semiring (rmax files are lifted)");
  };
  auto add_policy_opts = [&](CLI::App* cmd) {
    cmd->add_option("--policy", opt.policy, "prefer-positive | prefer-negative | seeded-random");
    cmd->add_option("--diag-sign", opt.diag_sign,
                    "witness sign for balanced diagonal entries: positive | negative");
    cmd->add_option("--seed", opt.seed, "seed for seeded-random choices");
    cmd->add_flag("--trace", opt.trace, "print the iterates one per line");
    add_semiring_opt(cmd);
  };

  CLI::App* c_det = app.add_subcommand("det", "determinant of a square matrix");
  c_det->add_option("matrix", file_a)->required();
  add_semiring_opt(c_det);
  CLI::App* c_per = app.add_subcommand("per", "permanent of the entry moduli");
  c_per->add_option("matrix", file_a)->required();
  add_semiring_opt(c_per);
  CLI::App* c_adj = app.add_subcommand("adj", "adjugate matrix");
  c_adj->add_option("matrix", file_a)->required();
  add_semiring_opt(c_adj);
  CLI::App* c_star = app.add_subcommand("star", "Kleene star of an rmax matrix");
  c_star->add_option("matrix", file_a)->required();
  CLI::App* c_scale = app.add_subcommand("scale", "Hungarian scaling and normal form");
  c_scale->add_option("matrix", file_a)->required();
  CLI::App* c_solve = app.add_subcommand("solve", "Cramer solve of A x ~ b");
  c_solve->add_option("matrix", file_a)->required();
  c_solve->add_option("rhs", file_b)->required();
  add_policy_opts(c_solve);
  CLI::App* c_jac = app.add_subcommand("jacobi", "Jacobi iteration for A x ~ b");
  c_jac->add_option("matrix", file_a)->required();
  c_jac->add_option("rhs", file_b)->required();
  add_policy_opts(c_jac);
  CLI::App* c_gs = app.add_subcommand("gauss-seidel", "Gauss-Seidel iteration for A x ~ b");
  c_gs->add_option("matrix", file_a)->required();
  c_gs->add_option("rhs", file_b)->required();
  add_policy_opts(c_gs);
  CLI::App* c_hom = app.add_subcommand("homogeneous", "thin nonzero solution of A x ~ 0");
  c_hom->add_option("matrix", file_a)->required();
  add_policy_opts(c_hom);
  CLI::App* c_call = app.add_subcommand("cramer-all", "all Cramer permanent moduli of (A, b)");
  c_call->add_option("matrix", file_a)->required();
  c_call->add_option("rhs", file_b)->required();
  CLI::App* c_tr = app.add_subcommand("transport", "transportation dual of an (n-1) x n matrix");
  c_tr->add_option("matrix", file_a)->required();
  CLI::App* c_hyp = app.add_subcommand("hyperplane-through",
                                       "hyperplane through the columns of an n x (n-1) matrix");
  c_hyp->add_option("matrix", file_a)->required();
  add_policy_opts(c_hyp);
  CLI::App* c_meet = app.add_subcommand("meet", "meet of n-1 signed hyperplanes (rows)");
  c_meet->add_option("matrix", file_a)->required();
  add_policy_opts(c_meet);
  CLI::App* c_ax = app.add_subcommand("check-axioms", "verify semiring laws");
  c_ax->add_option("semiring", semiring_name)->required();
  c_ax->add_option("--mode", mode, "exhaustive | sampled");
  c_ax->add_option("--budget", budget, "elementary check budget");
  c_ax->add_option("--seed", opt.seed, "sampling seed");
  CLI::App* c_xc = app.add_subcommand("cross-check",
                                      "three-way Cramer permanent agreement");
  c_xc->add_option("input", file_a, "matrix file, or the word 'random'")->required();
  c_xc->add_option("--n", rand_n, "columns of the random instances");
  c_xc->add_option("--cases", rand_cases, "number of random instances");
  CLI::Option* seed_opt = c_xc->add_option("--seed", opt.seed, "random seed (required)");
  c_xc->add_option("--magnitude", magnitude, "entry magnitudes drawn from [-M, M]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_det->parsed()) {
      MatrixFile f = read_matrix_file_path(file_a);
      if (f.semiring_name == "rmax" && opt.semiring_override.empty()) {
        Elem d = det_sign_rmax(to_mpmat(f));
        std::cout << Semiring::smax().print(d) << "\n";
      } else {
        Mat A = opt.semiring_override.empty() ? to_mat(f)
                                              : override_mat(f, opt.semiring_override);
        std::cout << A.S.print(det_dispatch(A)) << "\n";
      }
      return 0;
    }
    if (c_per->parsed()) {
      MatrixFile f = read_matrix_file_path(file_a);
      MpMat M = f.semiring_name == "rmax" ? to_mpmat(f) : modulus_matrix(to_mat(f));
      std::cout << permanent(M).to_string() << "\n";
      return 0;
    }
    if (c_adj->parsed()) {
      MatrixFile f = read_matrix_file_path(file_a);
      if (f.semiring_name == "rmax" && opt.semiring_override.empty()) {
        Mat A = lift_matrix(Semiring::smax(), to_mpmat(f));
        std::cout << format_matrix(adjugate(A));
      } else {
        Mat A = opt.semiring_override.empty() ? to_mat(f)
                                              : override_mat(f, opt.semiring_override);
        std::cout << format_matrix(adjugate(A));
      }
      return 0;
    }
    if (c_star->parsed()) {
      MpMat A = to_mpmat(read_matrix_file_path(file_a));
      try {
        std::cout << format_mpmat(kleene_star(A));
      } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (c_scale->parsed()) {
      MatrixFile f = read_matrix_file_path(file_a);
      MpMat M = f.semiring_name == "rmax" ? to_mpmat(f) : modulus_matrix(to_mat(f));
      try {
        Scaling sc = hungarian_scaling(M);
        std::cout << "u: " << format_mp_tokens(sc.u) << "\n";
        std::cout << "v: " << format_mp_tokens(sc.v) << "\n";
        std::cout << "sigma:";
        for (int s : sc.sigma) std::cout << " " << (s + 1);
        std::cout << "\nper: " << permanent(M).to_string() << "\n";
        std::cout << format_mpmat(butkovic_normal_form(M).B);
      } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (c_solve->parsed() || c_jac->parsed() || c_gs->parsed()) {
      Mat A = load_mat(file_a, opt);
      Semiring S = A.S;
      Semiring Sb = S;
      std::vector<Elem> b = load_vec(file_b, opt, &Sb);
      if (!(Sb == S)) {
        std::cerr << "error: " << file_a << " and " << file_b << " use different semirings\n";
        return 1;
      }
      if (static_cast<size_t>(A.rows) != b.size()) {
        std::cerr << "error: dimensions of " << file_a << " and " << file_b << " disagree\n";
        return 1;
      }
      ChoicePolicy pol = make_policy(opt);
      SolveReport rep;
      try {
        if (c_solve->parsed())
          rep = cramer_solve(A, b, pol);
        else if (c_jac->parsed())
          rep = jacobi_solve(A, b, pol);
        else
          rep = gauss_seidel_solve(A, b, pol);
      } catch (const std::domain_error& e) {
        std::cout << "status: structurally_singular\n" << e.what() << "\n";
        return 2;
      }
      print_report(S, rep, opt.trace, c_solve->parsed());
      return c_solve->parsed() ? status_exit(rep) : 0;
    }
    if (c_hom->parsed()) {
      Mat A = load_mat(file_a, opt);
      SolveReport rep = homogeneous_solve(A, make_policy(opt));
      std::cout << "status: " << to_string(rep.status) << "\n";
      std::cout << "det: " << A.S.print(rep.det) << "\n";
      if (rep.solution) std::cout << "solution: " << format_tokens(A.S, *rep.solution) << "\n";
      return status_exit(rep);
    }
    if (c_call->parsed()) {
      MpMat A = to_mpmat(read_matrix_file_path(file_a));
      std::vector<MaxPlus> b = to_mpvec(read_matrix_file_path(file_b));
      if (static_cast<size_t>(A.rows) != b.size()) {
        std::cerr << "error: dimensions of " << file_a << " and " << file_b << " disagree\n";
        return 1;
      }
      try {
        std::cout << format_mp_tokens(cramer_permanents_jacobi(A, b)) << "\n";
      } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (c_tr->parsed()) {
      MpMat C = to_mpmat(read_matrix_file_path(file_a));
      try {
        TransportSolution sol = solve_transport(TransportProblem{C});
        std::cout << "value: " << sol.value.to_string() << "\n";
        std::cout << "u:";
        for (const Rat& x : sol.dual.u) std::cout << " " << x.to_string();
        std::cout << "\nv:";
        for (const Rat& x : sol.dual.v) std::cout << " " << x.to_string();
        std::cout << "\npermanents: " << format_mp_tokens(cramer_permanents_transport(C)) << "\n";
      } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (c_hyp->parsed()) {
      Mat V = to_mat(read_matrix_file_path(file_a));
      try {
        Hyperplane H = hyperplane_through(V, make_policy(opt));
        std::cout << format_vec(H.S, H.params);
      } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (c_meet->parsed()) {
      Mat W = to_mat(read_matrix_file_path(file_a));
      std::vector<Hyperplane> hs;
      for (int i = 0; i < W.rows; ++i) {
        std::vector<Elem> p(W.cols);
        for (int j = 0; j < W.cols; ++j) p[j] = W.at(i, j);
        hs.push_back(make_hyperplane(W.S, p));
      }
      try {
        MeetResult mr = meet_hyperplanes(hs, make_policy(opt));
        std::cout << "eps:";
        for (int e : mr.eps.eps) std::cout << " " << (e > 0 ? "+" : "-");
        std::cout << "\npoint: " << format_mp_tokens(mr.point) << "\n";
      } catch (const std::domain_error& e) {
        std::cout << e.what() << "\n";
        return 2;
      }
      return 0;
    }
    if (c_ax->parsed()) {
      auto S = Semiring::by_name(semiring_name);
      if (!S) {
        std::cerr << "error: unknown semiring '" << semiring_name << "'\n";
        return 1;
      }
      CheckMode m = mode == "exhaustive" ? CheckMode::Exhaustive : CheckMode::Sampled;
      AxiomReport rep = check_axioms(*S, m, budget, opt.seed ? opt.seed : 1);
      std::cout << rep.summary();
      return 0;
    }
    if (c_xc->parsed()) {
      CrossCheckReport rep;
      if (file_a == "random") {
        if (seed_opt->count() == 0) {
          std::cerr << "error: cross-check random requires --seed\n";
          return 1;
        }
        rep = cross_check_random(rand_n, rand_cases, opt.seed, magnitude);
      } else {
        rep = cross_check_permanents(to_mpmat(read_matrix_file_path(file_a)));
      }
      char timing[128];
      std::snprintf(timing, sizeof timing,
                    "timings: brute %.1f ms, assignment %.1f ms, transport %.1f ms\n",
                    rep.brute_ms, rep.jacobi_ms, rep.transport_ms);
      if (rep.ok()) {
        std::cout << "OK " << rep.agreed << "/" << rep.cases << "\n" << timing;
        return 0;
      }
      std::cout << "FAIL " << rep.agreed << "/" << rep.cases << "\n"
                << timing << rep.first_failure;
      return 2;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
