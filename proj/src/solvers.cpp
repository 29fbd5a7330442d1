#include "tropcram/solvers.hpp"

#include <algorithm>

#include "tropcram/assignment.hpp"

namespace tropcram {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::ExistsNonUnique: return "exists_non_unique";
    case SolveStatus::BalancedDeterminant: return "balanced_determinant";
    case SolveStatus::StructurallySingular: return "structurally_singular";
    case SolveStatus::NoThinCertificate: return "no_thin_certificate";
  }
  return "?";
}

namespace {

void require_square(const Mat& A, const char* who) {
  if (A.rows != A.cols) throw std::invalid_argument(std::string(who) + ": matrix not square");
}

void require_monotone(const Semiring& S, const char* who) {
  if (!S.allows_monotone_convergence())
    throw std::invalid_argument(std::string(who) + ": semiring " + S.name() +
                                " does not support the monotone iteration");
}

std::vector<Elem> apply_row_perm(const std::vector<int>& perm, const std::vector<Elem>& b) {
  std::vector<Elem> out(b.size());
  for (size_t i = 0; i < perm.size(); ++i) out[i] = b[perm[i]];
  return out;
}

// One entrywise refinement step: the thin witness of y above prev, chosen by
// policy among the admissible candidates.
Elem refine_entry(const Semiring& S, const Elem& prev, const Elem& y, const ChoicePolicy& pol) {
  std::vector<Elem> cand = S.thin_witnesses(y);
  cand.push_back(prev);
  std::vector<Elem> ok;
  for (const Elem& z : cand) {
    if (!S.is_thin(z) || !S.bala(z, y)) continue;
    if (!S.preorder_le(prev, z) || !S.preorder_le(z, y)) continue;
    bool dup = false;
    for (const Elem& w : ok) dup = dup || w == z;
    if (!dup) ok.push_back(z);
  }
  if (ok.empty())
    throw std::logic_error(S.name() + ": no admissible thin witness (order law violated)");
  return ok[pol.pick(ok.size())];
}

}  // namespace

JacobiDecomposition jacobi_decompose(const Mat& A, const ChoicePolicy& pol) {
  require_square(A, "jacobi_decompose");
  const Semiring& S = A.S;
  int n = A.rows;
  MpMat B = modulus_matrix(A);
  Scaling sc;
  try {
    sc = hungarian_scaling(B);
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "jacobi_decompose: determinant modulus is not invertible (structurally singular)");
  }
  JacobiDecomposition dec;
  dec.row_perm.resize(n);
  std::vector<int> sigma_inv(n);
  for (int i = 0; i < n; ++i) sigma_inv[sc.sigma[i]] = i;
  dec.A = Mat(S, n, n);
  for (int j = 0; j < n; ++j) {
    dec.row_perm[j] = sigma_inv[j];
    for (int k = 0; k < n; ++k) dec.A.at(j, k) = A.at(sigma_inv[j], k);
  }
  dec.D = Mat(S, n, n);
  dec.N = Mat(S, n, n);
  dec.L = Mat(S, n, n);
  dec.U = Mat(S, n, n);
  dec.d_inv.resize(n);
  for (int i = 0; i < n; ++i) {
    const Elem& aii = dec.A.at(i, i);
    std::vector<Elem> wit = S.thin_witnesses(aii);
    if (wit.empty() || aii.is_zero())
      throw std::domain_error("jacobi_decompose: diagonal entry " + std::to_string(i + 1) +
                              " admits no thin witness");
    ChoicePolicy diag_pol = pol;
    diag_pol.choice = pol.diag;
    Elem d = wit[diag_pol.pick(wit.size())];
    dec.D.at(i, i) = d;
    dec.N.at(i, i) = S.thin_complement(d, aii);
    dec.d_inv[i] = S.inverse(d);
    for (int j = 0; j < n; ++j)
      if (j != i) dec.N.at(i, j) = dec.A.at(i, j);
    for (int j = 0; j < n; ++j) {
      if (j < i)
        dec.L.at(i, j) = dec.N.at(i, j);
      else
        dec.U.at(i, j) = dec.N.at(i, j);
    }
  }
  return dec;
}

namespace {

// Shared driver for the two sweeps. For each iterate the refined entry obeys
// D x' ~| -L x' - U x + b (Jacobi has an empty L).
SolveReport iterate_sweeps(const Mat& A_orig, const std::vector<Elem>& b,
                           const JacobiDecomposition& dec, const ChoicePolicy& pol,
                           bool gauss_seidel) {
  const Semiring& S = A_orig.S;
  require_monotone(S, gauss_seidel ? "gauss_seidel_solve" : "jacobi_solve");
  int n = dec.A.rows;
  if (A_orig.rows != n || A_orig.cols != n || static_cast<size_t>(n) != b.size())
    throw std::invalid_argument("solve: dimension mismatch");
  // The decomposition must describe this very matrix.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (dec.A.at(i, j) != A_orig.at(dec.row_perm[i], j))
        throw std::invalid_argument("solve: decomposition does not match the matrix");
      if (S.add(dec.D.at(i, j), dec.N.at(i, j)) != dec.A.at(i, j))
        throw std::invalid_argument("solve: invalid decomposition (D + N differs from A)");
    }
  std::vector<Elem> bp = apply_row_perm(dec.row_perm, b);
  pol.reset();

  SolveReport rep;
  rep.row_perm = dec.row_perm;
  std::vector<Elem> x(n, S.zero());
  int max_sweeps = S.order_equal_holds() ? n : 2 * n + 4;
  for (int k = 0; k < max_sweeps; ++k) {
    std::vector<Elem> next = x;
    for (int i = 0; i < n; ++i) {
      Elem rhs = bp[i];
      for (int j = 0; j < n; ++j) {
        const Elem& coef = gauss_seidel ? (j < i ? dec.L.at(i, j) : dec.U.at(i, j))
                                        : dec.N.at(i, j);
        const Elem& xj = (gauss_seidel && j < i) ? next[j] : x[j];
        rhs = S.add(rhs, S.negate(S.mul(coef, xj)));
      }
      next[i] = refine_entry(S, x[i], S.mul(dec.d_inv[i], rhs), pol);
    }
    bool stable = next == x;
    x = std::move(next);
    rep.trace.push_back(x);
    if (!S.order_equal_holds()) {
      if (stable && k + 1 >= n) break;
      if (k + 1 == max_sweeps)
        throw std::domain_error("solve: iteration not stationary within the sweep cap");
    }
  }
  rep.sweeps = static_cast<int>(rep.trace.size());
  while (rep.sweeps > 1 && rep.trace[rep.sweeps - 2] == x) --rep.sweeps;
  rep.solution = x;
  // The terminal iterate must balance the system.
  std::vector<Elem> Ax = mat_vec(dec.A, x);
  for (int i = 0; i < n; ++i)
    if (!S.balance(Ax[i], bp[i]))
      throw std::logic_error("solve: iteration left a row unbalanced");
  return rep;
}

}  // namespace

SolveReport jacobi_solve(const Mat& A, const std::vector<Elem>& b,
                         const JacobiDecomposition& dec, const ChoicePolicy& pol) {
  return iterate_sweeps(A, b, dec, pol, false);
}

SolveReport gauss_seidel_solve(const Mat& A, const std::vector<Elem>& b,
                               const JacobiDecomposition& dec, const ChoicePolicy& pol) {
  return iterate_sweeps(A, b, dec, pol, true);
}

SolveReport jacobi_solve(const Mat& A, const std::vector<Elem>& b, const ChoicePolicy& pol) {
  return jacobi_solve(A, b, jacobi_decompose(A, pol), pol);
}

SolveReport gauss_seidel_solve(const Mat& A, const std::vector<Elem>& b,
                               const ChoicePolicy& pol) {
  return gauss_seidel_solve(A, b, jacobi_decompose(A, pol), pol);
}

Elem det_dispatch(const Mat& A) {
  require_square(A, "det");
  if (A.rows <= brute_bound()) return det(A);
  if (A.S.base() == BaseKind::SBool && A.S.mag_kind() == MagKind::Rmax) return det_smax(A);
  if (A.S.base() == BaseKind::N2 && A.S.mag_kind() == MagKind::Rmax) return det_t2(A);
  throw std::invalid_argument("det: no polynomial route for semiring " + A.S.name() +
                              " beyond the brute bound");
}

SolveReport cramer_solve(const Mat& A, const std::vector<Elem>& b, const ChoicePolicy& pol) {
  require_square(A, "cramer_solve");
  const Semiring& S = A.S;
  if (!S.allows_strong_elimination())
    throw std::invalid_argument("cramer_solve: semiring " + S.name() +
                                " does not allow strong balance elimination");
  if (static_cast<size_t>(A.rows) != b.size())
    throw std::invalid_argument("cramer_solve: dimension mismatch");

  SolveReport rep;
  rep.det = det_dispatch(A);
  rep.cramer = mat_vec(adjugate(A), b);

  if (rep.det.is_zero()) {
    bool b_zero = true;
    for (const Elem& e : b) b_zero = b_zero && e.is_zero();
    if (b_zero && S.homogeneous_supported()) {
      SolveReport hom = homogeneous_solve(A, pol);
      hom.det = rep.det;
      hom.cramer = rep.cramer;
      return hom;
    }
    rep.status = SolveStatus::StructurallySingular;
    return rep;
  }

  std::vector<MaxPlus> mods(rep.cramer.size());
  MaxPlus det_mod_inv = rep.det.m.inverse();
  for (size_t i = 0; i < rep.cramer.size(); ++i) mods[i] = det_mod_inv * rep.cramer[i].m;
  rep.all_solutions_modulus = mods;

  if (S.is_thin(rep.det)) {
    bool adj_thin = true;
    for (const Elem& e : rep.cramer) adj_thin = adj_thin && S.is_thin(e);
    if (adj_thin) {
      Elem inv = S.inverse(rep.det);
      std::vector<Elem> x(rep.cramer.size());
      for (size_t i = 0; i < x.size(); ++i) x[i] = S.mul(inv, rep.cramer[i]);
      rep.status = SolveStatus::Unique;
      rep.solution = x;
      return rep;
    }
    SolveReport it = jacobi_solve(A, b, pol);
    rep.status = SolveStatus::ExistsNonUnique;
    rep.solution = it.solution;
    rep.trace = std::move(it.trace);
    rep.row_perm = std::move(it.row_perm);
    rep.sweeps = it.sweeps;
    return rep;
  }

  SolveReport it = jacobi_solve(A, b, pol);
  rep.status = SolveStatus::BalancedDeterminant;
  rep.solution = it.solution;
  rep.trace = std::move(it.trace);
  rep.row_perm = std::move(it.row_perm);
  rep.sweeps = it.sweeps;
  return rep;
}

// ---------------------------------------------------------------------------
// Homogeneous systems.
// ---------------------------------------------------------------------------

HomogeneousHat homogeneous_hat(const Mat& A, const ChoicePolicy& pol) {
  if (A.cols != A.rows + 1)
    throw std::invalid_argument("homogeneous_hat: expected one more column than rows");
  const Semiring& S = A.S;
  int n = A.rows;
  HomogeneousHat out;
  out.hat.resize(n + 1);
  Elem minus_one = S.negate(S.one());
  for (int k = 0; k <= n; ++k) {
    Mat M(S, n, n);
    int c = 0;
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      for (int i = 0; i < n; ++i) M.at(i, c) = A.at(i, j);
      ++c;
    }
    Elem d = det_dispatch(M);
    // Alternating sign (-1)^{n-k} for zero-based k.
    if ((n - k) % 2 == 1) d = S.mul(minus_one, d);
    out.hat[k] = d;
  }
  out.hat_thin = true;
  for (const Elem& e : out.hat) out.hat_thin = out.hat_thin && S.is_thin(e);

  int kstar = -1;
  for (int k = 0; k <= n; ++k)
    if (!out.hat[k].is_zero()) {
      kstar = k;
      break;
    }
  if (kstar < 0) {
    out.solution.assign(n + 1, S.zero());
    return out;
  }
  Mat M(S, n, n);
  std::vector<Elem> rhs(n);
  int c = 0;
  for (int j = 0; j <= n; ++j) {
    if (j == kstar) continue;
    for (int i = 0; i < n; ++i) M.at(i, c) = A.at(i, j);
    ++c;
  }
  for (int i = 0; i < n; ++i) rhs[i] = S.negate(A.at(i, kstar));
  SolveReport it = jacobi_solve(M, rhs, pol);
  const std::vector<Elem>& y = *it.solution;
  out.solution.assign(n + 1, S.zero());
  out.solution[kstar] = S.iota(out.hat[kstar].m);
  c = 0;
  for (int j = 0; j <= n; ++j) {
    if (j == kstar) continue;
    out.solution[j] = S.mul(out.solution[kstar], y[c]);
    ++c;
  }
  std::vector<Elem> Ax = mat_vec(A, out.solution);
  for (const Elem& e : Ax)
    if (!S.is_balanced(e)) throw std::logic_error("homogeneous_hat: residual not balanced");
  return out;
}

namespace {

// Degenerate case: the permanent of |A| is bottom, so a zero block of
// complementary shape exists; recurse on the complementary subsystem.
std::vector<Elem> homogeneous_zero_det(const Mat& A, const ChoicePolicy& pol,
                                       const std::function<std::vector<Elem>(const Mat&)>& self) {
  const Semiring& S = A.S;
  int n = A.rows;
  auto w = frobenius_konig(modulus_matrix(A));
  if (!w) throw std::logic_error("homogeneous: zero determinant without a zero block");
  std::vector<int> rows = w->rows, cols = w->cols;
  int q = static_cast<int>(cols.size());
  // Trim the block so that rows + cols = n + 1 exactly (the witness can be
  // larger; any subset of its rows still has only bottom entries).
  int p = n + 1 - q;
  rows.resize(p);
  std::vector<int> other_rows;
  for (int i = 0; i < n; ++i)
    if (std::find(rows.begin(), rows.end(), i) == rows.end()) other_rows.push_back(i);
  // q unknowns, q-1 equations over the kept columns.
  std::vector<Elem> y;
  if (q == 1) {
    y = {S.one()};
  } else {
    Mat C(S, q - 1, q);
    for (int r = 0; r < q - 1; ++r)
      for (int c = 0; c < q; ++c) C.at(r, c) = A.at(other_rows[r], cols[c]);
    HomogeneousHat hat = homogeneous_hat(C, pol);
    bool hat_zero = true;
    for (const Elem& e : hat.hat) hat_zero = hat_zero && e.is_zero();
    if (!hat_zero) {
      y = hat.solution;
    } else {
      // Every maximal minor vanishes: drop one coordinate and recurse on the
      // square subsystem, first column first.
      for (int k = 0; k < q && y.empty(); ++k) {
        Mat C2(S, q - 1, q - 1);
        int cc = 0;
        for (int c = 0; c < q; ++c) {
          if (c == k) continue;
          for (int r = 0; r < q - 1; ++r) C2.at(r, cc) = C.at(r, c);
          ++cc;
        }
        std::vector<Elem> y2 = self(C2);
        y.assign(q, S.zero());
        cc = 0;
        for (int c = 0; c < q; ++c) {
          if (c == k) continue;
          y[c] = y2[cc++];
        }
      }
    }
  }
  std::vector<Elem> x(n, S.zero());
  for (int c = 0; c < q; ++c) x[cols[c]] = y[c];
  return x;
}

// Nondegenerate balanced determinant: normalize, then either a balanced
// entry meets an optimal permutation, or an optimal pair of mixed parity
// yields an alternating cycle vector.
std::vector<Elem> homogeneous_balanced(const Mat& A, const ChoicePolicy& pol) {
  const Semiring& S = A.S;
  int n = A.rows;
  NormalForm nf = butkovic_normal_form(modulus_matrix(A));
  std::vector<int> sigma_inv(n);
  for (int i = 0; i < n; ++i) sigma_inv[nf.sigma[i]] = i;
  // A1 = Sigma D A D', so |A1| = B: unit diagonal, entries below the unit.
  Mat A1(S, n, n);
  for (int j = 0; j < n; ++j) {
    int i = sigma_inv[j];
    for (int k = 0; k < n; ++k)
      A1.at(j, k) = S.mul(S.mul(S.iota(nf.row_scale[i]), A.at(i, k)), S.iota(nf.col_scale[k]));
  }
  auto unscale = [&](std::vector<Elem> x) {
    for (int k = 0; k < n; ++k) x[k] = S.mul(S.iota(nf.col_scale[k]), x[k]);
    return x;
  };

  MaxPlus unit = MaxPlus::unit();
  std::vector<std::vector<int>> tight(n);  // non-loop tight arcs
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && A1.at(i, j).m == unit) tight[i].push_back(j);

  // Balanced diagonal entry: solve the complementary block against its column.
  int bal_i = -1, bal_j = -1;
  for (int i = 0; i < n && bal_i < 0; ++i)
    if (S.is_balanced(A1.at(i, i)) && !A1.at(i, i).is_zero()) bal_i = bal_j = i;
  if (bal_i < 0) {
    // Balanced entry on a non-loop cycle of the tight graph.
    std::vector<int> comp;
    strongly_connected_components(tight, comp);
    for (int i = 0; i < n && bal_i < 0; ++i)
      for (int j : tight[i])
        if (comp[i] == comp[j] && S.is_balanced(A1.at(i, j)) && !A1.at(i, j).is_zero()) {
          bal_i = i;
          bal_j = j;
          break;
        }
  }
  if (bal_i >= 0) {
    // Re-permute rows so the witness permutation (the cycle through the
    // balanced arc completed by loops) is the identity, then relabel so the
    // balanced entry leads.
    std::vector<int> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = i;
    if (bal_i != bal_j) {
      // Shortest tight path bal_j -> bal_i closes the cycle.
      std::vector<int> prev(n, -1);
      std::vector<int> queue = {bal_j};
      prev[bal_j] = bal_j;
      for (size_t qh = 0; qh < queue.size(); ++qh) {
        int v = queue[qh];
        for (int w : tight[v])
          if (prev[w] == -1) {
            prev[w] = v;
            queue.push_back(w);
          }
      }
      if (prev[bal_i] == -1) throw std::logic_error("homogeneous: lost the witness cycle");
      std::vector<int> cyc = {bal_i};
      for (int v = bal_i; v != bal_j; v = prev[v]) cyc.push_back(prev[v]);
      std::reverse(cyc.begin() + 1, cyc.end());  // bal_i, bal_j, ..., back to bal_i
      for (size_t t = 0; t < cyc.size(); ++t) rho[cyc[t]] = cyc[(t + 1) % cyc.size()];
    }
    // Row permutation: new row k is old row rho^{-1}(k).
    std::vector<int> rho_inv(n);
    for (int i = 0; i < n; ++i) rho_inv[rho[i]] = i;
    Mat A2(S, n, n);
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < n; ++c) A2.at(k, c) = A1.at(rho_inv[k], c);
    int lead = bal_j;  // balanced entry now sits at (lead, lead)
    // Conjugate by the swap (0 <-> lead) to bring it to the corner.
    if (lead != 0) {
      for (int c = 0; c < n; ++c) std::swap(A2.at(0, c), A2.at(lead, c));
      for (int r = 0; r < n; ++r) std::swap(A2.at(r, 0), A2.at(r, lead));
    }
    std::vector<Elem> x2(n, S.zero());
    x2[0] = S.one();
    if (n > 1) {
      Mat F(S, n - 1, n - 1);
      std::vector<Elem> rhs(n - 1);
      for (int r = 1; r < n; ++r) {
        rhs[r - 1] = S.negate(A2.at(r, 0));
        for (int c = 1; c < n; ++c) F.at(r - 1, c - 1) = A2.at(r, c);
      }
      SolveReport it = jacobi_solve(F, rhs, pol);
      for (int r = 1; r < n; ++r) x2[r] = (*it.solution)[r - 1];
    }
    if (lead != 0) std::swap(x2[0], x2[lead]);
    std::vector<Elem> x = unscale(x2);
    return x;
  }

  // Mixed-parity pair: all diagonal entries are thin; scale them to the unit
  // and search the tight graph for a cycle whose alternating closure
  // balances the unit.
  Mat A2(S, n, n);
  for (int i = 0; i < n; ++i) {
    Elem dinv = S.inverse(A1.at(i, i));
    for (int j = 0; j < n; ++j) A2.at(i, j) = S.mul(dinv, A1.at(i, j));
  }
  Elem minus_one = S.negate(S.one());
  std::vector<int> cycle;
  enumerate_cycles(tight, [&](const std::vector<int>& cyc) {
    Elem prod = S.one();
    for (size_t t = 0; t < cyc.size(); ++t)
      prod = S.mul(prod, A2.at(cyc[t], cyc[(t + 1) % cyc.size()]));
    if (cyc.size() % 2 == 0) prod = S.mul(minus_one, prod);
    if (S.is_balanced(S.add(S.one(), prod))) {
      cycle = cyc;
      return true;
    }
    return false;
  }, std::max(20, n));
  if (cycle.empty())
    throw std::logic_error("homogeneous: balanced determinant without a witness cycle");

  int p = static_cast<int>(cycle.size());
  std::vector<Elem> x2(n, S.zero());
  x2[cycle[p - 1]] = S.one();
  for (int t = p - 2; t >= 0; --t)
    x2[cycle[t]] = S.negate(S.mul(A2.at(cycle[t], cycle[t + 1]), x2[cycle[t + 1]]));
  std::vector<char> on_cycle(n, 0);
  for (int v : cycle) on_cycle[v] = 1;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!on_cycle[i]) rest.push_back(i);
  if (!rest.empty()) {
    int q = static_cast<int>(rest.size());
    Mat F(S, q, q);
    std::vector<Elem> rhs(q, S.zero());
    for (int r = 0; r < q; ++r) {
      for (int c = 0; c < q; ++c) F.at(r, c) = A2.at(rest[r], rest[c]);
      for (int v : cycle) rhs[r] = S.add(rhs[r], S.mul(A2.at(rest[r], v), x2[v]));
      rhs[r] = S.negate(rhs[r]);
    }
    SolveReport it = jacobi_solve(F, rhs, pol);
    for (int r = 0; r < q; ++r) x2[rest[r]] = (*it.solution)[r];
  }
  return unscale(x2);
}

}  // namespace

SolveReport homogeneous_solve(const Mat& A, const ChoicePolicy& pol) {
  require_square(A, "homogeneous_solve");
  const Semiring& S = A.S;
  if (!S.homogeneous_supported())
    throw std::invalid_argument(
        "homogeneous_solve: semiring " + S.name() +
        " lacks the invertible-thin, balancing-pair and absorption laws (the phase extension "
        "is the shipped example)");
  require_monotone(S, "homogeneous_solve");

  SolveReport rep;
  rep.det = det_dispatch(A);
  if (!S.is_balanced(rep.det)) {
    rep.status = SolveStatus::NoThinCertificate;
    return rep;
  }

  std::function<std::vector<Elem>(const Mat&)> solve_vec = [&](const Mat& M) {
    Elem d = det_dispatch(M);
    if (!M.S.is_balanced(d))
      throw std::logic_error("homogeneous: recursion met an unbalanced determinant");
    if (d.is_zero()) return homogeneous_zero_det(M, pol, solve_vec);
    return homogeneous_balanced(M, pol);
  };

  std::vector<Elem> x =
      rep.det.is_zero() ? homogeneous_zero_det(A, pol, solve_vec) : homogeneous_balanced(A, pol);

  bool nonzero = false;
  for (const Elem& e : x) nonzero = nonzero || !e.is_zero();
  std::vector<Elem> Ax = mat_vec(A, x);
  for (const Elem& e : Ax)
    if (!S.is_balanced(e)) throw std::logic_error("homogeneous: residual not balanced");
  for (const Elem& e : x)
    if (!S.is_thin(e)) throw std::logic_error("homogeneous: solution not thin");
  if (!nonzero) throw std::logic_error("homogeneous: produced the zero vector");

  rep.status = rep.det.is_zero() ? SolveStatus::StructurallySingular
                                 : SolveStatus::BalancedDeterminant;
  rep.solution = x;
  return rep;
}

std::vector<MaxPlus> cramer_permanents_jacobi(const MpMat& A, const std::vector<MaxPlus>& b) {
  if (A.rows != A.cols) throw std::invalid_argument("cramer_permanents: matrix not square");
  if (static_cast<size_t>(A.rows) != b.size())
    throw std::invalid_argument("cramer_permanents: dimension mismatch");
  int n = A.rows;
  Scaling sc = hungarian_scaling(A);  // throws when structurally singular
  std::vector<int> sigma_inv(n);
  for (int i = 0; i < n; ++i) sigma_inv[sc.sigma[i]] = i;
  // Permute rows so the identity is optimal, divide row j and b_j by the
  // diagonal entry, then run the star-vector product.
  MpMat Ah(n, n);
  std::vector<MaxPlus> bh(n);
  Rat total(0);
  for (int j = 0; j < n; ++j) {
    int i = sigma_inv[j];
    MaxPlus diag = A.at(i, j);
    total = total + diag.v;
    MaxPlus inv = diag.inverse();
    for (int k = 0; k < n; ++k) Ah.at(j, k) = inv * A.at(i, k);
    bh[j] = inv * b[i];
  }
  // Bellman-Ford rounds compute (I + Ah)^{n-1} b = Ah* b.
  std::vector<MaxPlus> x = bh;
  for (int round = 1; round < n; ++round) {
    std::vector<MaxPlus> Ax = mp_vec(Ah, x);
    for (int i = 0; i < n; ++i) x[i] = x[i] + Ax[i];
  }
  MaxPlus scale{Rat(total)};
  for (int i = 0; i < n; ++i) x[i] = x[i] * scale;
  return x;
}

}  // namespace tropcram
