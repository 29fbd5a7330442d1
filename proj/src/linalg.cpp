#include "tropcram/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace tropcram {

Mat Mat::identity(const Semiring& s, int n) {
  Mat I(s, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = s.one();
  return I;
}

MpMat MpMat::identity(int n) {
  MpMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = MaxPlus::unit();
  return I;
}

MpMat modulus_matrix(const Mat& A) {
  MpMat M(A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); ++k) M.a[k] = A.a[k].m;
  return M;
}

std::vector<MaxPlus> modulus_vector(const Semiring&, const std::vector<Elem>& x) {
  std::vector<MaxPlus> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i].m;
  return out;
}

Mat lift_matrix(const Semiring& S, const MpMat& A) {
  Mat M(S, A.rows, A.cols);
  for (size_t k = 0; k < A.a.size(); ++k) M.a[k] = S.iota(A.a[k]);
  return M;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  if (A.cols != B.rows)
    throw std::invalid_argument("mat_mul: inner dimensions disagree (" +
                                std::to_string(A.cols) + " vs " + std::to_string(B.rows) + ")");
  if (!(A.S == B.S)) throw std::invalid_argument("mat_mul: semirings differ");
  Mat C(A.S, A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      Elem s = A.S.zero();
      for (int k = 0; k < A.cols; ++k) s = A.S.add(s, A.S.mul(A.at(i, k), B.at(k, j)));
      C.at(i, j) = s;
    }
  return C;
}

std::vector<Elem> mat_vec(const Mat& A, const std::vector<Elem>& x) {
  if (static_cast<size_t>(A.cols) != x.size())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Elem> y(A.rows, A.S.zero());
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      y[i] = A.S.add(y[i], A.S.mul(A.at(i, j), x[j]));
  return y;
}

MpMat mp_mul(const MpMat& A, const MpMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mp_mul: inner dimensions disagree");
  MpMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      MaxPlus s;
      for (int k = 0; k < A.cols; ++k) s = s + A.at(i, k) * B.at(k, j);
      C.at(i, j) = s;
    }
  return C;
}

std::vector<MaxPlus> mp_vec(const MpMat& A, const std::vector<MaxPlus>& x) {
  if (static_cast<size_t>(A.cols) != x.size())
    throw std::invalid_argument("mp_vec: dimension mismatch");
  std::vector<MaxPlus> y(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] = y[i] + A.at(i, j) * x[j];
  return y;
}

int brute_bound() {
  if (const char* env = std::getenv("TROPCRAM_BRUTE_BOUND")) {
    int b = std::atoi(env);
    if (b > 0) return b;
  }
  return 9;
}

Elem det(const Mat& A) { return det(A, brute_bound()); }

Elem det(const Mat& A, int bound) {
  if (A.rows != A.cols) throw std::invalid_argument("det: matrix not square");
  int n = A.rows;
  if (n > bound)
    throw std::invalid_argument("det: n = " + std::to_string(n) +
                                " exceeds the permutation-expansion bound " +
                                std::to_string(bound) + "; use the assignment fast path");
  const Semiring& S = A.S;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Elem minus_one = S.negate(S.one());
  Elem acc = S.zero();
  bool odd = false;
  auto term = [&]() {
    Elem t = S.one();
    for (int i = 0; i < n; ++i) t = S.mul(t, A.at(i, perm[i]));
    if (odd) t = S.mul(minus_one, t);
    acc = S.add(acc, t);
  };
  // Heap's algorithm; each swap flips the parity.
  std::vector<int> c(n, 0);
  term();
  int i = 0;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      odd = !odd;
      term();
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return acc;
}

Mat adjugate(const Mat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("adjugate: matrix not square");
  int n = A.rows;
  const Semiring& S = A.S;
  Mat adj(S, n, n);
  if (n == 1) {
    adj.at(0, 0) = S.one();  // the empty minor has unit determinant
    return adj;
  }
  Mat minor(S, n - 1, n - 1);
  Elem minus_one = S.negate(S.one());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (adj)_ij = (-1)^{i+j} det A(j, i)
      int r = 0;
      for (int p = 0; p < n; ++p) {
        if (p == j) continue;
        int cidx = 0;
        for (int q = 0; q < n; ++q) {
          if (q == i) continue;
          minor.at(r, cidx++) = A.at(p, q);
        }
        ++r;
      }
      Elem d = det(minor, n);
      adj.at(i, j) = ((i + j) % 2 == 0) ? d : S.mul(minus_one, d);
    }
  return adj;
}

MpMat kleene_star(const MpMat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("kleene_star: matrix not square");
  int n = A.rows;
  MpMat W = A;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) W.at(i, j) = W.at(i, j) + W.at(i, k) * W.at(k, j);
  MaxPlus unit = MaxPlus::unit();
  for (int i = 0; i < n; ++i) {
    if (unit < W.at(i, i))
      throw std::domain_error("divergent star: circuit of weight above the unit through node " +
                              std::to_string(i + 1));
    W.at(i, i) = unit;
  }
  return W;
}

int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right,
                           std::vector<int>& match_left) {
  int n_left = static_cast<int>(adj.size());
  match_left.assign(n_left, -1);
  std::vector<int> match_right(n_right, -1);
  std::vector<char> used;
  std::function<bool(int)> try_kuhn = [&](int v) -> bool {
    for (int to : adj[v]) {
      if (used[to]) continue;
      used[to] = 1;
      if (match_right[to] == -1 || try_kuhn(match_right[to])) {
        match_left[v] = to;
        match_right[to] = v;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int v = 0; v < n_left; ++v) {
    used.assign(n_right, 0);
    if (try_kuhn(v)) ++size;
  }
  return size;
}

namespace {

std::vector<std::vector<int>> finite_adjacency(const MpMat& C) {
  std::vector<std::vector<int>> adj(C.rows);
  for (int i = 0; i < C.rows; ++i)
    for (int j = 0; j < C.cols; ++j)
      if (!C.at(i, j).is_bottom()) adj[i].push_back(j);
  return adj;
}

// Exact O(n^3) assignment with potentials (shortest augmenting paths on the
// negated costs). Requires a perfect matching on the finite cells.
void hungarian_duals(const MpMat& C, std::vector<Rat>& u, std::vector<Rat>& v,
                     std::vector<int>& row_of_col) {
  int n = C.rows;
  // Minimization costs; forbidden cells stay unset.
  auto cost = [&](int i, int j) -> std::optional<Rat> {
    const MaxPlus& c = C.at(i, j);
    if (c.is_bottom()) return std::nullopt;
    return -c.v;
  };
  std::vector<Rat> pu(n + 1, Rat(0)), pv(n + 1, Rat(0));
  std::vector<int> p(n + 1, n), way(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    p[n] = i;
    int j0 = n;
    std::vector<std::optional<Rat>> minv(n + 1);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      std::optional<Rat> delta;
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        std::optional<Rat> cij = cost(i0, j);
        if (cij) {
          Rat cur = *cij - pu[i0] - pv[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta)
        throw std::domain_error("structurally singular: no finite assignment");
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          pu[p[j]] = pu[p[j]] + *delta;
          pv[j] = pv[j] - *delta;
        } else if (minv[j]) {
          minv[j] = *minv[j] - *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != n);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != n);
  }
  row_of_col.assign(n, -1);
  for (int j = 0; j < n; ++j) row_of_col[j] = p[j];
  // Max-plus duals: A_ij <= u_i + v_j with equality on tight cells.
  u.assign(n, Rat(0));
  v.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) u[i] = -pu[i];
  for (int j = 0; j < n; ++j) v[j] = -pv[j];
}

}  // namespace

std::optional<BlockWitness> frobenius_konig(const MpMat& C) {
  if (C.rows != C.cols) throw std::invalid_argument("frobenius_konig: matrix not square");
  int n = C.rows;
  auto adj = finite_adjacency(C);
  std::vector<int> match_left;
  int size = max_bipartite_matching(adj, n, match_left);
  if (size == n) return std::nullopt;
  std::vector<int> match_right(n, -1);
  for (int i = 0; i < n; ++i)
    if (match_left[i] >= 0) match_right[match_left[i]] = i;
  // Koenig: alternate from the unmatched rows; the cover is (rows not
  // reached) + (columns reached), so the reached-rows x unreached-columns
  // block carries no finite cell.
  std::vector<char> row_seen(n, 0), col_seen(n, 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (match_left[i] == -1) {
      row_seen[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : adj[i]) {
      if (col_seen[j]) continue;
      col_seen[j] = 1;
      int i2 = match_right[j];
      if (i2 >= 0 && !row_seen[i2]) {
        row_seen[i2] = 1;
        stack.push_back(i2);
      }
    }
  }
  BlockWitness w;
  for (int i = 0; i < n; ++i)
    if (row_seen[i]) w.rows.push_back(i);
  for (int j = 0; j < n; ++j)
    if (!col_seen[j]) w.cols.push_back(j);
  return w;
}

MaxPlus permanent(const MpMat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("permanent: matrix not square");
  auto adj = finite_adjacency(A);
  std::vector<int> match_left;
  if (max_bipartite_matching(adj, A.cols, match_left) < A.rows) return MaxPlus::bottom();
  std::vector<Rat> u, v;
  std::vector<int> row_of_col;
  hungarian_duals(A, u, v, row_of_col);
  Rat total(0);
  for (const Rat& x : u) total = total + x;
  for (const Rat& x : v) total = total + x;
  return MaxPlus(total);
}

Scaling hungarian_scaling(const MpMat& C) {
  if (C.rows != C.cols) throw std::invalid_argument("hungarian_scaling: matrix not square");
  int n = C.rows;
  auto adj = finite_adjacency(C);
  std::vector<int> match_left;
  if (max_bipartite_matching(adj, n, match_left) < n)
    throw std::domain_error("structurally singular: permanent is bottom");
  Scaling sc;
  std::vector<Rat> u, v;
  std::vector<int> row_of_col;
  hungarian_duals(C, u, v, row_of_col);
  sc.u.reserve(n);
  sc.v.reserve(n);
  for (int i = 0; i < n; ++i) sc.u.push_back(MaxPlus(u[i]));
  for (int j = 0; j < n; ++j) sc.v.push_back(MaxPlus(v[j]));
  // Lexicographically smallest optimal permutation: fix rows in order to the
  // smallest tight column that keeps the tight graph perfectly matchable.
  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!C.at(i, j).is_bottom() && C.at(i, j).v == u[i] + v[j]) tight[i].push_back(j);
  sc.sigma.assign(n, -1);
  std::vector<char> col_taken(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : tight[i]) {
      if (col_taken[j]) continue;
      // Residual feasibility test.
      std::vector<std::vector<int>> rest;
      rest.reserve(n - i - 1);
      for (int i2 = i + 1; i2 < n; ++i2) {
        std::vector<int> row;
        for (int j2 : tight[i2])
          if (!col_taken[j2] && j2 != j) row.push_back(j2);
        rest.push_back(std::move(row));
      }
      std::vector<int> m;
      if (max_bipartite_matching(rest, n, m) == n - i - 1) {
        sc.sigma[i] = j;
        col_taken[j] = 1;
        break;
      }
    }
    if (sc.sigma[i] < 0) throw std::logic_error("hungarian_scaling: tight graph not matchable");
  }
  return sc;
}

NormalForm butkovic_normal_form(const MpMat& C) {
  Scaling sc = hungarian_scaling(C);
  int n = C.rows;
  NormalForm nf;
  nf.sigma = sc.sigma;
  nf.row_scale.reserve(n);
  nf.col_scale.reserve(n);
  for (int i = 0; i < n; ++i) nf.row_scale.push_back(sc.u[i].inverse());
  for (int j = 0; j < n; ++j) nf.col_scale.push_back(sc.v[j].inverse());
  // B = Sigma D C D': row j of B is row sigma^{-1}(j) of D C D'.
  std::vector<int> sigma_inv(n);
  for (int i = 0; i < n; ++i) sigma_inv[sc.sigma[i]] = i;
  nf.B = MpMat(n, n);
  for (int j = 0; j < n; ++j) {
    int i = sigma_inv[j];
    for (int k = 0; k < n; ++k)
      nf.B.at(j, k) = nf.row_scale[i] * C.at(i, k) * nf.col_scale[k];
  }
  return nf;
}

MpMat yoeli_adjugate(const MpMat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("yoeli_adjugate: matrix not square");
  MaxPlus unit = MaxPlus::unit();
  for (int i = 0; i < A.rows; ++i)
    if (A.at(i, i) != unit)
      throw std::domain_error("yoeli_adjugate: diagonal entry " + std::to_string(i + 1) +
                              " is not the unit");
  MaxPlus per = permanent(A);
  if (per != unit) throw std::domain_error("yoeli_adjugate: permanent is not the unit");
  return kleene_star(A);
}

}  // namespace tropcram
