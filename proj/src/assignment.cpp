#include "tropcram/assignment.hpp"

#include <algorithm>

namespace tropcram {

bool TightGraph::has_arc(int i, int j) const {
  return std::find(arcs[i].begin(), arcs[i].end(), j) != arcs[i].end();
}

TightGraph tight_graph(const MpMat& C) {
  if (C.rows != C.cols) throw std::invalid_argument("tight_graph: matrix not square");
  int n = C.rows;
  Scaling sc = hungarian_scaling(C);  // throws when structurally singular
  TightGraph G;
  G.n = n;
  G.arcs.assign(n, {});
  G.row_perm.assign(n, 0);
  // Normalize so the optimal permutation is the identity: row j of the
  // normalized matrix is row sigma^{-1}(j) of C.
  std::vector<int> sigma_inv(n);
  for (int i = 0; i < n; ++i) sigma_inv[sc.sigma[i]] = i;
  G.scaling.u.resize(n);
  G.scaling.v = sc.v;
  G.scaling.sigma.resize(n);
  for (int j = 0; j < n; ++j) {
    int i = sigma_inv[j];
    G.row_perm[j] = i;
    G.scaling.u[j] = sc.u[i];
    G.scaling.sigma[j] = j;
    for (int k = 0; k < n; ++k) {
      const MaxPlus& c = C.at(i, k);
      if (!c.is_bottom() && c == sc.u[i] * sc.v[k]) G.arcs[j].push_back(k);
    }
  }
  return G;
}

int strongly_connected_components(const std::vector<std::vector<int>>& adj,
                                  std::vector<int>& comp) {
  int n = static_cast<int>(adj.size());
  comp.assign(n, -1);
  std::vector<int> low(n, 0), num(n, -1), stk;
  std::vector<char> on_stack(n, 0);
  int counter = 0, ncomp = 0;
  // Iterative Tarjan.
  struct Frame {
    int v;
    size_t idx;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> frames = {{root, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.idx == 0) {
        num[v] = low[v] = counter++;
        stk.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (f.idx < adj[v].size()) {
        int w = adj[v][f.idx++];
        if (num[w] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], num[w]);
      }
      if (descended) continue;
      if (low[v] == num[v]) {
        while (true) {
          int w = stk.back();
          stk.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return ncomp;
}

bool has_multiple_optima(const TightGraph& G) {
  // A non-loop cycle exists iff some strongly connected component has at
  // least two nodes.
  std::vector<std::vector<int>> adj(G.n);
  for (int i = 0; i < G.n; ++i)
    for (int j : G.arcs[i])
      if (j != i) adj[i].push_back(j);
  std::vector<int> comp;
  strongly_connected_components(adj, comp);
  std::vector<int> size(G.n, 0);
  for (int v = 0; v < G.n; ++v)
    if (++size[comp[v]] >= 2) return true;
  return false;
}

bool enumerate_cycles(const std::vector<std::vector<int>>& adj,
                      const std::function<bool(const std::vector<int>&)>& visit,
                      int node_cap) {
  int n = static_cast<int>(adj.size());
  if (n > node_cap)
    throw std::invalid_argument("cycle enumeration refused beyond " +
                                std::to_string(node_cap) + " nodes (exponential worst case)");
  // Johnson-style: enumerate elementary cycles whose smallest node is the
  // current root, restricting the search to nodes >= root.
  std::vector<int> path;
  std::vector<char> blocked(n, 0);
  std::vector<std::vector<int>> block_list(n);
  bool accepted = false;

  std::function<bool(int, int)> circuit = [&](int v, int root) -> bool {
    bool found = false;
    path.push_back(v);
    blocked[v] = 1;
    for (int w : adj[v]) {
      if (w < root || w == v || accepted) continue;
      if (w == root) {
        found = true;
        if (path.size() >= 2 && visit(path)) {
          accepted = true;
          break;
        }
      } else if (!blocked[w]) {
        if (circuit(w, root)) found = true;
        if (accepted) break;
      }
    }
    if (found) {
      // Unblock recursively.
      std::vector<int> stack = {v};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (!blocked[u]) continue;
        blocked[u] = 0;
        for (int w : block_list[u]) stack.push_back(w);
        block_list[u].clear();
      }
    } else {
      for (int w : adj[v])
        if (w >= root && w != v) block_list[w].push_back(v);
    }
    path.pop_back();
    return found;
  };

  for (int root = 0; root < n && !accepted; ++root) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (auto& bl : block_list) bl.clear();
    circuit(root, root);
  }
  return accepted;
}

bool has_odd_optimum_pair(const TightGraph& G, int node_cap) {
  // Fast pre-pass: a 2-cycle is already an even cycle.
  for (int i = 0; i < G.n; ++i)
    for (int j : G.arcs[i])
      if (j > i && G.has_arc(j, i)) return true;
  std::vector<std::vector<int>> adj(G.n);
  for (int i = 0; i < G.n; ++i)
    for (int j : G.arcs[i])
      if (j != i) adj[i].push_back(j);
  return enumerate_cycles(
      adj, [](const std::vector<int>& cycle) { return cycle.size() % 2 == 0; }, node_cap);
}

namespace {

// Shared normalization for the fast determinants: permute rows so the
// identity permutation is optimal, remembering the parity correction.
struct Normalized {
  Mat A;                 // row-permuted matrix
  TightGraph G;          // tight graph of its moduli
  bool odd_perm = false; // parity of the row permutation applied
  MaxPlus per;           // permanent of the moduli
};

Normalized normalize_for_det(const Mat& A0) {
  MpMat B = modulus_matrix(A0);
  Normalized N;
  N.G = tight_graph(B);
  N.per = MaxPlus::bottom();
  N.A = Mat(A0.S, A0.rows, A0.cols);
  Rat total(0);
  for (int i = 0; i < N.G.n; ++i) {
    total = total + N.G.scaling.u[i].v + N.G.scaling.v[i].v;
    for (int j = 0; j < N.G.n; ++j) N.A.at(i, j) = A0.at(N.G.row_perm[i], j);
  }
  N.per = MaxPlus(total);
  // Parity of row_perm as a permutation.
  std::vector<char> seen(N.G.n, 0);
  bool odd = false;
  for (int i = 0; i < N.G.n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = N.G.row_perm[j];
      ++len;
    }
    if (len % 2 == 0) odd = !odd;
  }
  N.odd_perm = odd;
  return N;
}

}  // namespace

Elem det_t2(const Mat& A) {
  const Semiring& S = A.S;
  if (S.base() != BaseKind::N2)
    throw std::invalid_argument("det_t2: expects a bi-valued (t2) matrix");
  if (A.rows != A.cols) throw std::invalid_argument("det_t2: matrix not square");
  if (permanent(modulus_matrix(A)).is_bottom()) return S.zero();
  Normalized N = normalize_for_det(A);
  bool twice = false;
  for (int i = 0; i < N.G.n && !twice; ++i) twice = S.is_balanced(N.A.at(i, i));
  if (!twice) twice = has_multiple_optima(N.G);
  return S.make(twice ? Coeff(N2C::Two) : Coeff(N2C::One), N.per);
}

Elem det_sign_rmax(const MpMat& A) {
  Semiring S = Semiring::smax();
  if (A.rows != A.cols) throw std::invalid_argument("det_sign_rmax: matrix not square");
  if (permanent(A).is_bottom()) return S.zero();
  Normalized N = normalize_for_det(lift_matrix(S, A));
  // The cycle hunt is exponential only in pathological tie patterns; scale
  // the guard to the instance rather than refusing moderate sizes.
  if (has_odd_optimum_pair(N.G, std::max(20, A.rows))) return S.make(BoolC::B, N.per);
  return S.make(N.odd_perm ? BoolC::N : BoolC::P, N.per);
}

Elem det_smax(const Mat& A) {
  const Semiring& S = A.S;
  if (S.base() != BaseKind::SBool)
    throw std::invalid_argument("det_smax: expects a signed (smax) matrix");
  if (A.rows != A.cols) throw std::invalid_argument("det_smax: matrix not square");
  int n = A.rows;
  if (permanent(modulus_matrix(A)).is_bottom()) return S.zero();
  Normalized N = normalize_for_det(A);

  for (int i = 0; i < n; ++i)
    if (S.is_balanced(N.A.at(i, i))) return S.make(BoolC::B, N.per);

  // A balanced entry lying on a cycle of the tight graph joins an optimal
  // permutation, so the determinant is balanced. Arc (i,j) is on a cycle iff
  // i and j share a strongly connected component.
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j : N.G.arcs[i])
      if (j != i) adj[i].push_back(j);
  std::vector<int> comp;
  strongly_connected_components(adj, comp);
  for (int i = 0; i < n; ++i)
    for (int j : N.G.arcs[i])
      if (j != i && comp[i] == comp[j] && S.is_balanced(N.A.at(i, j)))
        return S.make(BoolC::B, N.per);

  // Remaining balanced entries never meet an optimal permutation; drop them
  // and split into nonnegative parts.
  MpMat plus(n, n), minus(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Elem& e = N.A.at(i, j);
      if (e.is_zero() || S.is_balanced(e)) continue;
      (std::get<BoolC>(e.c) == BoolC::P ? plus : minus).at(i, j) = e.m;
    }
  // det(plus - minus) through the doubled block matrix [[P, M], [I, I]],
  // whose entries all live in the nonnegative part.
  MpMat block(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      block.at(i, j) = plus.at(i, j);
      block.at(i, n + j) = minus.at(i, j);
    }
  for (int i = 0; i < n; ++i) {
    block.at(n + i, i) = MaxPlus::unit();
    block.at(n + i, n + i) = MaxPlus::unit();
  }
  Elem d = det_sign_rmax(block);
  return N.odd_perm ? S.negate(d) : d;
}

}  // namespace tropcram
