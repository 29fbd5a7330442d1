#include "tropcram/transport.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "tropcram/io.hpp"
#include "tropcram/solvers.hpp"

namespace tropcram {

namespace {

// Node ids in the bipartite basis tree: rows 0..m-1, then columns m..m+n-1.
struct Simplex {
  int m, n;                  // rows, columns
  const MpMat& c;
  std::vector<std::vector<Rat>> y;
  std::vector<std::pair<int, int>> basis;  // arcs (i, j), |basis| = m + n - 1
  std::vector<Rat> u, v;

  explicit Simplex(const MpMat& cost) : m(cost.rows), n(cost.cols), c(cost) {
    y.assign(m, std::vector<Rat>(n, Rat(0)));
  }

  bool allowed(int i, int j) const { return !c.at(i, j).is_bottom(); }
  bool in_basis(int i, int j) const {
    return std::find(basis.begin(), basis.end(), std::make_pair(i, j)) != basis.end();
  }

  // Remove cycles from the positive support, then extend to a spanning tree.
  void build_basis();
  void compute_duals();
  // One pivot; returns false at optimality.
  bool pivot(PivotRule rule);
  void run(PivotRule rule);
};

void Simplex::build_basis() {
  // Cancel cycles in the support graph until it is a forest.
  auto support_cycle = [&]() -> std::vector<std::pair<int, int>> {
    // DFS over the undirected bipartite support graph, nodes = m + n.
    int V = m + n;
    std::vector<int> parent(V, -2);
    std::vector<std::pair<int, int>> parent_arc(V, {-1, -1});
    for (int start = 0; start < V; ++start) {
      if (parent[start] != -2) continue;
      std::vector<int> stack = {start};
      parent[start] = -1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < m) {
          for (int j = 0; j < n; ++j) {
            if (y[x][j].is_zero()) continue;
            int w = m + j;
            if (w == parent[x]) continue;
            if (parent[w] == -2) {
              parent[w] = x;
              parent_arc[w] = {x, j};
              stack.push_back(w);
            } else {
              // Found a cycle through arc (x, j): climb both endpoints.
              std::vector<int> anc_x, anc_w;
              for (int t = x; t != -1; t = parent[t]) anc_x.push_back(t);
              for (int t = w; t != -1; t = parent[t]) anc_w.push_back(t);
              // Lowest common ancestor by membership.
              std::vector<char> in_x(V, 0);
              for (int t : anc_x) in_x[t] = 1;
              int lca = -1;
              for (int t : anc_w)
                if (in_x[t]) {
                  lca = t;
                  break;
                }
              std::vector<std::pair<int, int>> cyc;
              for (int t = x; t != lca; t = parent[t]) cyc.push_back(parent_arc[t]);
              std::reverse(cyc.begin(), cyc.end());
              cyc.push_back({x, j});
              for (int t = w; t != lca; t = parent[t]) cyc.push_back(parent_arc[t]);
              return cyc;
            }
          }
        } else {
          int j = x - m;
          for (int i = 0; i < m; ++i) {
            if (y[i][j].is_zero()) continue;
            if (parent[x] == i) continue;
            if (parent[i] == -2) {
              parent[i] = x;
              parent_arc[i] = {i, j};
              stack.push_back(i);
            } else {
              std::vector<int> anc_x, anc_w;
              for (int t = x; t != -1; t = parent[t]) anc_x.push_back(t);
              for (int t = i; t != -1; t = parent[t]) anc_w.push_back(t);
              std::vector<char> in_x(m + n, 0);
              for (int t : anc_x) in_x[t] = 1;
              int lca = -1;
              for (int t : anc_w)
                if (in_x[t]) {
                  lca = t;
                  break;
                }
              std::vector<std::pair<int, int>> cyc;
              for (int t = x; t != lca; t = parent[t]) cyc.push_back(parent_arc[t]);
              std::reverse(cyc.begin(), cyc.end());
              cyc.push_back({i, j});
              for (int t = i; t != lca; t = parent[t]) cyc.push_back(parent_arc[t]);
              return cyc;
            }
          }
        }
      }
    }
    return {};
  };

  while (true) {
    auto cyc = support_cycle();
    if (cyc.empty()) break;
    // Alternate +/- around the cycle; arcs listed consecutively share a node,
    // so parity alternates row->col / col->row.
    std::optional<Rat> theta;
    for (size_t t = 1; t < cyc.size(); t += 2) {
      const Rat& f = y[cyc[t].first][cyc[t].second];
      if (!theta || f < *theta) theta = f;
    }
    if (!theta || theta->is_zero())
      throw std::logic_error("transport: degenerate support cycle");
    for (size_t t = 0; t < cyc.size(); ++t) {
      Rat& f = y[cyc[t].first][cyc[t].second];
      f = (t % 2 == 0) ? f + *theta : f - *theta;
    }
  }

  // Collect the support forest, then grow it to a spanning tree with allowed
  // zero arcs (the allowed graph of a feasible instance is connected).
  int V = m + n;
  std::vector<int> dsu(V);
  std::iota(dsu.begin(), dsu.end(), 0);
  std::function<int(int)> find = [&](int x) { return dsu[x] == x ? x : dsu[x] = find(dsu[x]); };
  basis.clear();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (y[i][j].is_zero()) continue;
      basis.push_back({i, j});
      dsu[find(i)] = find(m + j);
    }
  for (int i = 0; i < m && basis.size() + 1 < static_cast<size_t>(V); ++i)
    for (int j = 0; j < n && basis.size() + 1 < static_cast<size_t>(V); ++j) {
      if (!allowed(i, j)) continue;
      if (find(i) == find(m + j)) continue;
      basis.push_back({i, j});
      dsu[find(i)] = find(m + j);
    }
  if (basis.size() != static_cast<size_t>(V) - 1)
    throw std::logic_error("transport: could not build a spanning basis");
}

void Simplex::compute_duals() {
  u.assign(m, Rat(0));
  v.assign(n, Rat(0));
  int V = m + n;
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj(V);
  for (const auto& [i, j] : basis) {
    adj[i].push_back({m + j, {i, j}});
    adj[m + j].push_back({i, {i, j}});
  }
  std::vector<char> seen(V, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;  // root at row 0, u[0] = 0
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [w, arc] : adj[x]) {
      if (seen[w]) continue;
      seen[w] = 1;
      const Rat cost = c.at(arc.first, arc.second).v;
      if (w >= m)
        v[w - m] = cost - u[arc.first];
      else
        u[w] = cost - v[arc.second];
      stack.push_back(w);
    }
  }
}

bool Simplex::pivot(PivotRule rule) {
  compute_duals();
  int ei = -1, ej = -1;
  Rat best(0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (!allowed(i, j) || in_basis(i, j)) continue;
      Rat rp = c.at(i, j).v - u[i] - v[j];
      if (rp > Rat(0)) {
        if (rule == PivotRule::Bland) {
          ei = i;
          ej = j;
          goto found;
        }
        if (rp > best) {
          best = rp;
          ei = i;
          ej = j;
        }
      }
    }
found:
  if (ei < 0) return false;

  // The entering arc closes one cycle with the basis tree: find the tree path
  // from column ej back to row ei.
  int V = m + n;
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj(V);
  for (const auto& [i, j] : basis) {
    adj[i].push_back({m + j, {i, j}});
    adj[m + j].push_back({i, {i, j}});
  }
  std::vector<int> parent(V, -2);
  std::vector<std::pair<int, int>> parent_arc(V);
  std::vector<int> stack = {ei};
  parent[ei] = -1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [w, arc] : adj[x]) {
      if (parent[w] != -2) continue;
      parent[w] = x;
      parent_arc[w] = arc;
      stack.push_back(w);
    }
  }
  if (parent[m + ej] == -2) throw std::logic_error("transport: basis not spanning");
  std::vector<std::pair<int, int>> path;  // from m+ej up to ei
  for (int t = m + ej; t != ei; t = parent[t]) path.push_back(parent_arc[t]);
  // Cycle: entering arc (+), then the path arcs alternate (-, +, -, ...).
  std::optional<Rat> theta;
  std::pair<int, int> leave{-1, -1};
  for (size_t t = 0; t < path.size(); t += 2) {
    const Rat& f = y[path[t].first][path[t].second];
    if (!theta || f < *theta || (f == *theta && path[t] < leave)) {
      theta = f;
      leave = path[t];
    }
  }
  if (!theta) throw std::logic_error("transport: entering arc closes no cycle");
  y[ei][ej] = y[ei][ej] + *theta;
  for (size_t t = 0; t < path.size(); ++t) {
    Rat& f = y[path[t].first][path[t].second];
    f = (t % 2 == 0) ? f - *theta : f + *theta;
  }
  for (auto& arc : basis)
    if (arc == leave) {
      arc = {ei, ej};
      break;
    }
  return true;
}

void Simplex::run(PivotRule rule) {
  build_basis();
  long cap = 200000;
  while (pivot(rule)) {
    if (--cap <= 0) throw std::logic_error("transport: pivot cap exceeded");
  }
  compute_duals();
}

bool feasible_matchings(const MpMat& C) {
  int m = C.rows, n = C.cols;
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (j != k && !C.at(i, j).is_bottom()) adj[i].push_back(j);
    std::vector<int> match;
    if (max_bipartite_matching(adj, n, match) < m) return false;
  }
  return true;
}

}  // namespace

TransportSolution solve_transport(const TransportProblem& P, PivotRule rule) {
  const MpMat& C = P.cost;
  if (C.cols != C.rows + 1)
    throw std::invalid_argument("transport: expected one more column than rows");
  if (!feasible_matchings(C))
    throw std::domain_error("infeasible: some maximal minor is -inf");

  Simplex sx(C);
  // Initial feasible point: one matching avoiding each column, summed.
  int m = C.rows, n = C.cols;
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (j != k && !C.at(i, j).is_bottom()) adj[i].push_back(j);
    std::vector<int> match;
    max_bipartite_matching(adj, n, match);
    for (int i = 0; i < m; ++i) sx.y[i][match[i]] = sx.y[i][match[i]] + Rat(1);
  }
  sx.run(rule);

  TransportSolution sol;
  sol.y = sx.y;
  sol.dual.u = sx.u;
  sol.dual.v = sx.v;
  sol.value = Rat(0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (!sol.y[i][j].is_zero()) sol.value = sol.value + C.at(i, j).v * sol.y[i][j];

  // Complementary slackness is part of the contract; fail loudly otherwise.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (!C.at(i, j).is_bottom() && C.at(i, j).v > sx.u[i] + sx.v[j])
        throw std::logic_error("transport: dual infeasible after optimization");
      if (!sol.y[i][j].is_zero() && C.at(i, j).v != sx.u[i] + sx.v[j])
        throw std::logic_error("transport: complementary slackness violated");
    }

  // Connectivity of the positive support.
  int V = m + n;
  std::vector<int> dsu(V);
  std::iota(dsu.begin(), dsu.end(), 0);
  std::function<int(int)> find = [&](int x) { return dsu[x] == x ? x : dsu[x] = find(dsu[x]); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (!sol.y[i][j].is_zero()) dsu[find(i)] = find(m + j);
  sol.support_connected = true;
  for (int x = 1; x < V; ++x) sol.support_connected &= find(x) == find(0);
  return sol;
}

std::vector<MaxPlus> cramer_permanents_transport(const MpMat& C, PivotRule rule) {
  TransportProblem P{C};
  TransportSolution sol = solve_transport(P, rule);
  int n = C.cols;
  Rat usum(0), vsum(0);
  for (const Rat& x : sol.dual.u) usum = usum + x;
  for (const Rat& x : sol.dual.v) vsum = vsum + x;
  std::vector<MaxPlus> out(n);
  for (int k = 0; k < n; ++k) out[k] = MaxPlus(usum + vsum - sol.dual.v[k]);
  return out;
}

std::vector<MaxPlus> cramer_permanents_brute(const MpMat& C) {
  int m = C.rows, n = C.cols;
  if (n != m + 1) throw std::invalid_argument("expected one more column than rows");
  std::vector<MaxPlus> out(n);
  for (int k = 0; k < n; ++k) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (j != k) cols.push_back(j);
    MaxPlus best;
    std::sort(cols.begin(), cols.end());
    do {
      MaxPlus w = MaxPlus::unit();
      for (int i = 0; i < m; ++i) w = w * C.at(i, cols[i]);
      best = best + w;
    } while (std::next_permutation(cols.begin(), cols.end()));
    out[k] = best;
  }
  return out;
}

CrossCheckReport cross_check_permanents(const MpMat& C) {
  CrossCheckReport rep;
  rep.cases = 1;
  int m = C.rows, n = C.cols;
  auto clock_ms = [] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  };
  double t0 = clock_ms();
  std::vector<MaxPlus> brute = cramer_permanents_brute(C);
  rep.brute_ms = clock_ms() - t0;
  bool any_bottom = false, all_bottom = true;
  for (const MaxPlus& x : brute) {
    any_bottom |= x.is_bottom();
    all_bottom &= x.is_bottom();
  }

  bool ok = true;
  std::string why;

  // Transportation route: must succeed exactly on the all-finite instances.
  try {
    double t1 = clock_ms();
    std::vector<MaxPlus> tr = cramer_permanents_transport(C);
    rep.transport_ms = clock_ms() - t1;
    if (any_bottom) {
      ok = false;
      why = "transport accepted an infeasible instance";
    } else {
      for (int k = 0; k < n; ++k)
        if (tr[k] != brute[k]) {
          ok = false;
          why = "transport disagrees at column " + std::to_string(k + 1) + ": " +
                tr[k].to_string() + " vs " + brute[k].to_string();
        }
    }
  } catch (const std::domain_error&) {
    if (!any_bottom) {
      ok = false;
      why = "transport rejected a feasible instance";
    }
  }

  // Assignment + shortest path route, based on the first structurally
  // nonsingular column deletion.
  if (ok && !all_bottom) {
    double t2 = clock_ms();
    int kstar = -1;
    for (int k = 0; k < n && kstar < 0; ++k)
      if (!brute[k].is_bottom()) kstar = k;
    MpMat M(m, m);
    std::vector<MaxPlus> b(m);
    int cc = 0;
    for (int j = 0; j < n; ++j) {
      if (j == kstar) {
        for (int i = 0; i < m; ++i) b[i] = C.at(i, j);
        continue;
      }
      for (int i = 0; i < m; ++i) M.at(i, cc) = C.at(i, j);
      ++cc;
    }
    std::vector<MaxPlus> adjb = cramer_permanents_jacobi(M, b);
    std::vector<MaxPlus> jr(n);
    jr[kstar] = permanent(M);
    cc = 0;
    for (int j = 0; j < n; ++j) {
      if (j == kstar) continue;
      jr[j] = adjb[cc++];
    }
    for (int k = 0; k < n; ++k)
      if (jr[k] != brute[k]) {
        ok = false;
        why = "assignment route disagrees at column " + std::to_string(k + 1) + ": " +
              jr[k].to_string() + " vs " + brute[k].to_string();
      }
    rep.jacobi_ms = clock_ms() - t2;
  }

  if (ok)
    rep.agreed = 1;
  else
    rep.first_failure = why + "\n" + format_mpmat(C);
  return rep;
}

CrossCheckReport cross_check_random(int n, int cases, uint64_t seed, int magnitude) {
  if (n < 2) throw std::invalid_argument("cross-check needs n >= 2");
  CrossCheckReport rep;
  uint64_t state = seed;
  auto next = [&]() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (int t = 0; t < cases; ++t) {
    MpMat C(n - 1, n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n; ++j)
        C.at(i, j) = MaxPlus(Rat(static_cast<long long>(next() % (2 * magnitude + 1)) - magnitude));
    CrossCheckReport one = cross_check_permanents(C);
    rep.cases += one.cases;
    rep.agreed += one.agreed;
    rep.brute_ms += one.brute_ms;
    rep.jacobi_ms += one.jacobi_ms;
    rep.transport_ms += one.transport_ms;
    if (!one.ok() && rep.first_failure.empty()) rep.first_failure = one.first_failure;
  }
  return rep;
}

}  // namespace tropcram
