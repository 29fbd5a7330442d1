#pragma once

#include <functional>

#include "tropcram/linalg.hpp"

namespace tropcram {

// Digraph of the arcs achieving equality in a Hungarian scaling, after the
// rows are permuted so the identity permutation is optimal. Contains every
// loop; its non-loop cycles are exactly the ways of deviating from the
// identity without losing optimality.
struct TightGraph {
  int n = 0;
  std::vector<std::vector<int>> arcs;  // out-neighbours, loops included
  std::vector<int> row_perm;           // normalized row i held row_perm[i] of C
  Scaling scaling;                     // duals for the normalized matrix

  bool has_arc(int i, int j) const;
};

TightGraph tight_graph(const MpMat& C);  // throws when structurally singular

bool has_multiple_optima(const TightGraph& G);

// True iff the graph holds a cycle of even length >= 2 (two optimal
// permutations of different parity). Cycle enumeration is exponential in the
// worst case; graphs beyond `node_cap` nodes are refused.
bool has_odd_optimum_pair(const TightGraph& G, int node_cap = 20);

// Visit elementary non-loop cycles (Johnson-style); stop early when the
// visitor returns true. Returns whether a visitor accepted a cycle.
bool enumerate_cycles(const std::vector<std::vector<int>>& adj,
                      const std::function<bool(const std::vector<int>&)>& visit,
                      int node_cap = 20);

// Strongly connected components; comp[v] identifies the component of v.
int strongly_connected_components(const std::vector<std::vector<int>>& adj,
                                  std::vector<int>& comp);

// Polynomial determinant over the bi-valued semiring: the permanent carries
// multiplicity two exactly when a balanced diagonal survives normalization or
// the tight graph has a non-loop cycle.
Elem det_t2(const Mat& A);

// Determinant of a nonnegative-signed matrix seen in the sign extension:
// balanced when optimal permutations of mixed parity exist, otherwise signed
// by the parity of the optimal permutation class.
Elem det_sign_rmax(const MpMat& A);

// Full signed determinant in polynomial time: balanced-entry-on-cycle
// pre-pass, then the 2n x 2n block reduction to det_sign_rmax.
Elem det_smax(const Mat& A);

}  // namespace tropcram
