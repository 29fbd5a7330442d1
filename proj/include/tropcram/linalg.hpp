#pragma once

#include <optional>
#include <vector>

#include "tropcram/semiring.hpp"

namespace tropcram {

// Dense matrix over a semiring.
struct Mat {
  int rows = 0, cols = 0;
  Semiring S = Semiring::smax();
  std::vector<Elem> a;

  Mat() = default;
  Mat(Semiring s, int r, int c) : rows(r), cols(c), S(std::move(s)) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    a.assign(static_cast<size_t>(r) * c, S.zero());
  }
  Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static Mat identity(const Semiring& s, int n);
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// Dense matrix over the max-plus (modulus) semiring.
struct MpMat {
  int rows = 0, cols = 0;
  std::vector<MaxPlus> a;

  MpMat() = default;
  MpMat(int r, int c) : rows(r), cols(c) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    a.assign(static_cast<size_t>(r) * c, MaxPlus::bottom());
  }
  MaxPlus& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const MaxPlus& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static MpMat identity(int n);
  friend bool operator==(const MpMat& x, const MpMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

MpMat modulus_matrix(const Mat& A);
std::vector<MaxPlus> modulus_vector(const Semiring& S, const std::vector<Elem>& x);
Mat lift_matrix(const Semiring& S, const MpMat& A);  // entrywise iota

Mat mat_mul(const Mat& A, const Mat& B);
std::vector<Elem> mat_vec(const Mat& A, const std::vector<Elem>& x);
MpMat mp_mul(const MpMat& A, const MpMat& B);
std::vector<MaxPlus> mp_vec(const MpMat& A, const std::vector<MaxPlus>& x);

// Signed permutation expansion. Exact but factorial; refuses n beyond the
// brute bound (env TROPCRAM_BRUTE_BOUND overrides the default of 9).
int brute_bound();
Elem det(const Mat& A);
Elem det(const Mat& A, int bound);
Mat adjugate(const Mat& A);

// Max-plus Kleene star A* = I + A + ... + A^{n-1}; requires every circuit
// weight <= 0 and throws "divergent star" otherwise.
MpMat kleene_star(const MpMat& A);

// For a matrix with unit diagonal and unit permanent the adjugate equals the
// star; checks both preconditions.
MpMat yoeli_adjugate(const MpMat& A);

// Optimal assignment value; bottom when structurally singular.
MaxPlus permanent(const MpMat& A);

// Hungarian scaling: feasible duals tight on every optimal permutation,
// sigma the lexicographically smallest optimal permutation.
struct Scaling {
  std::vector<MaxPlus> u, v;  // row / column duals, never bottom
  std::vector<int> sigma;     // row i is matched to column sigma[i]
};
Scaling hungarian_scaling(const MpMat& C);

// B = Sigma * D * C * D' with unit diagonal and entries <= unit.
struct NormalForm {
  MpMat B;
  std::vector<MaxPlus> row_scale, col_scale;  // diagonals of D and D'
  std::vector<int> sigma;                     // the permutation behind Sigma
};
NormalForm butkovic_normal_form(const MpMat& C);

// All-bottom block witnessing a structurally singular square matrix
// (row count + column count >= n + 1); nullopt when a finite permutation
// exists.
struct BlockWitness {
  std::vector<int> rows, cols;
};
std::optional<BlockWitness> frobenius_konig(const MpMat& C);

// Maximum bipartite matching on the finite cells; match[i] = column of row i
// or -1. Exposed for the transport module.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right,
                           std::vector<int>& match_left);

}  // namespace tropcram
