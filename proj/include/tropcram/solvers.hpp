#pragma once

#include "tropcram/linalg.hpp"

namespace tropcram {

enum class SolveStatus : uint8_t {
  Unique,
  ExistsNonUnique,
  BalancedDeterminant,
  StructurallySingular,
  NoThinCertificate,
};

const char* to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::StructurallySingular;
  Elem det;
  std::vector<Elem> cramer;                             // adjugate times right-hand side
  std::optional<std::vector<Elem>> solution;            // thin when present
  std::optional<std::vector<MaxPlus>> all_solutions_modulus;  // |det|^-1 |adj b|
  std::vector<std::vector<Elem>> trace;                 // iterates x^1, x^2, ...
  std::vector<int> row_perm;                            // normalization used internally
  int sweeps = 0;                                       // first sweep reaching the limit
};

// A = D + N after row normalization, D diagonal and thin with the full
// determinant modulus; L/U split N for the Gauss-Seidel sweep.
struct JacobiDecomposition {
  std::vector<int> row_perm;  // normalized row i held row row_perm[i] of the input
  Mat A;                      // the normalized matrix itself
  Mat D, N, L, U;
  std::vector<Elem> d_inv;    // inverses of the diagonal entries
};

JacobiDecomposition jacobi_decompose(const Mat& A, const ChoicePolicy& pol = {});

SolveReport jacobi_solve(const Mat& A, const std::vector<Elem>& b,
                         const JacobiDecomposition& dec, const ChoicePolicy& pol = {});
SolveReport gauss_seidel_solve(const Mat& A, const std::vector<Elem>& b,
                               const JacobiDecomposition& dec, const ChoicePolicy& pol = {});

// Convenience wrappers that build the decomposition themselves.
SolveReport jacobi_solve(const Mat& A, const std::vector<Elem>& b,
                         const ChoicePolicy& pol = {});
SolveReport gauss_seidel_solve(const Mat& A, const std::vector<Elem>& b,
                               const ChoicePolicy& pol = {});

// Determinant dispatch: permutation expansion within the brute bound, the
// polynomial assignment-based routes beyond it (signed and bi-valued bases).
Elem det_dispatch(const Mat& A);

SolveReport cramer_solve(const Mat& A, const std::vector<Elem>& b,
                         const ChoicePolicy& pol = {});

SolveReport homogeneous_solve(const Mat& A, const ChoicePolicy& pol = {});

// Rectangular homogeneous system with one more column than rows.
struct HomogeneousHat {
  std::vector<Elem> hat;       // signed maximal minors with alternating signs
  std::vector<Elem> solution;  // thin, same modulus vector as hat
  bool hat_thin = false;       // projective uniqueness certificate
};
HomogeneousHat homogeneous_hat(const Mat& A, const ChoicePolicy& pol = {});

// All Cramer permanent moduli |adj(A) b| from one assignment problem plus a
// Bellman-Ford pass; throws when structurally singular.
std::vector<MaxPlus> cramer_permanents_jacobi(const MpMat& A, const std::vector<MaxPlus>& b);

}  // namespace tropcram
