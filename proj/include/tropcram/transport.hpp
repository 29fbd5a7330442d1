#pragma once

#include "tropcram/linalg.hpp"

namespace tropcram {

// Maximize sum c_ij y_ij over nonnegative (n-1) x n matrices with row sums n
// and column sums n-1; bottom costs are excluded arcs.
struct TransportProblem {
  MpMat cost;  // (n-1) x n
  int n() const { return cost.cols; }
};

struct TransportDual {
  std::vector<Rat> u;  // length n-1
  std::vector<Rat> v;  // length n
};

struct TransportSolution {
  std::vector<std::vector<Rat>> y;  // primal vertex, (n-1) x n
  TransportDual dual;               // normalized so u[0] = 0
  Rat value;
  bool support_connected = false;  // support of y spans one tree
};

enum class PivotRule : uint8_t { Bland, BestImprovement };

// Exact primal network simplex on the transportation polytope; throws
// "infeasible: some maximal minor is -inf" when a Cramer permanent is
// infinite.
TransportSolution solve_transport(const TransportProblem& P,
                                  PivotRule rule = PivotRule::Bland);

// The n Cramer permanents of an (n-1) x n matrix from one transportation
// dual: per C_(k) = sum u + sum_{j != k} v_j.
std::vector<MaxPlus> cramer_permanents_transport(const MpMat& C,
                                                 PivotRule rule = PivotRule::Bland);

// Brute-force Cramer permanents (maximization over bijections); factorial,
// for cross-checks only.
std::vector<MaxPlus> cramer_permanents_brute(const MpMat& C);

// Runs brute force (within the brute bound), the assignment + shortest-path
// route, and the transportation route, and insists on exact agreement.
struct CrossCheckReport {
  int cases = 0, agreed = 0;
  double brute_ms = 0, jacobi_ms = 0, transport_ms = 0;
  std::string first_failure;  // matrix text when a disagreement was caught
  bool ok() const { return cases == agreed; }
};
CrossCheckReport cross_check_permanents(const MpMat& C);
CrossCheckReport cross_check_random(int n, int cases, uint64_t seed, int magnitude = 10);

}  // namespace tropcram
