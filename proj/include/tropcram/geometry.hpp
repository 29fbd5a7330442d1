#pragma once

#include "tropcram/solvers.hpp"

namespace tropcram {

// Hyperplane of thin vectors: the points whose pairing with the parameter
// vector balances zero.
struct Hyperplane {
  Semiring S = Semiring::smax();
  std::vector<Elem> params;  // thin, not all zero
};

Hyperplane make_hyperplane(const Semiring& S, std::vector<Elem> params);

bool contains(const Hyperplane& H, const std::vector<Elem>& x);

// All maximal minors of the n x (n-1) matrix are thin and nonzero.
bool general_position(const Mat& V);
std::vector<int> degenerate_minors(const Mat& V);  // 1-based deleted-row indices

// The unique hyperplane through n-1 points in general position (points are
// the columns of V).
Hyperplane hyperplane_through(const Mat& V, const ChoicePolicy& pol = {});

struct SignPattern {
  std::vector<int> eps;  // entries +1 / -1
};

// Entrywise multiplication of the parameters by the sign pattern; an
// involution. Signed (smax) hyperplanes only.
Hyperplane sign_transform(const Hyperplane& H, const SignPattern& eps);

// Where n-1 signed hyperplanes in general position meet after the unique
// sign transformation: the pattern and the nonnegative point (first finite
// coordinate normalized to 0).
struct MeetResult {
  SignPattern eps;
  std::vector<MaxPlus> point;
  bool projectively_unique = false;
};
MeetResult meet_hyperplanes(const std::vector<Hyperplane>& hs, const ChoicePolicy& pol = {});

}  // namespace tropcram
