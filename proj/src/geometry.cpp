#include "tropcram/geometry.hpp"

#include <algorithm>

namespace tropcram {

Hyperplane make_hyperplane(const Semiring& S, std::vector<Elem> params) {
  bool nonzero = false;
  for (const Elem& e : params) {
    if (!S.is_thin(e)) throw std::invalid_argument("hyperplane: parameters must be thin");
    nonzero = nonzero || !e.is_zero();
  }
  if (!nonzero) throw std::invalid_argument("hyperplane: parameters must not all be zero");
  return Hyperplane{S, std::move(params)};
}

bool contains(const Hyperplane& H, const std::vector<Elem>& x) {
  if (x.size() != H.params.size())
    throw std::invalid_argument("hyperplane: dimension mismatch (" +
                                std::to_string(H.params.size()) + " vs " +
                                std::to_string(x.size()) + ")");
  const Semiring& S = H.S;
  Elem acc = S.zero();
  for (size_t i = 0; i < x.size(); ++i) acc = S.add(acc, S.mul(H.params[i], x[i]));
  return S.is_balanced(acc);
}

std::vector<int> degenerate_minors(const Mat& V) {
  if (V.cols + 1 != V.rows)
    throw std::invalid_argument("general position: expected an n x (n-1) matrix");
  const Semiring& S = V.S;
  int n = V.rows;
  std::vector<int> bad;
  for (int k = 0; k < n; ++k) {
    Mat M(S, n - 1, n - 1);
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < n - 1; ++j) M.at(r, j) = V.at(i, j);
      ++r;
    }
    Elem d = det_dispatch(M);
    if (d.is_zero() || !S.is_thin(d)) bad.push_back(k + 1);
  }
  return bad;
}

bool general_position(const Mat& V) { return degenerate_minors(V).empty(); }

Hyperplane hyperplane_through(const Mat& V, const ChoicePolicy& pol) {
  const Semiring& S = V.S;
  for (const Elem& e : V.a)
    if (!S.is_thin(e)) throw std::invalid_argument("hyperplane_through: points must be thin");
  std::vector<int> bad = degenerate_minors(V);
  if (!bad.empty()) {
    std::string which;
    for (size_t i = 0; i < bad.size(); ++i)
      which += (i ? ", " : "") + std::to_string(bad[i]);
    throw std::domain_error("hyperplane_through: points not in general position (degenerate "
                            "minors when deleting row " + which + ")");
  }
  // The parameter row vector a satisfies a V ~ 0; transpose into the
  // rectangular homogeneous solver.
  int n = V.rows;
  Mat T(S, n - 1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j) T.at(j, i) = V.at(i, j);
  HomogeneousHat hat = homogeneous_hat(T, pol);
  Hyperplane H = make_hyperplane(S, hat.solution);
  for (int j = 0; j < n - 1; ++j) {
    std::vector<Elem> col(n);
    for (int i = 0; i < n; ++i) col[i] = V.at(i, j);
    if (!contains(H, col))
      throw std::logic_error("hyperplane_through: a defining point escaped the hyperplane");
  }
  return H;
}

Hyperplane sign_transform(const Hyperplane& H, const SignPattern& eps) {
  const Semiring& S = H.S;
  if (S.base() != BaseKind::SBool)
    throw std::invalid_argument("sign_transform: signed hyperplanes only");
  if (eps.eps.size() != H.params.size())
    throw std::invalid_argument("sign_transform: dimension mismatch");
  Hyperplane out = H;
  for (size_t i = 0; i < out.params.size(); ++i) {
    if (eps.eps[i] == -1)
      out.params[i] = S.negate(out.params[i]);
    else if (eps.eps[i] != 1)
      throw std::invalid_argument("sign_transform: pattern entries must be +1 or -1");
  }
  return out;
}

MeetResult meet_hyperplanes(const std::vector<Hyperplane>& hs, const ChoicePolicy& pol) {
  if (hs.empty()) throw std::invalid_argument("meet: no hyperplanes given");
  const Semiring& S = hs[0].S;
  if (S.base() != BaseKind::SBool)
    throw std::invalid_argument("meet: signed hyperplanes only");
  size_t n = hs[0].params.size();
  if (hs.size() + 1 != n)
    throw std::invalid_argument("meet: need n-1 hyperplanes in dimension n");
  Mat W(S, static_cast<int>(n) - 1, static_cast<int>(n));
  for (size_t r = 0; r < hs.size(); ++r) {
    if (hs[r].params.size() != n) throw std::invalid_argument("meet: dimension mismatch");
    for (size_t cidx = 0; cidx < n; ++cidx) W.at(static_cast<int>(r), static_cast<int>(cidx)) =
        hs[r].params[cidx];
  }
  // General position of the parameter matrix (transposed shape for the
  // minor test).
  Mat T(S, static_cast<int>(n), static_cast<int>(n) - 1);
  for (int i = 0; i < W.rows; ++i)
    for (int j = 0; j < W.cols; ++j) T.at(j, i) = W.at(i, j);
  std::vector<int> bad = degenerate_minors(T);
  if (!bad.empty())
    throw std::domain_error("meet: hyperplane parameters not in general position");

  HomogeneousHat hat = homogeneous_hat(W, pol);
  MeetResult out;
  out.projectively_unique = hat.hat_thin;
  out.eps.eps.resize(n);
  out.point.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const Elem& xi = hat.solution[i];
    out.eps.eps[i] = (!xi.is_zero() && std::get<BoolC>(xi.c) == BoolC::N) ? -1 : 1;
    out.point[i] = xi.m;
  }
  // Normalize the first finite coordinate to 0.
  for (size_t i = 0; i < n; ++i)
    if (!out.point[i].is_bottom()) {
      MaxPlus shift = out.point[i].inverse();
      for (size_t j = 0; j < n; ++j) out.point[j] = out.point[j] * shift;
      break;
    }
  return out;
}

}  // namespace tropcram
