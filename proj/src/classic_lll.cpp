#include "latred/reduce.hpp"

#include <cmath>

namespace latred {

namespace {

struct GS {
  RealVector d;
  RealMatrix mu;
};

GS gram_schmidt(const RealMatrix& H) {
  const int n = static_cast<int>(H.rows());
  GS gs{RealVector::Zero(n), RealMatrix::Identity(n, n)};
  RealMatrix vstar = RealMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    RealVector v = RealVector::Zero(n);
    v[i] = 1.0;
    for (int k = 0; k < i; ++k) {
      gs.mu(k, i) = H.col(i).dot(vstar.col(k)) / gs.d[k];
      v -= gs.mu(k, i) * vstar.col(k);
    }
    vstar.col(i) = v;
    gs.d[i] = v.dot(H * v);
    if (!(gs.d[i] > 0.0)) throw NotPositiveDefinite("classic LLL: Gram matrix not positive definite");
  }
  return gs;
}

}  // namespace

RealMatrix classic_lll_reference(const RealMatrix& H, double delta) {
  const int n = static_cast<int>(H.rows());
  RealMatrix U = RealMatrix::Identity(n, n);
  RealMatrix G = H;

  auto size_reduce_col = [&](int i, int j) {  // make |mu_ij| <= 1/2
    const GS gs = gram_schmidt(G);
    const double m = std::round(gs.mu(i, j));
    if (m != 0.0) {
      RealMatrix t = RealMatrix::Identity(n, n);
      t(i, j) = -m;
      U = U * t;
      G = t.transpose() * G * t;
    }
  };

  int k = 1;
  long guard = 0;
  while (k < n) {
    if (++guard > 100000) throw IterationLimit("classic LLL: too many iterations");
    for (int i = k - 1; i >= 0; --i) size_reduce_col(i, k);
    const GS gs = gram_schmidt(G);
    if (gs.d[k] >= (delta - gs.mu(k - 1, k) * gs.mu(k - 1, k)) * gs.d[k - 1]) {
      ++k;
    } else {
      RealMatrix p = RealMatrix::Identity(n, n);
      p.col(k - 1).swap(p.col(k));
      U = U * p;
      G = p.transpose() * G * p;
      k = std::max(k - 1, 1);
    }
  }
  // final pass so every column is size-reduced
  for (int j = 1; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) size_reduce_col(i, j);
  return U;
}

bool satisfies_classic_reduction(const RealMatrix& H, double delta, double tol) {
  const GS gs = gram_schmidt(H);
  const int n = static_cast<int>(H.rows());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (std::abs(gs.mu(i, j)) > 0.5 + tol) return false;
  for (int i = 0; i + 1 < n; ++i) {
    const double m = gs.mu(i, i + 1);
    if (gs.d[i] / gs.d[i + 1] > 1.0 / (delta - m * m) + tol) return false;
  }
  return true;
}

}  // namespace latred
