#include "latred/iwasawa.hpp"

#include <cmath>

#include "latred/size_reduce.hpp"

namespace latred {

namespace {

// Classical Gram-Schmidt through column `last` (exclusive); fills mu rows for
// all columns against the first `last` orthogonal vectors.
struct GramSchmidt {
  RealMatrix vstar;  // columns e_i^* in standard coordinates
  RealVector d;      // squared norms
  RealMatrix mu;
};

GramSchmidt gram_schmidt(const RealMatrix& H, int last, double pd_eps) {
  const int dim = static_cast<int>(H.rows());
  GramSchmidt gs{RealMatrix::Identity(dim, dim), RealVector::Zero(dim),
                 RealMatrix::Identity(dim, dim)};
  for (int i = 0; i < last; ++i) {
    RealVector v = RealVector::Zero(dim);
    v[i] = 1.0;
    for (int k = 0; k < i; ++k) {
      const double m = H.col(i).dot(gs.vstar.col(k)) / gs.d[k];
      gs.mu(k, i) = m;
      v -= m * gs.vstar.col(k);
    }
    gs.vstar.col(i) = v;
    gs.d[i] = v.dot(H * v);
    if (!(gs.d[i] > pd_eps))
      throw NotPositiveDefinite("Gram-Schmidt norm " + std::to_string(i) +
                                " is not positive: " + std::to_string(gs.d[i]));
  }
  for (int j = last; j < dim; ++j)
    for (int i = 0; i < last; ++i) gs.mu(i, j) = H.col(j).dot(gs.vstar.col(i)) / gs.d[i];
  return gs;
}

}  // namespace

RealMatrix gram_of(const IwasawaPair& p) {
  const RealMatrix an = p.a.asDiagonal() * p.n;
  return an.transpose() * an;
}

bool check_compatible(const GroupDescriptor& desc, const RealMatrix& H, double rel_tol) {
  if (H.rows() != desc.dim || H.cols() != desc.dim) return false;
  if (!all_finite(H) || !is_symmetric(H, 1e-10)) return false;
  if (!desc.form) return true;
  const RealMatrix& s = *desc.form;
  const double hnorm = H.cwiseAbs().rowwise().sum().maxCoeff();
  const double resid = max_abs(RealMatrix(H * s * H - s));
  return resid <= rel_tol * (1.0 + hnorm * hnorm);
}

IwasawaPair iwasawa_decompose(const GroupDescriptor& desc, const RealMatrix& H, double pd_eps) {
  if (H.rows() != desc.dim || H.cols() != desc.dim)
    throw DimensionMismatch("iwasawa_decompose: wrong dimension");
  if (!check_compatible(desc, H))
    throw IncompatibleGram("iwasawa_decompose: H is not compatible with the group form");
  const GramSchmidt gs = gram_schmidt(H, desc.dim, pd_eps);
  IwasawaPair p;
  p.a = gs.d.cwiseSqrt();
  p.n = gs.mu;
  return p;
}

IwasawaPair restore_compatible(const GroupDescriptor& desc, const RealMatrix& H, double rel_tol) {
  if (H.rows() != desc.dim || H.cols() != desc.dim)
    throw DimensionMismatch("restore_compatible: wrong dimension");
  if (!check_compatible(desc, H, rel_tol))
    throw IncompatibleGram("restore_compatible: H is not compatible with the group form");

  const int dim = desc.dim;
  if (desc.kind == GroupKind::SL) {
    IwasawaPair p = iwasawa_decompose(desc, H);
    double logdet = 0.0;
    for (int i = 0; i < dim; ++i) logdet += std::log(p.a[i]);
    p.a *= std::exp(-logdet / dim);
    p.n = rebuild_unipotent(desc, solve_coordinates(desc, p.n));
    return p;
  }

  // Only the leading half of the Gram-Schmidt data is numerically trusted;
  // the trailing half of a compatible H repeats it through the form.
  const int g = desc.g > 0 ? desc.g : dim / 2;
  const GramSchmidt gs = gram_schmidt(H, g, 1e-14);

  IwasawaPair p;
  p.a = RealVector::Ones(dim);
  for (int i = 0; i < g; ++i) {
    p.a[i] = std::sqrt(gs.d[i]);
    p.a[dim - 1 - i] = 1.0 / p.a[i];
  }
  if (desc.kind == GroupKind::G2) {
    // torus is diag(st, s, t, 1, 1, 1/t, 1/s, 1/(st))
    const double l1 = std::log(p.a[0]), l2 = std::log(p.a[1]), l3 = std::log(p.a[2]);
    const double ls = (l2 + l1 - l3) / 2.0, lt = (l3 + l1 - l2) / 2.0;
    const double s = std::exp(ls), t = std::exp(lt);
    p.a << s * t, s, t, 1.0, 1.0, 1.0 / t, 1.0 / s, 1.0 / (s * t);
  }

  // Solve the unipotent coordinates from the marker entries, which all live
  // in the trusted rows, then rebuild the factor from the generators.
  p.n = rebuild_unipotent(desc, solve_coordinates(desc, gs.mu));
  return p;
}

RealMatrix sp_H_to_J(const GroupDescriptor& desc, const RealMatrix& H) {
  if (desc.kind != GroupKind::Sp) throw std::invalid_argument("sp_H_to_J: symplectic engine only");
  if (!check_compatible(desc, H)) throw IncompatibleGram("sp_H_to_J: H not compatible");
  const RealMatrix& s = *desc.form;
  // S^{-1} = -S, so J = -S^{-1} H = S H.
  return s * H;
}

}  // namespace latred
