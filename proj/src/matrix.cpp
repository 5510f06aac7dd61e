#include "latred/matrix.hpp"

#include <cmath>

namespace latred {

RationalMatrix rational_identity(Eigen::Index n) {
  RationalMatrix id(n, n);
  id.setConstant(Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = Rational(1);
  return id;
}

RationalMatrix rational_inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("rational_inverse: matrix not square");
  const Eigen::Index n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = rational_identity(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix("rational_inverse: singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = a(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Rational rational_det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("rational_det: matrix not square");
  const Eigen::Index n = m.rows();
  RationalMatrix a = m;
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Rational p = a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / p;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

RationalMatrix to_rational(const RealMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RealMatrix exact_conjugate_form(const RationalMatrix& g, const RealMatrix& h) {
  const RationalMatrix exact = g.transpose() * to_rational(h) * g;
  return to_real(exact);
}

std::optional<RationalMatrix> snap_to_integers(const RealMatrix& m, double tol) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double rounded = std::round(m(i, j));
      if (std::abs(m(i, j) - rounded) > tol) return std::nullopt;
      out(i, j) = Rational(static_cast<long long>(rounded));
    }
  }
  return out;
}

bool is_symmetric(const RealMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - RealMatrix(m.transpose())) <= rel_tol * scale;
}

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool all_finite(const RealMatrix& m) { return m.allFinite(); }

}  // namespace latred
