#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <optional>
#include <stdexcept>

#include "latred/rational.hpp"

namespace latred {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealMatrix = Matrix<double>;
using RealVector = Eigen::VectorXd;
using RationalMatrix = Matrix<Rational>;
using IntMatrix = Eigen::MatrixXi;

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// t(g) H g, the pullback of the form H along g.
template <typename Scalar>
Matrix<Scalar> conjugate_form(const Matrix<Scalar>& g, const Matrix<Scalar>& h) {
  if (g.rows() != h.cols() || h.rows() != h.cols())
    throw DimensionMismatch("conjugate_form: shapes do not match");
  return g.transpose() * h * g;
}

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
RationalMatrix rational_inverse(const RationalMatrix& m);

/// Exact determinant by fraction-free elimination.
Rational rational_det(const RationalMatrix& m);

RationalMatrix rational_identity(Eigen::Index n);

RealMatrix to_real(const RationalMatrix& m);

/// Exact lift: every double is a binary rational.
RationalMatrix to_rational(const RealMatrix& m);

/// t(g) H g evaluated exactly and rounded once at the end; avoids the
/// catastrophic cancellation of the floating product when g and H are large.
RealMatrix exact_conjugate_form(const RationalMatrix& g, const RealMatrix& h);

/// Entrywise nearest-integer snap; empty if some entry is farther than `tol`
/// from an integer.
std::optional<RationalMatrix> snap_to_integers(const RealMatrix& m, double tol = 1e-6);

bool is_symmetric(const RealMatrix& m, double rel_tol = 1e-12);

double max_abs(const RealMatrix& m);

/// Rejects NaN/Inf entries.
bool all_finite(const RealMatrix& m);

}  // namespace latred
