#pragma once

#include <span>
#include <vector>

#include "latred/group.hpp"
#include "latred/matrix.hpp"

namespace latred {

/// A root ordering (as coordinate vectors over the simple roots) is good when
/// every relation alpha_k = c_i alpha_i + c_j alpha_j with integers
/// c_i, c_j >= 1 has k > max(i, j). Exhaustive scan.
bool is_good_ordering(std::span<const Eigen::VectorXi> roots);

/// Checks the descriptor's stored ordering.
bool verify_good_ordering(const GroupDescriptor& desc);

/// Coordinates of n relative to the ordered product of root groups:
/// n = u_{a1}(t1) ... u_{ar}(tr). Peel-off: read each t from the residual's
/// marker entry, then strip the factor from the left. Throws
/// std::runtime_error when the final residual is not the identity.
std::vector<double> coordinates(const GroupDescriptor& desc, const RealMatrix& n,
                                double residual_tol = 1e-9);
std::vector<Rational> coordinates(const GroupDescriptor& desc, const RationalMatrix& n);

/// Triangular coordinate extraction reading only marker entries:
/// t_k = marker_k(m) - marker_k(u_{a1}(t1) ... u_{a_{k-1}}(t_{k-1})).
/// Agrees with `coordinates` on members of N but never divides by the
/// untrusted rows of a perturbed matrix.
std::vector<double> solve_coordinates(const GroupDescriptor& desc, const RealMatrix& m);

/// u_{a1}(t1) ... u_{ar}(tr).
RealMatrix rebuild_unipotent(const GroupDescriptor& desc, std::span<const double> coords);
RationalMatrix rebuild_unipotent(const GroupDescriptor& desc, std::span<const Rational> coords);

template <typename Scalar>
struct SizeReduction {
  RationalMatrix gamma;   ///< integral unipotent with n * gamma size-reduced
  Matrix<Scalar> reduced; ///< n * gamma
};

/// The unique gamma in N(Z) with all coordinates of n * gamma in [-1/2, 1/2),
/// chosen inductively along the stored good ordering.
SizeReduction<double> size_reduce(const GroupDescriptor& desc, const RealMatrix& n);
SizeReduction<Rational> size_reduce(const GroupDescriptor& desc, const RationalMatrix& n);

/// Integer m with t + m in [-1/2, 1/2).
long long box_offset(double t);
BigInt box_offset(const Rational& t);

}  // namespace latred
