#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "latred/matrix.hpp"

namespace latred {

enum class GroupKind { SL, Sp, SO, G2 };

GroupKind parse_group_kind(const std::string& name);
std::string to_string(GroupKind kind);

/// Label of a positive root in the group's own bookkeeping.
///  SL:  Difference with 1 <= i < j <= g.
///  Sp:  Difference/Sum with -g <= i < j <= -1, Long with -g <= i <= -1.
///  SO:  Difference/Sum with -g <= i < j <= -1.
///  G2:  Exceptional with i in 1..6.
struct RootLabel {
  enum class Type { Difference, Sum, Long, Exceptional };
  Type type = Type::Difference;
  int i = 0;
  int j = 0;

  static RootLabel difference(int i, int j) { return {Type::Difference, i, j}; }
  static RootLabel sum(int i, int j) { return {Type::Sum, i, j}; }
  static RootLabel long_root(int i) { return {Type::Long, i, 0}; }
  static RootLabel exceptional(int k) { return {Type::Exceptional, k, 0}; }

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
};

std::string to_string(const RootLabel& label);

/// One additive term of a root-group generator: u(t) gains coeff * t^degree
/// at (row, col).
struct PatternEntry {
  int row = 0;
  int col = 0;
  int coeff = 0;
  int degree = 1;
};

struct RootData {
  RootLabel label;
  std::vector<PatternEntry> pattern;
  Eigen::VectorXi char_exponents;  ///< exponents over diagonal positions
  Eigen::VectorXi simple_coords;   ///< coordinates in the simple-root basis
  int height = 0;
  int marker_row = 0;              ///< designated entry reading off the parameter
  int marker_col = 0;
  int marker_sign = 1;
};

/// Full root datum of one engine, frozen at construction. Positive roots are
/// stored in a height-respecting good ordering with the simple roots first.
struct GroupDescriptor {
  GroupKind kind = GroupKind::SL;
  int g = 0;     ///< rank parameter (SL_g, Sp_2g, SO_2g; ignored for G2)
  int dim = 0;   ///< dimension of the standard representation
  int rank = 0;  ///< number of simple roots

  std::optional<RealMatrix> form;               ///< S, when the group preserves one
  std::optional<RationalMatrix> form_exact;

  std::vector<RootData> positive;               ///< simple roots come first
  std::vector<Eigen::VectorXi> coroot_exponents;
  std::vector<RationalMatrix> reflections;      ///< s_alpha, integral
  std::vector<RealMatrix> reflections_real;
  std::vector<int> red_schedule;                ///< column-operation order for size reduction

  int root_count() const { return static_cast<int>(positive.size()); }
  int find_root(const RootLabel& label) const;  ///< -1 when absent
};

/// Builds and validates the descriptor. Throws std::invalid_argument for
/// unsupported ranks (Sp needs g >= 2, SO needs g >= 3).
GroupDescriptor make_group_descriptor(GroupKind kind, int g = 0);

/// u_alpha(t) in the requested scalar type.
template <typename Scalar>
Matrix<Scalar> root_group_element(const GroupDescriptor& desc, int root_index, const Scalar& t);

/// Integral lift of the simple Weyl reflection for the simple root `simple`.
const RationalMatrix& simple_reflection(const GroupDescriptor& desc, int simple);

/// Value of the root character at the torus element with diagonal `a`.
double char_eval(const GroupDescriptor& desc, int root_index, const RealVector& a);

/// Torus element alpha_check(z) for a simple root.
RealVector coroot_apply(const GroupDescriptor& desc, int simple, double z);

/// s_alpha(a) = a / alpha_check(alpha(a)).
RealVector reflect_torus(const GroupDescriptor& desc, int simple, const RealVector& a);

/// Marker coordinate of any positive root: sign * entry at the marker
/// position, so that the coordinate of u_alpha(t) is t.
double marker_coordinate(const GroupDescriptor& desc, int root_index, const RealMatrix& n);
Rational marker_coordinate(const GroupDescriptor& desc, int root_index, const RationalMatrix& n);

/// p_alpha for a simple root (the designated matrix entry of n).
double p_alpha(const GroupDescriptor& desc, int simple, const RealMatrix& n);

/// Size-reduction window: every positive root's marker coordinate lies in
/// [-1/2, 1/2).
bool in_omega(const GroupDescriptor& desc, const RealMatrix& n);

/// Torus membership check for the group's diagonal constraints.
bool is_valid_torus(const GroupDescriptor& desc, const RealVector& a, double rel_tol = 1e-9);

/// Unipotent membership: unit upper-triangular and, when a form is present,
/// t(n) S n = S within `rel_tol`.
bool is_valid_unipotent(const GroupDescriptor& desc, const RealMatrix& n, double rel_tol = 1e-8);

extern template Matrix<double> root_group_element<double>(const GroupDescriptor&, int,
                                                          const double&);
extern template Matrix<Rational> root_group_element<Rational>(const GroupDescriptor&, int,
                                                              const Rational&);

}  // namespace latred
