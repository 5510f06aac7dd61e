#pragma once

#include <Eigen/Dense>

#include "latred/matrix.hpp"
#include "latred/rational.hpp"

namespace latred {

using RationalMat2 = Eigen::Matrix<Rational, 2, 2>;
using RationalVec8 = Eigen::Matrix<Rational, 8, 1>;

/// Split octonion in the Cayley-Dickson realisation: a pair of 2x2 rational
/// matrices.
struct Octonion {
  RationalMat2 x = RationalMat2::Constant(Rational(0));
  RationalMat2 y = RationalMat2::Constant(Rational(0));
};

Octonion oct_zero();
Octonion oct_one();

Octonion oct_add(const Octonion& a, const Octonion& b);
Octonion oct_scale(const Rational& c, const Octonion& a);

/// (x, y) (z, w) = (x z - w y*, x* w + z y), with * the 2x2 adjugate.
Octonion oct_mul(const Octonion& a, const Octonion& b);

/// q(x, y) = det(x) + det(y).
Rational oct_q(const Octonion& a);

/// Basis e_1..e_8 in which the pairing of q is the split antidiagonal form.
Octonion basis_octonion(int index);

RationalVec8 oct_to_vector(const Octonion& a);
Octonion oct_from_vector(const RationalVec8& v);

bool oct_equal(const Octonion& a, const Octonion& b);

/// 8x8 Gram matrix of the pairing q(u+v) - q(u) - q(v) in the basis e_1..e_8.
RationalMatrix octonion_form_matrix();

/// Exact membership test: preserves the form of q and all 64 basis products.
bool is_g2_element(const RationalMatrix& m);

}  // namespace latred
