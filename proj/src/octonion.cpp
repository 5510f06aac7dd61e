#include "latred/octonion.hpp"

#include <array>
#include <stdexcept>

namespace latred {

namespace {

RationalMat2 mat2(int a, int b, int c, int d) {
  RationalMat2 m;
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

// adjugate: (a b; c d) -> (d -b; -c a)
RationalMat2 adj(const RationalMat2& m) {
  RationalMat2 r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r;
}

Rational det2(const RationalMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

Octonion oct_zero() { return {}; }

Octonion oct_one() {
  Octonion o;
  o.x = mat2(1, 0, 0, 1);
  return o;
}

Octonion oct_add(const Octonion& a, const Octonion& b) {
  Octonion o;
  o.x = a.x + b.x;
  o.y = a.y + b.y;
  return o;
}

Octonion oct_scale(const Rational& c, const Octonion& a) {
  Octonion o;
  o.x = a.x * c;
  o.y = a.y * c;
  return o;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
  Octonion o;
  o.x = a.x * b.x - b.y * adj(a.y);
  o.y = adj(a.x) * b.y + b.x * a.y;
  return o;
}

Rational oct_q(const Octonion& a) { return det2(a.x) + det2(a.y); }

Octonion basis_octonion(int index) {
  Octonion o;
  switch (index) {
    case 1: o.x = mat2(0, 0, 1, 0); break;
    case 2: o.y = mat2(0, 0, 1, 0); break;
    case 3: o.y = mat2(0, 0, 0, 1); break;
    case 4: o.x = mat2(0, 0, 0, 1); break;
    case 5: o.x = mat2(1, 0, 0, 0); break;
    case 6: o.y = mat2(1, 0, 0, 0); break;
    case 7: o.y = mat2(0, -1, 0, 0); break;
    case 8: o.x = mat2(0, -1, 0, 0); break;
    default: throw std::out_of_range("basis_octonion: index must be 1..8");
  }
  return o;
}

RationalVec8 oct_to_vector(const Octonion& a) {
  RationalVec8 v;
  v << a.x(1, 0), a.y(1, 0), a.y(1, 1), a.x(1, 1), a.x(0, 0), a.y(0, 0), -a.y(0, 1), -a.x(0, 1);
  return v;
}

Octonion oct_from_vector(const RationalVec8& v) {
  Octonion o;
  o.x << v(4), -v(7), v(0), v(3);
  o.y << v(5), -v(6), v(1), v(2);
  return o;
}

bool oct_equal(const Octonion& a, const Octonion& b) { return a.x == b.x && a.y == b.y; }

RationalMatrix octonion_form_matrix() {
  RationalMatrix s(8, 8);
  s.setConstant(Rational(0));
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      const Octonion ei = basis_octonion(i), ej = basis_octonion(j);
      s(i - 1, j - 1) = oct_q(oct_add(ei, ej)) - oct_q(ei) - oct_q(ej);
    }
  }
  return s;
}

bool is_g2_element(const RationalMatrix& m) {
  if (m.rows() != 8 || m.cols() != 8) throw DimensionMismatch("is_g2_element: need 8x8");
  static const RationalMatrix form = octonion_form_matrix();
  if (RationalMatrix(m.transpose() * form * m) != form) return false;

  std::array<Octonion, 8> cols;
  for (int j = 0; j < 8; ++j) cols[j] = oct_from_vector(m.col(j));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Octonion lhs = oct_mul(cols[i], cols[j]);
      const RationalVec8 rhs = m * oct_to_vector(oct_mul(basis_octonion(i + 1), basis_octonion(j + 1)));
      if (oct_to_vector(lhs) != rhs) return false;
    }
  }
  return true;
}

}  // namespace latred
