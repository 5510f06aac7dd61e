#include "latred/size_reduce.hpp"

#include <cmath>
#include <stdexcept>

namespace latred {

bool is_good_ordering(std::span<const Eigen::VectorXi> roots) {
  const int r = static_cast<int>(roots.size());
  int max_height = 1;
  for (const auto& v : roots) max_height = std::max(max_height, v.sum());
  for (int k = 0; k < r; ++k) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        for (int ci = 1; ci <= max_height; ++ci) {
          for (int cj = 1; cj <= max_height; ++cj) {
            if (roots[k] == ci * roots[i] + cj * roots[j] && k <= std::max(i, j)) return false;
          }
        }
      }
    }
  }
  return true;
}

bool verify_good_ordering(const GroupDescriptor& desc) {
  std::vector<Eigen::VectorXi> roots;
  roots.reserve(desc.positive.size());
  for (const auto& r : desc.positive) roots.push_back(r.simple_coords);
  return is_good_ordering(roots);
}

long long box_offset(double t) {
  if (!(std::abs(t) < 9e15)) throw std::runtime_error("size reduction: coordinate out of range");
  return -static_cast<long long>(std::floor(t + 0.5));
}

BigInt box_offset(const Rational& t) {
  // m = -floor(t + 1/2)
  const Rational shifted = t + Rational(1, 2);
  BigInt q = numerator(shifted) / denominator(shifted);
  if (shifted < 0 && q * denominator(shifted) != numerator(shifted)) q -= 1;
  return -q;
}

namespace {

template <typename Scalar>
std::vector<Scalar> peel(const GroupDescriptor& desc, Matrix<Scalar> residual) {
  std::vector<Scalar> ts;
  ts.reserve(desc.root_count());
  for (int k = 0; k < desc.root_count(); ++k) {
    const Scalar t = marker_coordinate(desc, k, residual);
    ts.push_back(t);
    residual = root_group_element<Scalar>(desc, k, Scalar(-t)) * residual;
  }
  // callers check the residual; return it through the last element trick is
  // ugly, so recompute instead where needed
  return ts;
}

template <typename Scalar>
Matrix<Scalar> rebuild(const GroupDescriptor& desc, std::span<const Scalar> coords) {
  if (static_cast<int>(coords.size()) != desc.root_count())
    throw std::invalid_argument("rebuild_unipotent: wrong coordinate count");
  Matrix<Scalar> n(desc.dim, desc.dim);
  n.setConstant(Scalar(0));
  for (int i = 0; i < desc.dim; ++i) n(i, i) = Scalar(1);
  for (int k = 0; k < desc.root_count(); ++k)
    n = n * root_group_element<Scalar>(desc, k, coords[k]);
  return n;
}

template <typename Scalar>
SizeReduction<Scalar> size_reduce_impl(const GroupDescriptor& desc, const Matrix<Scalar>& n) {
  SizeReduction<Scalar> out{rational_identity(desc.dim), n};
  for (int k = 0; k < desc.root_count(); ++k) {
    const std::vector<Scalar> ts = peel<Scalar>(desc, out.reduced);
    const auto m = box_offset(ts[k]);
    if (m != 0) {
      out.reduced = out.reduced * root_group_element<Scalar>(desc, k, Scalar(m));
      out.gamma = out.gamma * root_group_element<Rational>(desc, k, Rational(m));
    }
  }
  return out;
}

}  // namespace

std::vector<double> coordinates(const GroupDescriptor& desc, const RealMatrix& n,
                                double residual_tol) {
  RealMatrix residual = n;
  std::vector<double> ts;
  ts.reserve(desc.root_count());
  for (int k = 0; k < desc.root_count(); ++k) {
    const double t = marker_coordinate(desc, k, residual);
    ts.push_back(t);
    residual = root_group_element<double>(desc, k, -t) * residual;
  }
  if (max_abs(residual - RealMatrix::Identity(desc.dim, desc.dim)) > residual_tol)
    throw std::runtime_error("coordinates: residual is not the identity; n is not in N");
  return ts;
}

std::vector<Rational> coordinates(const GroupDescriptor& desc, const RationalMatrix& n) {
  RationalMatrix residual = n;
  std::vector<Rational> ts;
  ts.reserve(desc.root_count());
  for (int k = 0; k < desc.root_count(); ++k) {
    const Rational t = marker_coordinate(desc, k, residual);
    ts.push_back(t);
    residual = root_group_element<Rational>(desc, k, Rational(-t)) * residual;
  }
  if (residual != rational_identity(desc.dim))
    throw std::runtime_error("coordinates: residual is not the identity; n is not in N");
  return ts;
}

std::vector<double> solve_coordinates(const GroupDescriptor& desc, const RealMatrix& m) {
  RealMatrix partial = RealMatrix::Identity(desc.dim, desc.dim);
  std::vector<double> ts(desc.root_count());
  for (int k = 0; k < desc.root_count(); ++k) {
    ts[k] = marker_coordinate(desc, k, m) - marker_coordinate(desc, k, partial);
    partial = partial * root_group_element<double>(desc, k, ts[k]);
  }
  return ts;
}

RealMatrix rebuild_unipotent(const GroupDescriptor& desc, std::span<const double> coords) {
  return rebuild<double>(desc, coords);
}

RationalMatrix rebuild_unipotent(const GroupDescriptor& desc, std::span<const Rational> coords) {
  return rebuild<Rational>(desc, coords);
}

SizeReduction<double> size_reduce(const GroupDescriptor& desc, const RealMatrix& n) {
  return size_reduce_impl<double>(desc, n);
}

SizeReduction<Rational> size_reduce(const GroupDescriptor& desc, const RationalMatrix& n) {
  return size_reduce_impl<Rational>(desc, n);
}

}  // namespace latred
