#include <doctest.h>

#include <random>

#include "latred/io.hpp"
#include "latred/iwasawa.hpp"
#include "latred/size_reduce.hpp"

using namespace latred;

namespace {

std::mt19937_64 rng(515151);

RealVector random_torus(const GroupDescriptor& d) {
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  RealVector a = RealVector::Ones(d.dim);
  switch (d.kind) {
    case GroupKind::SL: {
      double sum = 0.0;
      for (int i = 0; i < d.dim; ++i) {
        const double l = dist(rng);
        a[i] = std::exp(l);
        sum += l;
      }
      a *= std::exp(-sum / d.dim);
      break;
    }
    case GroupKind::Sp:
    case GroupKind::SO:
      for (int i = 0; i < d.g; ++i) {
        a[i] = std::exp(dist(rng));
        a[d.dim - 1 - i] = 1.0 / a[i];
      }
      break;
    case GroupKind::G2: {
      const double s = std::exp(dist(rng)), t = std::exp(dist(rng));
      a << s * t, s, t, 1, 1, 1 / t, 1 / s, 1 / (s * t);
      break;
    }
  }
  return a;
}

RealMatrix random_unipotent(const GroupDescriptor& d) {
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  RealMatrix n = RealMatrix::Identity(d.dim, d.dim);
  for (int k = 0; k < d.root_count(); ++k)
    n = n * root_group_element<double>(d, k, dist(rng));
  return n;
}

std::vector<GroupDescriptor> engines() {
  std::vector<GroupDescriptor> ds;
  ds.push_back(make_group_descriptor(GroupKind::SL, 4));
  ds.push_back(make_group_descriptor(GroupKind::Sp, 2));
  ds.push_back(make_group_descriptor(GroupKind::SO, 3));
  ds.push_back(make_group_descriptor(GroupKind::G2));
  return ds;
}

}  // namespace

TEST_CASE("identity is compatible everywhere") {
  for (const auto& d : engines())
    CHECK(check_compatible(d, RealMatrix::Identity(d.dim, d.dim)));
}

TEST_CASE("generic diagonal matrices are not compatible with the split forms") {
  for (const auto& d : engines()) {
    if (d.kind == GroupKind::SL) continue;
    RealVector diag(d.dim);
    for (int i = 0; i < d.dim; ++i) diag[i] = i + 1.0;
    CHECK(!check_compatible(d, RealMatrix(diag.asDiagonal())));
  }
}

TEST_CASE("published orthogonal Gram matrix is compatible") {
  const GroupDescriptor so8 = make_group_descriptor(GroupKind::SO, 4);
  const RealMatrix H = load_real_matrix(load_json_file(data_path("so8_gram.json"))["H"]);
  CHECK(check_compatible(so8, H));
}

TEST_CASE("decomposition of the identity") {
  for (const auto& d : engines()) {
    const IwasawaPair p = iwasawa_decompose(d, RealMatrix::Identity(d.dim, d.dim));
    CHECK(max_abs(RealMatrix(p.a - RealVector::Ones(d.dim))) == 0.0);
    CHECK(max_abs(RealMatrix(p.n - RealMatrix::Identity(d.dim, d.dim))) == 0.0);
  }
}

TEST_CASE("two-dimensional worked example") {
  const GroupDescriptor sl2 = make_group_descriptor(GroupKind::SL, 2);
  RealMatrix H(2, 2);
  H << 2, 1, 1, 1;
  const IwasawaPair p = iwasawa_decompose(sl2, H);
  CHECK(p.a[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(p.a[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(p.n(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("round trip on constructed points") {
  for (const auto& d : engines()) {
    for (int trial = 0; trial < 10; ++trial) {
      const RealVector a0 = random_torus(d);
      const RealMatrix n0 = random_unipotent(d);
      const RealMatrix H = gram_of({a0, n0});
      const IwasawaPair p = iwasawa_decompose(d, H);
      CHECK(max_abs(RealMatrix(p.a - a0)) / std::max(1.0, max_abs(a0)) < 1e-8);
      CHECK(max_abs(RealMatrix(p.n - n0)) < 1e-8);
      CHECK(max_abs(RealMatrix(gram_of(p) - H)) / std::max(1.0, max_abs(H)) < 1e-9);
      // unipotent structure
      for (int i = 0; i < d.dim; ++i) {
        CHECK(p.n(i, i) == 1.0);
        for (int j = 0; j < i; ++j) CHECK(p.n(i, j) == 0.0);
      }
      CHECK(is_valid_unipotent(d, p.n));
      CHECK(is_valid_torus(d, p.a, 1e-8));
    }
  }
}

TEST_CASE("indefinite input is rejected") {
  const GroupDescriptor sl2 = make_group_descriptor(GroupKind::SL, 2);
  RealMatrix H(2, 2);
  H << 1, 2, 2, 1;  // eigenvalues 3 and -1
  CHECK_THROWS_AS(iwasawa_decompose(sl2, H), NotPositiveDefinite);
}

TEST_CASE("incompatible input is rejected") {
  const GroupDescriptor sp4 = make_group_descriptor(GroupKind::Sp, 2);
  RealVector diag(4);
  diag << 1, 2, 3, 4;
  CHECK_THROWS_AS(iwasawa_decompose(sp4, RealMatrix(diag.asDiagonal())), IncompatibleGram);
}

TEST_CASE("restoration is the identity on structured points") {
  for (const auto& d : engines()) {
    for (int trial = 0; trial < 5; ++trial) {
      const RealMatrix H = gram_of({random_torus(d), random_unipotent(d)});
      const IwasawaPair p = restore_compatible(d, H);
      CHECK(max_abs(RealMatrix(gram_of(p) - H)) / std::max(1.0, max_abs(H)) < 1e-10);
    }
  }
}

TEST_CASE("restoration recovers a decomposable point from truncated input") {
  const GroupDescriptor so8 = make_group_descriptor(GroupKind::SO, 4);
  const RealMatrix H = load_real_matrix(load_json_file(data_path("so8_gram.json"))["H"]);
  // the printed matrix itself is too rough to be positive definite
  CHECK_THROWS_AS(iwasawa_decompose(so8, H), NotPositiveDefinite);
  const IwasawaPair p = restore_compatible(so8, H);
  const RealMatrix restored = gram_of(p);
  const RealMatrix& s = *so8.form;
  const double hnorm = restored.cwiseAbs().rowwise().sum().maxCoeff();
  CHECK(max_abs(RealMatrix(restored * s * restored - s)) / (hnorm * hnorm) < 1e-13);
  CHECK_NOTHROW(iwasawa_decompose(so8, restored));
  CHECK(is_valid_torus(so8, p.a, 1e-9));
}

TEST_CASE("symplectic complex-structure correspondence") {
  const GroupDescriptor sp4 = make_group_descriptor(GroupKind::Sp, 2);
  const RealMatrix id = RealMatrix::Identity(4, 4);
  CHECK(max_abs(RealMatrix(sp_H_to_J(sp4, id) - *sp4.form)) == 0.0);

  for (int trial = 0; trial < 10; ++trial) {
    const RealMatrix H = gram_of({random_torus(sp4), random_unipotent(sp4)});
    const RealMatrix J = sp_H_to_J(sp4, H);
    CHECK(max_abs(RealMatrix(J * J + id)) < 1e-8 * std::max(1.0, max_abs(H) * max_abs(H)));
    // t(J) S is positive definite
    const RealMatrix JS = J.transpose() * (*sp4.form);
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (JS + RealMatrix(JS.transpose())));
    CHECK(eig.eigenvalues().minCoeff() > 0.0);
    // inverse map
    CHECK(max_abs(RealMatrix(-(*sp4.form) * J - H)) < 1e-9 * std::max(1.0, max_abs(H)));
  }
}

TEST_CASE("torus entries pair up for the isometry engines") {
  for (const auto& d : engines()) {
    for (int trial = 0; trial < 5; ++trial) {
      const RealMatrix H = gram_of({random_torus(d), random_unipotent(d)});
      const IwasawaPair p = iwasawa_decompose(d, H);
      if (d.kind == GroupKind::SL) {
        double prod = 1.0;
        for (int i = 0; i < d.dim; ++i) prod *= p.a[i];
        CHECK(prod == doctest::Approx(1.0).epsilon(1e-9));
      } else {
        for (int i = 0; i < d.dim / 2; ++i)
          CHECK(p.a[i] * p.a[d.dim - 1 - i] == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}
