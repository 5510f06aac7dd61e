#include <doctest.h>

#include <random>

#include "latred/io.hpp"
#include "latred/octonion.hpp"

using namespace latred;

namespace {

std::mt19937_64 rng(77);

Octonion random_octonion() {
  RationalVec8 v;
  for (int i = 0; i < 8; ++i) v[i] = Rational(static_cast<long long>(rng() % 21) - 10);
  return oct_from_vector(v);
}

}  // namespace

TEST_CASE("unit element") {
  const Octonion b = random_octonion();
  CHECK(oct_equal(oct_mul(oct_one(), b), b));
  CHECK(oct_equal(oct_mul(b, oct_one()), b));
}

TEST_CASE("basis round-trip and independence") {
  for (int i = 1; i <= 8; ++i) {
    const RationalVec8 v = oct_to_vector(basis_octonion(i));
    for (int k = 0; k < 8; ++k) CHECK(v[k] == (k == i - 1 ? Rational(1) : Rational(0)));
  }
  CHECK_THROWS_AS(basis_octonion(0), std::out_of_range);
  CHECK_THROWS_AS(basis_octonion(9), std::out_of_range);
}

TEST_CASE("e5 is idempotent") {
  const Octonion e5 = basis_octonion(5);
  CHECK(oct_equal(oct_mul(e5, e5), e5));
}

TEST_CASE("norm values") {
  CHECK(oct_q(basis_octonion(1)) == Rational(0));
  CHECK(oct_q(oct_one()) == Rational(1));
}

TEST_CASE("norm is multiplicative") {
  for (int trial = 0; trial < 100; ++trial) {
    const Octonion a = random_octonion(), b = random_octonion();
    CHECK(oct_q(oct_mul(a, b)) == oct_q(a) * oct_q(b));
  }
}

TEST_CASE("alternative laws") {
  for (int trial = 0; trial < 50; ++trial) {
    const Octonion a = random_octonion(), b = random_octonion();
    CHECK(oct_equal(oct_mul(oct_mul(a, a), b), oct_mul(a, oct_mul(a, b))));
    CHECK(oct_equal(oct_mul(oct_mul(a, b), b), oct_mul(a, oct_mul(b, b))));
  }
}

TEST_CASE("pairing of q in the chosen basis is the split form") {
  const RationalMatrix s = octonion_form_matrix();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(s(i, j) == (i + j == 7 ? Rational(1) : Rational(0)));
}

TEST_CASE("automorphism membership") {
  CHECK(is_g2_element(rational_identity(8)));

  RationalMatrix d = rational_identity(8);
  d(7, 7) = Rational(-1);
  CHECK(!is_g2_element(d));  // preserves neither the form nor the products

  RationalMatrix flip = rational_identity(8);
  flip(0, 0) = Rational(-1);
  flip(7, 7) = Rational(-1);
  CHECK(!is_g2_element(flip));  // form-preserving but breaks multiplicativity
}

TEST_CASE("published automorphism passes the exact membership test") {
  const Json doc = load_json_file(data_path("g2_gamma.json"));
  const RationalMatrix gamma = load_rational_matrix(doc["gamma"]);
  CHECK(is_g2_element(gamma));
}
