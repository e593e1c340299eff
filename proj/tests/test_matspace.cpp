#include "doctest.h"
#include "helpers.hpp"
#include "oat/errors.hpp"
#include "oat/matspace.hpp"

using namespace oat;

TEST_CASE("span of matrix units has full dimension") {
  std::vector<CMatrix> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) units.push_back(matrix_unit(2, 2, i, j));
  MatSubspace s = span(units);
  CHECK(s.dim() == 4);
  CHECK(s.contains(CMatrix::Random(2, 2).eval()));
}

TEST_CASE("span deduplicates dependent inputs") {
  CMatrix a = matrix_unit(2, 2, 0, 0);
  MatSubspace s = span({a, 2.0 * a, Complex(0, 1) * a});
  CHECK(s.dim() == 1);
  CHECK(s.contains(Complex(3, -2) * a));
  CHECK(!s.contains(matrix_unit(2, 2, 0, 1)));
}

TEST_CASE("empty span") {
  MatSubspace s = span({});
  CHECK(s.dim() == 0);
}

TEST_CASE("projection and coordinates invert each other") {
  std::mt19937 rng(7);
  MatSubspace s = span({testutil::random_matrix(rng, 3, 3),
                        testutil::random_matrix(rng, 3, 3)});
  REQUIRE(s.dim() == 2);
  CMatrix inside = s.from_coordinates(
      (CVector(2) << Complex(1, 2), Complex(-0.5, 0.25)).finished());
  CHECK(s.membership_residual(inside) < 1e-12);
  CHECK((s.from_coordinates(s.coordinates(inside)) - inside).norm() < 1e-12);
  CHECK((s.project(inside) - inside).norm() < 1e-12);
}

TEST_CASE("adjoint and product spans") {
  CMatrix e01 = matrix_unit(2, 2, 0, 1);
  MatSubspace s = span({e01});
  CHECK(s.adjoint_span().contains(matrix_unit(2, 2, 1, 0)));
  MatSubspace p = s.product_span(s.adjoint_span());
  CHECK(p.dim() == 1);
  CHECK(p.contains(matrix_unit(2, 2, 0, 0)));
}

TEST_CASE("sum and equality") {
  MatSubspace a = span({matrix_unit(2, 2, 0, 0)});
  MatSubspace b = span({matrix_unit(2, 2, 1, 1)});
  MatSubspace c = a.sum(b);
  CHECK(c.dim() == 2);
  CHECK(c.contains(a));
  CHECK(c.contains(b));
  CHECK(!a.equals(b));
  CHECK(c.equals(b.sum(a)));
}

TEST_CASE("shape mismatches throw") {
  MatSubspace s(2, 2);
  CHECK_THROWS_AS(s.project(CMatrix::Zero(3, 3)), ShapeMismatch);
  CHECK_THROWS_AS(span({CMatrix::Zero(2, 2)}).product_span(
                      span({CMatrix::Zero(3, 3)})),
                  ShapeMismatch);
}

TEST_CASE("randomized agreement with the elimination oracle") {
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<int> dims(1, 4), count(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index r = dims(rng), c = dims(rng);
    std::vector<CMatrix> mats;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      if (!mats.empty() && trial % 3 == 0) {
        // Mix in exact dependencies to exercise rank decisions.
        std::normal_distribution<double> coeff;
        CMatrix dep = CMatrix::Zero(r, c);
        for (const auto& m : mats) dep += Complex(coeff(rng), coeff(rng)) * m;
        mats.push_back(dep);
      } else {
        mats.push_back(testutil::random_matrix(rng, r, c));
      }
    }
    MatSubspace s = span(mats);
    CHECK(s.dim() == testutil::oracle_dim(mats, kDefaultTol));
    const CMatrix probe = testutil::random_matrix(rng, r, c);
    CHECK(s.contains(probe) ==
          testutil::oracle_contains(mats, probe, kDefaultTol));
    CMatrix member = CMatrix::Zero(r, c);
    std::normal_distribution<double> coeff;
    for (const auto& m : mats) member += Complex(coeff(rng), coeff(rng)) * m;
    CHECK(s.contains(member));
    CHECK(testutil::oracle_contains(mats, member, kDefaultTol));
  }
}
