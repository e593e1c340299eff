#include "doctest.h"
#include "oat/bundle.hpp"
#include "oat/errors.hpp"

using namespace oat;

TEST_CASE("group algebra bundle verifies and is saturated") {
  for (int n : {2, 3, 4}) {
    GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(n));
    CHECK(verify_bundle(b).passed());
    CHECK(is_saturated(b));
    CHECK(b.total.space.dim() == n);
    CHECK(b.fiber_algebra.space.dim() == 1);
  }
}

TEST_CASE("pauli bundle over the four-group") {
  GradedCStarBundle b = pauli_bundle();
  CHECK(verify_bundle(b).passed());
  CHECK(is_saturated(b));
  CHECK(b.total.space.dim() == 4);
  CHECK(b.group.order() == 4);
}

TEST_CASE("matrix-amplified bundle") {
  GradedCStarBundle b = matrix_group_algebra_bundle();
  CHECK(verify_bundle(b).passed());
  CHECK(is_saturated(b));
  CHECK(b.total.space.dim() == 8);
  CHECK(b.fiber_algebra.space.dim() == 4);
}

TEST_CASE("grading components and the expectation") {
  GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(2));
  CMatrix lam = regular_rep_unitary(b.group, 1);
  CMatrix mix = 2.0 * CMatrix::Identity(2, 2) + Complex(0, 3) * lam;
  auto comps = grading_components(b, mix);
  CHECK((comps[0] - 2.0 * CMatrix::Identity(2, 2)).norm() < 1e-10);
  CHECK((comps[1] - Complex(0, 3) * lam).norm() < 1e-10);
  CHECK((canonical_expectation(b, lam)).norm() < 1e-10);
  CHECK_THROWS_AS(grading_components(b, matrix_unit(2, 2, 0, 1)),
                  NotInTotalAlgebra);
}

TEST_CASE("quasi-basis index equals the group order") {
  for (int n : {2, 3}) {
    GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(n));
    QuasiBasis qb = quasi_basis_and_index(b);
    CHECK((qb.index - double(n) * b.total.unit).norm() < 1e-8);
  }
  GradedCStarBundle p = pauli_bundle();
  CHECK((quasi_basis_and_index(p).index - 4.0 * p.total.unit).norm() < 1e-8);
}

TEST_CASE("saturation witnesses resolve the unit") {
  GradedCStarBundle b = matrix_group_algebra_bundle();
  for (int t = 0; t < 2; ++t) {
    auto wit = saturation_witness(b, t);
    CMatrix sum = CMatrix::Zero(4, 4);
    for (const auto& x : wit) sum += x * x.adjoint();
    CHECK((sum - b.total.unit).norm() < 1e-8);
  }
}

TEST_CASE("zero fiber breaks saturation") {
  auto z2 = FiniteGroup::cyclic(2);
  std::vector<MatSubspace> fibers = {span({CMatrix::Identity(1, 1)}),
                                     MatSubspace(1, 1)};
  GradedCStarBundle b = make_bundle(z2, fibers);
  CHECK(verify_bundle(b).passed());
  CHECK(!is_saturated(b));
  CHECK_THROWS_AS(quasi_basis_and_index(b), NotSaturated);
  try {
    saturation_witness(b, 1);
    FAIL("expected a saturation failure");
  } catch (const NotSaturatedAt& e) {
    CHECK(e.element == 1);
  }
}

TEST_CASE("misgraded fibers are reported") {
  auto z2 = FiniteGroup::cyclic(2);
  // Both fibers spanned by the identity: not linearly independent.
  std::vector<MatSubspace> fibers = {span({CMatrix::Identity(2, 2)}),
                                     span({CMatrix::Identity(2, 2)})};
  GradedCStarBundle b = make_bundle(z2, fibers);
  CHECK(!verify_bundle(b).passed());
}
