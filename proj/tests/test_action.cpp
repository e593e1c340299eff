#include "doctest.h"
#include "oat/action.hpp"
#include "oat/errors.hpp"

using namespace oat;

namespace {

ConcreteStarAlgebra m2() { return generate({matrix_unit(2, 2, 0, 1)}); }

std::vector<CMatrix> sign_unitaries() {
  CMatrix u(2, 2);
  u << 1, 0, 0, -1;
  return {CMatrix::Identity(2, 2), u};
}

}  // namespace

TEST_CASE("trivial action verifies") {
  ActionSystem a = trivial_action(m2(), FiniteGroup::cyclic(3));
  CHECK(verify_action(a).passed());
}

TEST_CASE("inner sign action on the matrix algebra") {
  auto z2 = FiniteGroup::cyclic(2);
  ActionSystem a = inner_action(m2(), z2, sign_unitaries());
  CHECK(verify_action(a).passed());
  CMatrix e01 = matrix_unit(2, 2, 0, 1);
  CHECK((a.apply(1, e01) + e01).norm() < 1e-10);
  CHECK((a.apply(1, matrix_unit(2, 2, 0, 0)) - matrix_unit(2, 2, 0, 0))
            .norm() < 1e-10);
}

TEST_CASE("non-involutive map family fails verification") {
  auto z2 = FiniteGroup::cyclic(2);
  ConcreteStarAlgebra a = m2();
  ActionSystem bad = trivial_action(a, z2);
  bad.maps[1] *= 2.0;  // not an automorphism, breaks the group law
  CHECK(!verify_action(bad).passed());
}

TEST_CASE("inner bimodule action is covariant") {
  auto z2 = FiniteGroup::cyclic(2);
  ConcreteStarAlgebra a = m2();
  ConcreteBimodule x{a, a, a.space};
  BimoduleAction lam =
      inner_bimodule_action(x, z2, sign_unitaries(), sign_unitaries());
  CHECK(verify_bimodule_action(lam).passed());
}

TEST_CASE("mismatched unitary count is rejected") {
  CHECK_THROWS_AS(
      inner_action(m2(), FiniteGroup::cyclic(2), {CMatrix::Identity(2, 2)}),
      ShapeMismatch);
}
