#include "doctest.h"
#include "oat/bimodule.hpp"
#include "oat/errors.hpp"
#include "oat/star_algebra.hpp"

using namespace oat;

namespace {

ConcreteStarAlgebra m2() { return generate({matrix_unit(2, 2, 0, 1)}); }

ConcreteBimodule m2_self() {
  ConcreteStarAlgebra a = m2();
  return {a, a, a.space};
}

}  // namespace

TEST_CASE("full matrix algebra over itself") {
  Report rep = verify_bimodule(m2_self(), true);
  CHECK(rep.passed());
}

TEST_CASE("row-truncated subspace fails the left action") {
  ConcreteStarAlgebra a = m2();
  ConcreteBimodule x{a, a,
                     span({matrix_unit(2, 2, 0, 0), matrix_unit(2, 2, 0, 1)})};
  Report rep = verify_bimodule(x, false);
  CHECK(!rep.passed());
  bool left_action_failed = false;
  for (const auto& r : rep.records())
    if (r.id == "left_action" && r.status == CheckStatus::Fail)
      left_action_failed = true;
  CHECK(left_action_failed);
}

TEST_CASE("zero module closes but is not full") {
  ConcreteStarAlgebra c = scalar_algebra(CMatrix::Identity(1, 1));
  ConcreteBimodule x{c, c, MatSubspace(1, 1)};
  CHECK(verify_bimodule(x, false).passed());
  CHECK(!verify_bimodule(x, true).passed());
}

TEST_CASE("dual swaps sides and is involutive") {
  ConcreteStarAlgebra c = scalar_algebra(CMatrix::Identity(1, 1));
  ConcreteStarAlgebra corner = generate({matrix_unit(2, 2, 0, 0)});
  CMatrix row = matrix_unit(1, 2, 0, 0);
  ConcreteBimodule x{c, corner, span({row})};
  ConcreteBimodule d = dual(x);
  CHECK(d.space.contains(matrix_unit(2, 1, 0, 0)));
  CHECK(d.left.space.equals(corner.space));
  CHECK(dual(d).space.equals(x.space));
}

TEST_CASE("tensor products") {
  ConcreteBimodule a = m2_self();
  ConcreteBimodule t = tensor(a, a);
  CHECK(t.space.equals(a.space));

  ConcreteStarAlgebra c = scalar_algebra(CMatrix::Identity(1, 1));
  ConcreteStarAlgebra full = m2();
  ConcreteBimodule rows{c, full, span({matrix_unit(1, 2, 0, 0),
                                       matrix_unit(1, 2, 0, 1)})};
  ConcreteBimodule cols = dual(rows);
  ConcreteBimodule rc = tensor(rows, cols);
  CHECK(rc.space.dim() == 1);
  CHECK(rc.space.contains(CMatrix::Identity(1, 1)));
  CHECK_THROWS_AS(tensor(rows, rows), MiddleAlgebraMismatch);
  // Dual is anti-monoidal.
  ConcreteBimodule lhs = dual(tensor(rows, cols));
  ConcreteBimodule rhs = tensor(dual(cols), dual(rows));
  CHECK(lhs.space.equals(rhs.space));
}

TEST_CASE("tensor is associative on subspaces") {
  ConcreteBimodule a = m2_self();
  CHECK(tensor(tensor(a, a), a).space.equals(tensor(a, tensor(a, a)).space));
}

TEST_CASE("equivalence bimodule absorbs its inner products") {
  ConcreteBimodule a = m2_self();
  MatSubspace xxs = a.space.product_span(a.space.adjoint_span());
  CHECK(xxs.product_span(a.space).equals(a.space));
}

TEST_CASE("inclusion datum for the algebra over itself") {
  ConcreteBimodule big = m2_self();
  InclusionMoritaDatum d{big, big.space, big.left, big.right};
  CHECK(check_inclusion_morita(d).passed());
  InclusionMoritaDatum zero{big, MatSubspace(2, 2), big.left, big.right};
  CHECK(!check_inclusion_morita(zero).passed());
}

TEST_CASE("frames resolve the units") {
  ConcreteBimodule a = m2_self();
  for (unsigned seed : {0u, 1u, 7u}) {
    CMatrix sum = CMatrix::Zero(2, 2);
    for (const auto& u : left_frame(a, seed)) sum += u * u.adjoint();
    CHECK((sum - a.left.unit).norm() < 1e-8);
    CMatrix rsum = CMatrix::Zero(2, 2);
    for (const auto& v : right_frame(a, seed)) rsum += v.adjoint() * v;
    CHECK((rsum - a.right.unit).norm() < 1e-8);
  }
  // Different seeds give genuinely different frames.
  auto f0 = left_frame(a, 0), f1 = left_frame(a, 1);
  double diff = 0;
  for (std::size_t i = 0; i < f0.size(); ++i)
    diff = std::max(diff, (f0[i] - f1[i]).norm());
  CHECK(diff > 1e-3);
}
