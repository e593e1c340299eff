#include "doctest.h"
#include "oat/basic_construction.hpp"
#include "oat/errors.hpp"

using namespace oat;

namespace {

std::vector<GradedCStarBundle> sample_bundles() {
  return {group_algebra_bundle(FiniteGroup::cyclic(2)),
          group_algebra_bundle(FiniteGroup::cyclic(3)), pauli_bundle(),
          matrix_group_algebra_bundle()};
}

}  // namespace

TEST_CASE("two-element group algebra, explicit values") {
  GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(2));
  BasicConstructionResult r = build_basic_construction(b);
  CHECK(r.dim == 2);
  CHECK(r.c1.space.dim() == 4);
  CMatrix ea(2, 2);
  ea << 1, 0, 0, 0;
  CHECK((r.jones - ea).norm() < 1e-10);
  CHECK((r.e_proj[0] + r.e_proj[1] - CMatrix::Identity(2, 2)).norm() < 1e-10);
}

TEST_CASE("structural invariants hold on the sample bundles") {
  for (const auto& b : sample_bundles()) {
    BasicConstructionResult r = build_basic_construction(b);
    CHECK(r.dim == b.total.space.dim());
    Report rep = verify_basic_construction(r, b);
    CHECK(rep.passed());
    CHECK(rep.max_residual() < 1e-8);
  }
}

TEST_CASE("group algebras build the full matrix algebra") {
  for (int n : {2, 3, 4}) {
    GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(n));
    BasicConstructionResult r = build_basic_construction(b);
    CHECK(r.c1.space.dim() == n * n);
  }
}

TEST_CASE("representation is multiplicative and expectation-compatible") {
  GradedCStarBundle b = pauli_bundle();
  BasicConstructionResult r = build_basic_construction(b);
  for (const auto& x : b.total.space.basis())
    for (const auto& y : b.total.space.basis()) {
      CMatrix lhs = rho_matrix(b, r, x * y);
      CMatrix rhs = rho_matrix(b, r, x) * rho_matrix(b, r, y);
      CHECK((lhs - rhs).norm() < 1e-8);
    }
  // e_A rho(c) e_A = rho(E(c)) e_A.
  for (const auto& c : b.total.space.basis()) {
    CMatrix lhs = r.jones * rho_matrix(b, r, c) * r.jones;
    CMatrix rhs = rho_matrix(b, r, canonical_expectation(b, c)) * r.jones;
    CHECK((lhs - rhs).norm() < 1e-8);
  }
}

TEST_CASE("projections do not depend on the witness choice") {
  GradedCStarBundle b = matrix_group_algebra_bundle();
  BasicConstructionResult r = build_basic_construction(b);
  for (unsigned seed : {1u, 5u}) {
    auto alt = e_projections(r, b, seed);
    for (int t = 0; t < b.group.order(); ++t)
      CHECK((alt[t] - r.e_proj[t]).norm() < 1e-8);
  }
}

TEST_CASE("non-saturated input is rejected") {
  auto z2 = FiniteGroup::cyclic(2);
  std::vector<MatSubspace> fibers = {span({CMatrix::Identity(1, 1)}),
                                     MatSubspace(1, 1)};
  CHECK_THROWS_AS(build_basic_construction(make_bundle(z2, fibers)),
                  NotSaturated);
}

TEST_CASE("graded structure transports onto the constructed algebra") {
  for (const auto& b : sample_bundles()) {
    BasicConstructionResult r = build_basic_construction(b);
    auto [a1, rep] = bundle_A1_and_iso(r, b);
    CHECK(rep.passed());
    CHECK(verify_bundle(a1).passed());
    CHECK(is_saturated(a1));
    // Fiber dimensions agree with the source bundle.
    for (int t = 0; t < b.group.order(); ++t)
      CHECK(a1.fibers[t].dim() == b.fibers[t].dim());
  }
}
