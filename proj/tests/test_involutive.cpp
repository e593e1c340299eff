#include "doctest.h"
#include "oat/errors.hpp"
#include "oat/involutive.hpp"

using namespace oat;

namespace {

ConcreteStarAlgebra m2() { return generate({matrix_unit(2, 2, 0, 1)}); }

ConcreteBimodule m2_self() {
  ConcreteStarAlgebra a = m2();
  return {a, a, a.space};
}

InvolutiveBimodule star_involutive() { return adjoint_involutive(m2_self()); }

InvolutiveBimodule phase_involutive(Complex phase) {
  ConcreteBimodule base = m2_self();
  std::vector<CMatrix> images;
  for (const auto& b : base.space.basis()) images.push_back(phase * b.adjoint());
  return make_involutive(base, images);
}

}  // namespace

TEST_CASE("adjoint and phase-twisted adjoint are involutions") {
  CHECK(verify_involutive(star_involutive()).passed());
  CHECK(verify_involutive(phase_involutive(Complex(0, 1))).passed());
}

TEST_CASE("conjugate-linearity of the stored map") {
  InvolutiveBimodule x = star_involutive();
  CMatrix v = matrix_unit(2, 2, 0, 1) + Complex(0, 2) * matrix_unit(2, 2, 1, 0);
  CHECK((x.apply_natural(Complex(0, 1) * v) +
         Complex(0, 1) * x.apply_natural(v))
            .norm() < 1e-10);
}

TEST_CASE("non-unimodular scaling breaks involutivity") {
  Report rep = verify_involutive(phase_involutive(Complex(2, 0)));
  CHECK(!rep.passed());
}

TEST_CASE("linking bundle of a full module is saturated") {
  LinkingSystem l = linking_and_bundle(star_involutive());
  CHECK(verify_bundle(l.z2bundle).passed());
  CHECK(is_saturated(l.z2bundle));
  CHECK(l.cx.space.dim() == 8);

  // The zero module links to an unsaturated bundle.
  ConcreteStarAlgebra c = scalar_algebra(CMatrix::Identity(1, 1));
  ConcreteBimodule zero{c, c, MatSubspace(1, 1)};
  InvolutiveBimodule zx{zero, Eigen::MatrixXd::Zero(0, 0)};
  LinkingSystem lz = linking_and_bundle(zx);
  CHECK(!is_saturated(lz.z2bundle));
}

TEST_CASE("linking roundtrip recovers the involutive structure") {
  InvolutiveBimodule x = phase_involutive(Complex(0, 1));
  LinkingSystem l = linking_and_bundle(x);
  InvolutiveBimodule back = bundle_to_involutive(l.z2bundle);
  CHECK(verify_involutive(back).passed());
  CHECK(back.base.space.dim() == x.base.space.dim());
  CHECK_THROWS_AS(
      bundle_to_involutive(group_algebra_bundle(FiniteGroup::cyclic(3))),
      WrongGroup);
}

TEST_CASE("transport along the algebra itself is the identity") {
  InvolutiveBimodule x = star_involutive();
  ConcreteBimodule m = m2_self();
  InvolutiveBimodule y = transport(m, x);
  CHECK(y.base.space.equals(x.base.space));
  CHECK(verify_involutive(y).passed());
  for (const auto& b : x.base.space.basis())
    CHECK((y.apply_natural(b) - x.apply_natural(b)).norm() < 1e-8);
}

TEST_CASE("transport composes with the tensor product") {
  InvolutiveBimodule x = phase_involutive(Complex(0, 1));
  ConcreteBimodule m = m2_self();
  InvolutiveBimodule once = transport(m, x);
  InvolutiveBimodule twice = transport(m, once);
  InvolutiveBimodule viaTensor = transport(tensor(m, m), x);
  CHECK(twice.base.space.equals(viaTensor.base.space));
  for (const auto& b : twice.base.space.basis())
    CHECK((twice.apply_natural(b) - viaTensor.apply_natural(b)).norm() < 1e-8);
}

TEST_CASE("identification between transport and a matching target") {
  InvolutiveBimodule x = star_involutive();
  ConcreteBimodule m = m2_self();
  InvolutiveBimodule y = transport(m, x);
  SpaceMap phi = inclusion_map(y.base.space, y.base.space);
  Report rep = psi_theta_check(m, x, y, phi);
  CHECK(rep.passed());

  SpaceMap bad = phi;
  bad.coeff *= 2.0;  // breaks the inner-product preservation
  CHECK_THROWS_AS(psi_theta_check(m, x, y, bad), NotAnInvolutiveIsomorphism);
}

TEST_CASE("linking-level bimodule and its extraction") {
  InvolutiveBimodule x = star_involutive();
  ConcreteBimodule m = m2_self();
  InvolutiveBimodule y = transport(m, x);
  SpaceMap phi = inclusion_map(y.base.space, y.base.space);
  CMResult cm = build_C_M(m, x, y, phi);
  CHECK(check_inclusion_morita(cm.datum).passed());
  CHECK(verify_equivalence_bundle(cm.bundle).passed());
  auto [m2back, phi2] = extract_morita(cm.bundle);
  CHECK(psi_theta_check(m2back, bundle_to_involutive(cm.bundle.bundleA),
                        bundle_to_involutive(cm.bundle.bundleB), phi2)
            .passed());
}

TEST_CASE("full equivalence pipeline with the irreducibility audit") {
  ConcreteStarAlgebra a = m2();
  InvolutiveBimodule x = star_involutive();
  ConcreteBimodule m = m2_self();
  InvolutiveBimodule y = transport(m, x);
  SpaceMap phi = inclusion_map(y.base.space, y.base.space);
  Report rep = involutive_equivalence_check(a, x, a, y, &m, &phi);
  CHECK(rep.passed());
  bool saw_audit = false, saw_morita = false;
  for (const auto& r : rep.records()) {
    if (r.id == "irreducibility.audit") {
      saw_audit = true;
      CHECK(r.residual == doctest::Approx(2.0));  // diag + offdiag scalars
    }
    if (r.id == "strong_morita" && r.status == CheckStatus::Pass)
      saw_morita = true;
  }
  CHECK(saw_audit);
  CHECK(saw_morita);

  // Without the witness pair the equivalence conclusion is skipped.
  Report partial = involutive_equivalence_check(a, x, a, y, nullptr, nullptr);
  bool skipped = false;
  for (const auto& r : partial.records())
    if (r.id == "strong_morita" && r.status == CheckStatus::Skip)
      skipped = true;
  CHECK(skipped);
}
