#pragma once

#include "oat/bimodule.hpp"
#include "oat/bundle.hpp"
#include "oat/equivalence_bundle.hpp"

namespace oat {

// An A-A bimodule carrying a conjugate-linear involution.  The involution
// is stored as a real matrix over realified coordinates of the space, so
// well-definedness and extension questions are ordinary linear solves.
struct InvolutiveBimodule {
  ConcreteBimodule base;  // left == right == A, square ambient
  Eigen::MatrixXd natural;  // realified coordinate matrix of the involution

  CMatrix apply_natural(const CMatrix& x) const;
};

// Builds the realified matrix of the conjugate-linear map sending the k-th
// basis vector to images[k].
Eigen::MatrixXd conjugate_linear_matrix(const MatSubspace& space,
                                        const std::vector<CMatrix>& images);

InvolutiveBimodule make_involutive(const ConcreteBimodule& base,
                                   const std::vector<CMatrix>& basis_images);

// Adjoint involution x -> x^* on a bimodule whose space is adjoint-stable.
InvolutiveBimodule adjoint_involutive(const ConcreteBimodule& base);

// The three defining conditions plus conjugate-linearity of the stored map.
Report verify_involutive(const InvolutiveBimodule& x);

// The 2x2-block algebra {[[a, x], [(x^nat)^*, a]]} with its natural
// two-element-group grading: diagonal fiber {diag(a,a)}, off-diagonal fiber
// {offdiag(x, (x^nat)^*)}.
struct LinkingSystem {
  ConcreteStarAlgebra cx;
  GradedCStarBundle z2bundle;
  ConcreteStarAlgebra cornerA;  // A embedded diagonally
};

LinkingSystem linking_and_bundle(const InvolutiveBimodule& x);

// Inverse direction: the off-diagonal fiber of a bundle over the
// two-element group as an involutive bimodule over the unit fiber, with the
// bundle involution (the matrix adjoint) as the natural map.
InvolutiveBimodule bundle_to_involutive(const GradedCStarBundle& b);

// Conjugation of the involutive structure along an equivalence bimodule m:
// space span(M^* X M) with involution m^* x n -> n^* x^nat m, extended by a
// certified conjugate-linear solve.  Throws IllDefinedInvolution.
InvolutiveBimodule transport(const ConcreteBimodule& m,
                             const InvolutiveBimodule& x);

// A linear map between subspaces, stored on coordinates.
struct SpaceMap {
  MatSubspace from;
  MatSubspace to;
  CMatrix coeff;

  CMatrix apply(const CMatrix& v) const;
  SpaceMap inverse() const;
};

// The identity-backed map realizing transport(m, x) inside y when the two
// spaces coincide as subspaces.
SpaceMap inclusion_map(const MatSubspace& from, const MatSubspace& to);

// Verifies phi as an involutive isomorphism transport(m, x) -> y, then
// checks the induced identification span(X M) -> span(M Y) built from a
// left frame of m, its inverse, frame independence, and the dual relation.
// Throws NotAnInvolutiveIsomorphism when phi fails its own checks.
Report psi_theta_check(const ConcreteBimodule& m, const InvolutiveBimodule& x,
                       const InvolutiveBimodule& y, const SpaceMap& phi);

struct CMResult {
  InclusionMoritaDatum datum;
  EquivalenceBundle bundle;  // over the two-element group
  ConcreteBimodule cm;       // C_X - C_Y bimodule
};

// The linking-level equivalence bimodule spanned by
// [[m1, x m2], [(x^nat)^* m2, m1]].  Throws ClosureFailure when the right
// action leaves the span.
CMResult build_C_M(const ConcreteBimodule& m, const InvolutiveBimodule& x,
                   const InvolutiveBimodule& y, const SpaceMap& phi);

// Recovers the bimodule and identification map from an equivalence bundle
// between two linking-type bundles over the two-element group.
std::pair<ConcreteBimodule, SpaceMap> extract_morita(
    const EquivalenceBundle& e);

// Direction (1): with (m, phi), full pipeline to strong Morita equivalence
// of the inclusions.  Always: fullness and irreducibility audit (the
// relative commutant dimension is reported, never gated on).
Report involutive_equivalence_check(const ConcreteStarAlgebra& a,
                       const InvolutiveBimodule& x,
                       const ConcreteStarAlgebra& b,
                       const InvolutiveBimodule& y,
                       const ConcreteBimodule* m, const SpaceMap* phi);

}  // namespace oat
