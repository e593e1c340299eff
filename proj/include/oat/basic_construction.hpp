#pragma once

#include <functional>

#include "oat/action.hpp"
#include "oat/bundle.hpp"

namespace oat {

// The basic construction for the unit-fiber inclusion of a saturated bundle,
// modelled on the trace-induced inner-product space of the total algebra.
// The representation space has dimension d = dim C; the adapted orthonormal
// basis lists the unit fiber first, then the remaining fibers in group
// order, which makes the grading projection literally diag(I, 0).
struct BasicConstructionResult {
  Eigen::Index dim = 0;              // d
  std::vector<CMatrix> adapted;      // orthonormal basis of C, unit fiber first
  ConcreteStarAlgebra embeddedC;     // rho(C) inside d x d
  CMatrix jones;                     // e_A
  ConcreteStarAlgebra c1;            // generated by rho(C) and e_A
  std::vector<CMatrix> e_proj;       // e_t, indexed by group element
  ActionSystem action;               // alpha on c1: fixes rho(C), e_A -> e_{t^-1}
};

// Left multiplication matrix of c on the adapted basis.
CMatrix rho_matrix(const GradedCStarBundle& b,
                   const BasicConstructionResult& r, const CMatrix& c);

// Builds the representation, the projections e_t, and the action.  Throws
// NotSaturated / DegenerateForm / IllDefinedExtension.
BasicConstructionResult build_basic_construction(const GradedCStarBundle& b);

// Structural invariants of the construction as report entries: the Jones
// relation, the quasi-basis resolution of the identity, the span identity
// for c1, and the e_t system (orthogonality, sum, centrality, witness
// independence under the seeded re-randomization).
Report verify_basic_construction(const BasicConstructionResult& r,
                                 const GradedCStarBundle& b);

// e_t recomputed from witnesses {u x_i} for a seeded unitary u in A;
// seed 0 gives the canonical witnesses.
std::vector<CMatrix> e_projections(const BasicConstructionResult& r,
                                   const GradedCStarBundle& b,
                                   unsigned seed = 0);

// The transported bundle {Y_t} with Y_t = e_A c1 e_{t^-1}, realized with
// plain matrix operations on group-indexed blocks, plus the report of the
// fiber-map checks (isometry, multiplicativity, involution, bijectivity).
// Throws IsomorphismFailure when any check fails.
std::pair<GradedCStarBundle, Report> bundle_A1_and_iso(
    const BasicConstructionResult& r, const GradedCStarBundle& b);

// Shared helper: bundle whose fiber at t is spanned by block matrices
// X[r, t^-1 r] = act_{r^-1}(x) over raw d x d fibers.  Turns the twisted
// product x act_t(y) and involution act_{t^-1}(x^*) into plain matrix
// arithmetic.
GradedCStarBundle transported_bundle(const FiniteGroup& g,
                                     const std::vector<MatSubspace>& raw,
                                     const ActionSystem& act, double tol);

// The same block transport for a single (possibly rectangular) element,
// with the per-element map supplied as a callable.
CMatrix transport_block(const FiniteGroup& g, int t, const CMatrix& x,
                        const std::function<CMatrix(int, const CMatrix&)>& act);

}  // namespace oat
