#pragma once

#include <tuple>

#include "oat/action.hpp"
#include "oat/bimodule.hpp"
#include "oat/bundle.hpp"

namespace oat {

// A compatible family of bimodule fibers {X_t} between two bundles over the
// same group, with fiberwise fullness hitting entire fibers.
struct EquivalenceBundle {
  GradedCStarBundle bundleA;
  GradedCStarBundle bundleB;
  std::vector<MatSubspace> fibers;  // X_t, rectangular, indexed by element

  double tol() const { return bundleA.tol(); }
};

// Checks all module/fullness/independence conditions, one record per
// (condition, t, s).  Record order is deterministic (keys), independent of
// the worker count used for evaluation.
Report verify_equivalence_bundle(const EquivalenceBundle& e);

// Y = sum of fibers as a C-D bimodule with distinguished subspace X = X_e.
// Throws AssemblyFailure when the assembled datum fails its checks.
InclusionMoritaDatum assemble_total(const EquivalenceBundle& e);

// The bundle over itself: X_t = A_t.  Passes verification iff saturated.
EquivalenceBundle identity_equivalence_bundle(const GradedCStarBundle& b);

struct CrossedProductSystem {
  GradedCStarBundle bundleA;  // A crossed by alpha
  GradedCStarBundle bundleB;  // B crossed by beta
  EquivalenceBundle bundle;   // bimodule fibers X_t
  Report formulas;            // the four covariance formulas, residual checks
};

// Crossed products on the regular covariant representation:
// (pi(a) xi)(t) = alpha_{t^-1}(a) xi(t), (Lambda_s xi)(t) = xi(s^-1 t),
// fibers A_t = pi(A) Lambda_t, and the rectangular analogue for the
// bimodule.  Throws IncompatibleActions when lambda is not covariant.
CrossedProductSystem crossed_product_system(const ActionSystem& alpha,
                                            const ActionSystem& beta,
                                            const BimoduleAction& lambda);

}  // namespace oat
