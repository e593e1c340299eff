#pragma once

#include <functional>

#include "oat/basic_construction.hpp"
#include "oat/equivalence_bundle.hpp"

namespace oat {

// Inputs for recovering a fiberwise equivalence from an equivalence of the
// basic-construction algebras: a candidate group automorphism f, a bimodule
// z between the two constructed algebras, and a compatible action whose
// right leg is beta_t = (B-side fiber action at f(t)).  `lambda_maps` are
// the coordinate matrices of the module action on z.space, one per element.
struct ReconstructionData {
  GradedCStarBundle bundleA;
  GradedCStarBundle bundleB;
  BasicConstructionResult bcA;
  BasicConstructionResult bcB;
  Perm f;
  ConcreteBimodule z;
  std::vector<CMatrix> lambda_maps;

  CMatrix lambda(int t, const CMatrix& x) const;
  // beta_t = B-side fiber action at f(t).
  CMatrix beta(int t, const CMatrix& x) const;
};

// Fibers Z_t = e_A Z beta_t(e_B), transported onto group-indexed blocks so
// the twisted module structure becomes plain matrix arithmetic; the A side
// is the transported basic-construction bundle, the B side the transported
// f-relabeled one.  Throws CovarianceViolation / EmptyFiber.
EquivalenceBundle build_Z_bundle(const ReconstructionData& in);

// Fiberwise inner-product equalities of the conclusion: left products land
// on the A-side fiber at t s^-1, right products on the (already relabeled)
// B-side fiber at t^-1 s.
Report verify_fiber_inner_products(const EquivalenceBundle& e, const Perm& f);

// Produces (z, lambda_maps) for a candidate f, or throws to reject it.
using ZFactory = std::function<ReconstructionData(const Perm& f)>;

struct SearchResult {
  Perm f;
  EquivalenceBundle bundle;
};

// Tries every automorphism in deterministic order; first candidate whose
// bundle builds and verifies wins.  Throws NoAutomorphismFound.
SearchResult search_automorphism(const GradedCStarBundle& bundleA,
                                 const GradedCStarBundle& bundleB,
                                 const ZFactory& factory);

// The roundtrip factory used by demos and tests: Z = the constructed
// algebra of the A side viewed as a bimodule to the B side (requires both
// constructions to share one representation ambient), lambda = the A-side
// fiber action.
ReconstructionData roundtrip_data(const GradedCStarBundle& bundleA,
                                  const GradedCStarBundle& bundleB,
                                  const BasicConstructionResult& bcA,
                                  const BasicConstructionResult& bcB,
                                  const Perm& f);

}  // namespace oat
