#pragma once

#include "oat/bimodule.hpp"
#include "oat/group.hpp"
#include "oat/report.hpp"
#include "oat/star_algebra.hpp"

namespace oat {

// A group action on a represented algebra.  Each map is stored as a complex
// matrix over the coordinates of the algebra's orthonormal basis; apply()
// moves between matrices and coordinates.
struct ActionSystem {
  ConcreteStarAlgebra algebra;
  FiniteGroup group;
  std::vector<CMatrix> maps;  // coordinate matrices, one per element

  CMatrix apply(int t, const CMatrix& x) const;
};

// Each map must be a unital *-automorphism and the family must compose per
// the Cayley table; violations become report entries.
Report verify_action(const ActionSystem& a);

// alpha_t = Ad(u_t) for a unitary representation t -> u_t inside the
// algebra's ambient.  `unitaries` is indexed by group element.
ActionSystem inner_action(const ConcreteStarAlgebra& algebra,
                          const FiniteGroup& group,
                          const std::vector<CMatrix>& unitaries);

ActionSystem trivial_action(const ConcreteStarAlgebra& algebra,
                            const FiniteGroup& group);

// Builds the ActionSystem whose map at t is x -> images_t(x) given as a
// callable on matrices; certifies each image stays in the algebra.
ActionSystem action_from_maps(
    const ConcreteStarAlgebra& algebra, const FiniteGroup& group,
    const std::vector<std::vector<CMatrix>>& basis_images);

// A compatible action on a bimodule: lambda covariant with the two algebra
// actions.
struct BimoduleAction {
  ConcreteBimodule bimodule;
  FiniteGroup group;
  std::vector<CMatrix> maps;  // coordinate matrices on bimodule.space
  ActionSystem left;          // alpha on bimodule.left
  ActionSystem right;         // beta on bimodule.right

  CMatrix apply(int t, const CMatrix& x) const;
};

Report verify_bimodule_action(const BimoduleAction& a);

BimoduleAction inner_bimodule_action(const ConcreteBimodule& bimodule,
                                     const FiniteGroup& group,
                                     const std::vector<CMatrix>& left_unitaries,
                                     const std::vector<CMatrix>& right_unitaries);

}  // namespace oat
