#pragma once

#include "oat/report.hpp"
#include "oat/star_algebra.hpp"

namespace oat {

// A Hilbert bimodule between two represented algebras, carried by a subspace
// of rectangular matrices.  The inner products are never stored: they are
// always x y^* (left) and x^* y (right) in the concrete representation.
struct ConcreteBimodule {
  ConcreteStarAlgebra left;
  ConcreteStarAlgebra right;
  MatSubspace space;

  double tol() const { return space.tol(); }
};

// The data for a strong Morita equivalence of inclusions A c C, B c D:
// a big C-D bimodule Y and the distinguished subspace X of it.
struct InclusionMoritaDatum {
  ConcreteBimodule big;   // C-D on Y
  MatSubspace small_space;  // X inside Y's ambient
  ConcreteStarAlgebra small_left;   // A inside C
  ConcreteStarAlgebra small_right;  // B inside D
};

Report verify_bimodule(const ConcreteBimodule& x, bool require_full);

// Dual bimodule: adjoint subspace with the algebras swapped.
ConcreteBimodule dual(const ConcreteBimodule& x);

// Interior tensor product, realized as the matrix-product span.
ConcreteBimodule tensor(const ConcreteBimodule& x, const ConcreteBimodule& y);

Report check_inclusion_morita(const InclusionMoritaDatum& d);

// A finite frame {u_i} in the bimodule with sum u_i u_i^* = left unit
// (requires left fullness).  `seed` selects among equivalent frames so
// independence checks can use a second one.
std::vector<CMatrix> left_frame(const ConcreteBimodule& x, unsigned seed = 0);
// Frame with sum v_j^* v_j = right unit.
std::vector<CMatrix> right_frame(const ConcreteBimodule& x, unsigned seed = 0);

}  // namespace oat
