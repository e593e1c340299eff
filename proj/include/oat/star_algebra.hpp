#pragma once

#include "oat/matspace.hpp"

namespace oat {

// A concrete *-algebra of n x n matrices: a product- and adjoint-closed
// subspace together with its unit.  The unit is solved for, not assumed to
// be the ambient identity (corners of linking algebras have smaller units).
struct ConcreteStarAlgebra {
  MatSubspace space;
  CMatrix unit;

  Eigen::Index ambient() const { return space.rows(); }
  double tol() const { return space.tol(); }
};

// Smallest product- and adjoint-closed subspace containing the generators,
// with its unit.  Throws NoUnit when no unit exists.
ConcreteStarAlgebra generate(const std::vector<CMatrix>& gens,
                             double tol = kDefaultTol);

// Verifies closure under product/adjoint and the unit laws; throws on
// violation.  Used when an algebra arrives from a scenario file.
void validate_algebra(const ConcreteStarAlgebra& a);

// {x in c.space : xg = gx for all g in a.space}, via the kernel of the
// commutator map restricted to c.space.  Requires a.space inside c.space.
MatSubspace relative_commutant(const ConcreteStarAlgebra& a,
                               const ConcreteStarAlgebra& c);

// Hermitian p with p*s*p = unit (s restricted to the range of the unit must
// be positive definite).  Throws NotPositiveDefinite otherwise.
CMatrix inv_sqrt(const CMatrix& s, const CMatrix& unit,
                 double tol = kDefaultTol);

// Convenience: the scalar algebra C*u for a self-adjoint idempotent u.
ConcreteStarAlgebra scalar_algebra(const CMatrix& unit,
                                   double tol = kDefaultTol);

}  // namespace oat
