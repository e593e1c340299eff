#pragma once

#include <utility>
#include <vector>

#include "oat/group.hpp"
#include "oat/report.hpp"
#include "oat/star_algebra.hpp"

namespace oat {

// A C*-algebraic bundle over a finite group, concretely: one fiber subspace
// per group element inside a single ambient matrix algebra, with the total
// algebra C = sum of fibers and the unit fiber algebra A = A_e.
struct GradedCStarBundle {
  FiniteGroup group;
  Eigen::Index ambient = 0;
  std::vector<MatSubspace> fibers;  // indexed by group element
  ConcreteStarAlgebra total;        // C
  ConcreteStarAlgebra fiber_algebra;  // A = A_e

  double tol() const { return total.tol(); }
};

// Assembles a bundle from raw fibers: builds C and A and solves their units.
GradedCStarBundle make_bundle(const FiniteGroup& group,
                              const std::vector<MatSubspace>& fibers,
                              double tol = kDefaultTol);

// Checks every grading invariant; failures become report entries.
Report verify_bundle(const GradedCStarBundle& b);

// A_t A_t^* = A_e for every t.
bool is_saturated(const GradedCStarBundle& b);

// {x_i} in A_t with sum x_i x_i^* = unit, built by normalizing an
// orthonormal fiber basis with the inverse square root of its frame sum.
std::vector<CMatrix> saturation_witness(const GradedCStarBundle& b, int t);

// The A_e-component of x under the grading decomposition.
CMatrix canonical_expectation(const GradedCStarBundle& b, const CMatrix& x);

// All grading components at once (least-squares against the fiber bases).
std::vector<CMatrix> grading_components(const GradedCStarBundle& b,
                                        const CMatrix& x);

struct QuasiBasis {
  std::vector<std::pair<CMatrix, CMatrix>> pairs;  // (c_j, c_j^*)
  CMatrix index;                                   // sum c_j c_j^*
};

// Quasi-basis from saturation witnesses; for saturated bundles the index is
// |G| times the unit.
QuasiBasis quasi_basis_and_index(const GradedCStarBundle& b);

// Built-in families used by demos and tests.
GradedCStarBundle group_algebra_bundle(const FiniteGroup& g,
                                       double tol = kDefaultTol);
GradedCStarBundle pauli_bundle(double tol = kDefaultTol);
// M2 tensor the group algebra of Z2.
GradedCStarBundle matrix_group_algebra_bundle(double tol = kDefaultTol);
// Regular-representation unitary of the translation by t.
CMatrix regular_rep_unitary(const FiniteGroup& g, int t);

}  // namespace oat
