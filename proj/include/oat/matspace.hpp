#pragma once

#include <vector>

#include "oat/cmatrix.hpp"

namespace oat {

constexpr double kDefaultTol = 1e-9;

// A linear subspace of rows x cols complex matrices, kept as a
// Frobenius-orthonormal basis.  The universal carrier for fibers, algebras
// and bimodules: every membership and equality question in the toolkit
// reduces to projections against these bases.
class MatSubspace {
 public:
  MatSubspace() : MatSubspace(0, 0) {}
  MatSubspace(Eigen::Index rows, Eigen::Index cols, double tol = kDefaultTol)
      : rows_(rows), cols_(cols), tol_(tol) {}

  static MatSubspace span(const std::vector<CMatrix>& mats,
                          double tol = kDefaultTol);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  double tol() const { return tol_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }

  // Orthogonal projection onto the subspace.
  CMatrix project(const CMatrix& m) const;

  // ||m - proj(m)||_F relative to max(||m||_F, 1).
  double membership_residual(const CMatrix& m) const;
  bool contains(const CMatrix& m) const;
  bool contains(const MatSubspace& other) const;
  bool equals(const MatSubspace& other) const;

  // Coordinates of m in the orthonormal basis (valid when contains(m)).
  CVector coordinates(const CMatrix& m) const;
  CMatrix from_coordinates(const CVector& c) const;

  MatSubspace adjoint_span() const;
  MatSubspace product_span(const MatSubspace& other) const;
  MatSubspace sum(const MatSubspace& other) const;

  // Grows the subspace in place by the given matrices; returns the number of
  // basis vectors added.
  Eigen::Index absorb(const std::vector<CMatrix>& mats);

 private:
  Eigen::Index rows_, cols_;
  double tol_;
  std::vector<CMatrix> basis_;
};

MatSubspace span(const std::vector<CMatrix>& mats, double tol = kDefaultTol);

}  // namespace oat
