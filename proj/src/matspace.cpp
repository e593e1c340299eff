#include "oat/matspace.hpp"

#include <algorithm>

#include "oat/errors.hpp"

namespace oat {

namespace {

void check_shape(const MatSubspace& s, const CMatrix& m) {
  if (m.rows() != s.rows() || m.cols() != s.cols())
    throw ShapeMismatch("matrix shape does not match subspace ambient");
}

}  // namespace

Eigen::Index MatSubspace::absorb(const std::vector<CMatrix>& mats) {
  double scale = 1.0;
  for (const auto& m : mats) {
    check_shape(*this, m);
    scale = std::max(scale, m.norm());
  }
  const double cutoff = tol_ * scale;
  Eigen::Index added = 0;
  for (const auto& m : mats) {
    CMatrix v = m;
    // Modified Gram-Schmidt with one reorthogonalization pass.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis_) v -= frobenius(b, v) * b;
    const double n = v.norm();
    if (n > cutoff) {
      basis_.push_back(v / n);
      ++added;
    }
  }
  return added;
}

MatSubspace MatSubspace::span(const std::vector<CMatrix>& mats, double tol) {
  if (mats.empty()) return MatSubspace(0, 0, tol);
  MatSubspace s(mats.front().rows(), mats.front().cols(), tol);
  s.absorb(mats);
  return s;
}

MatSubspace span(const std::vector<CMatrix>& mats, double tol) {
  return MatSubspace::span(mats, tol);
}

CMatrix MatSubspace::project(const CMatrix& m) const {
  check_shape(*this, m);
  CMatrix p = CMatrix::Zero(rows_, cols_);
  for (const auto& b : basis_) p += frobenius(b, m) * b;
  return p;
}

double MatSubspace::membership_residual(const CMatrix& m) const {
  return (m - project(m)).norm() / std::max(m.norm(), 1.0);
}

bool MatSubspace::contains(const CMatrix& m) const {
  return membership_residual(m) <= tol_;
}

bool MatSubspace::contains(const MatSubspace& other) const {
  if (other.dim() == 0) return true;
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw ShapeMismatch("subspace ambients differ");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const CMatrix& b) { return contains(b); });
}

bool MatSubspace::equals(const MatSubspace& other) const {
  if (dim() != other.dim()) return false;
  if (dim() == 0) return true;
  return contains(other) && other.contains(*this);
}

CVector MatSubspace::coordinates(const CMatrix& m) const {
  check_shape(*this, m);
  CVector c(dim());
  for (Eigen::Index k = 0; k < dim(); ++k) c(k) = frobenius(basis_[k], m);
  return c;
}

CMatrix MatSubspace::from_coordinates(const CVector& c) const {
  CMatrix m = CMatrix::Zero(rows_, cols_);
  for (Eigen::Index k = 0; k < dim(); ++k) m += c(k) * basis_[k];
  return m;
}

MatSubspace MatSubspace::adjoint_span() const {
  MatSubspace s(cols_, rows_, tol_);
  for (const auto& b : basis_) s.basis_.push_back(b.adjoint());
  return s;
}

MatSubspace MatSubspace::product_span(const MatSubspace& other) const {
  if (cols_ != other.rows_)
    throw ShapeMismatch("inner dimensions differ in product_span");
  std::vector<CMatrix> prods;
  prods.reserve(basis_.size() * other.basis_.size());
  for (const auto& a : basis_)
    for (const auto& b : other.basis_) prods.push_back(a * b);
  MatSubspace s(rows_, other.cols_, tol_);
  s.absorb(prods);
  return s;
}

MatSubspace MatSubspace::sum(const MatSubspace& other) const {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw ShapeMismatch("subspace ambients differ in sum");
  MatSubspace s = *this;
  s.absorb(other.basis_);
  return s;
}

}  // namespace oat
