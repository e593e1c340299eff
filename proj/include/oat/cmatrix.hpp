#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Frobenius inner product trace(a^* b).
inline Complex frobenius(const CMatrix& a, const CMatrix& b) {
  return (a.adjoint() * b).trace();
}

inline double frobenius_norm(const CMatrix& a) { return a.norm(); }

// Largest singular value.
inline double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMatrix>(a).singularValues()(0);
}

// Column-major flattening to a complex vector.
inline CVector vec(const CMatrix& a) {
  return Eigen::Map<const CVector>(a.data(), a.size());
}

inline CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

// [Re; Im] stacking used wherever a conjugate-linear map has to become an
// ordinary real-linear solve.
inline RVector realify(const CVector& v) {
  RVector r(2 * v.size());
  r.head(v.size()) = v.real();
  r.tail(v.size()) = v.imag();
  return r;
}

inline CVector unrealify(const RVector& r) {
  const Eigen::Index n = r.size() / 2;
  CVector v(n);
  v.real() = r.head(n);
  v.imag() = r.tail(n);
  return v;
}

inline CMatrix matrix_unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i,
                           Eigen::Index j) {
  CMatrix m = CMatrix::Zero(rows, cols);
  m(i, j) = 1.0;
  return m;
}

}  // namespace oat
