#include "oat/star_algebra.hpp"

#include <Eigen/Eigenvalues>

#include "oat/errors.hpp"

namespace oat {

namespace {

// Unit equations u*b = b, b*u = b for all basis b, solved in coordinates.
CMatrix solve_unit(const MatSubspace& space, double tol) {
  const Eigen::Index d = space.dim();
  const Eigen::Index n = space.rows();
  if (d == 0) throw NoUnit("zero algebra has no unit");
  const Eigen::Index m = n * space.cols();
  CMatrix lhs(2 * d * m, d);
  CVector rhs(2 * d * m);
  for (Eigen::Index j = 0; j < d; ++j) {
    const CMatrix& b = space.basis()[j];
    for (Eigen::Index k = 0; k < d; ++k) {
      lhs.block(j * m, k, m, 1) = vec(space.basis()[k] * b);
      lhs.block((d + j) * m, k, m, 1) = vec(b * space.basis()[k]);
    }
    rhs.segment(j * m, m) = vec(b);
    rhs.segment((d + j) * m, m) = vec(b);
  }
  CVector coeff = lhs.colPivHouseholderQr().solve(rhs);
  const double residual = (lhs * coeff - rhs).norm() / std::max(rhs.norm(), 1.0);
  if (residual > 1e3 * tol) throw NoUnit("algebra has no unit element");
  CMatrix u = space.from_coordinates(coeff);
  if ((u - u.adjoint()).norm() > 1e3 * tol * std::max(u.norm(), 1.0) ||
      (u * u - u).norm() > 1e3 * tol * std::max(u.norm(), 1.0))
    throw NoUnit("solved unit is not a self-adjoint idempotent");
  return u;
}

}  // namespace

ConcreteStarAlgebra generate(const std::vector<CMatrix>& gens, double tol) {
  if (gens.empty()) throw NoUnit("no generators");
  const Eigen::Index n = gens.front().rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n)
      throw ShapeMismatch("generators must be square and share one shape");

  MatSubspace space(n, n, tol);
  space.absorb(gens);
  {
    std::vector<CMatrix> adj;
    for (const auto& b : space.basis()) adj.push_back(b.adjoint());
    space.absorb(adj);
  }
  // Span growth to fixpoint; the dimension bound n^2 caps the rounds.
  for (Eigen::Index round = 0; round < n * n; ++round) {
    std::vector<CMatrix> prods;
    for (const auto& a : space.basis())
      for (const auto& b : space.basis()) {
        prods.push_back(a * b);
        prods.push_back((a * b).adjoint());
      }
    if (space.absorb(prods) == 0) break;
  }
  return {space, solve_unit(space, tol)};
}

void validate_algebra(const ConcreteStarAlgebra& a) {
  const auto& s = a.space;
  if (s.rows() != s.cols()) throw ShapeMismatch("algebra ambient not square");
  if (!s.contains(s.product_span(s)))
    throw Error("algebra space not closed under products");
  if (!s.equals(s.adjoint_span()))
    throw Error("algebra space not closed under adjoints");
  if (!s.contains(a.unit)) throw NoUnit("unit not in algebra space");
  for (const auto& b : s.basis()) {
    if ((a.unit * b - b).norm() > 1e3 * s.tol() ||
        (b * a.unit - b).norm() > 1e3 * s.tol())
      throw NoUnit("unit laws fail on basis");
  }
}

MatSubspace relative_commutant(const ConcreteStarAlgebra& a,
                               const ConcreteStarAlgebra& c) {
  if (a.ambient() != c.ambient())
    throw ShapeMismatch("ambient dimensions differ");
  if (!c.space.contains(a.space))
    throw NotASubalgebra("first algebra is not contained in the second");
  const Eigen::Index d = c.space.dim();
  const Eigen::Index m = c.ambient() * c.ambient();
  const Eigen::Index g = a.space.dim();
  if (g == 0) return c.space;
  // Kernel of x -> [x, g] over coordinates in c.space.
  CMatrix op(g * m, d);
  for (Eigen::Index i = 0; i < g; ++i) {
    const CMatrix& gen = a.space.basis()[i];
    for (Eigen::Index k = 0; k < d; ++k)
      op.block(i * m, k, m, 1) =
          vec(c.space.basis()[k] * gen - gen * c.space.basis()[k]);
  }
  Eigen::JacobiSVD<CMatrix> svd(op, Eigen::ComputeFullV);
  const double cutoff =
      c.space.tol() * std::max(svd.singularValues()(0), 1.0) * 1e3;
  std::vector<CMatrix> kernel;
  for (Eigen::Index k = 0; k < d; ++k)
    if (k >= svd.singularValues().size() || svd.singularValues()(k) <= cutoff)
      kernel.push_back(c.space.from_coordinates(svd.matrixV().col(k)));
  MatSubspace out(c.ambient(), c.ambient(), c.space.tol());
  out.absorb(kernel);
  return out;
}

CMatrix inv_sqrt(const CMatrix& s, const CMatrix& unit, double tol) {
  if ((s - s.adjoint()).norm() > 1e3 * tol * std::max(s.norm(), 1.0))
    throw NotPositiveDefinite("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s);
  const auto& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  if (top <= 0.0) throw NotPositiveDefinite("no positive spectrum");
  const double floor = 1e-8 * top;
  // Rank must match the unit's rank: positive definite on the unit's range.
  const Eigen::Index unit_rank =
      static_cast<Eigen::Index>(std::lround(unit.trace().real()));
  Eigen::Index rank = 0;
  CMatrix p = CMatrix::Zero(s.rows(), s.cols());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > floor) {
      p += (1.0 / std::sqrt(ev(i))) * es.eigenvectors().col(i) *
           es.eigenvectors().col(i).adjoint();
      ++rank;
    } else if (ev(i) < -floor) {
      throw NotPositiveDefinite("negative eigenvalue");
    }
  }
  if (rank < unit_rank)
    throw NotPositiveDefinite("singular on the range of the unit");
  if ((p * s * p - unit).norm() > 1e-8 * std::max(unit.norm(), 1.0))
    throw NotPositiveDefinite("inverse square root check failed");
  return p;
}

ConcreteStarAlgebra scalar_algebra(const CMatrix& unit, double tol) {
  MatSubspace s(unit.rows(), unit.cols(), tol);
  s.absorb({unit});
  return {s, unit};
}

}  // namespace oat
