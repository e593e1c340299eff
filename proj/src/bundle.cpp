#include "oat/bundle.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "oat/errors.hpp"

namespace oat {

GradedCStarBundle make_bundle(const FiniteGroup& group,
                              const std::vector<MatSubspace>& fibers,
                              double tol) {
  if (static_cast<int>(fibers.size()) != group.order())
    throw ShapeMismatch("one fiber per group element required");
  const Eigen::Index n = fibers.front().rows();
  std::vector<CMatrix> all;
  for (const auto& f : fibers) {
    if (f.rows() != n || f.cols() != n)
      throw ShapeMismatch("fibers must share a square ambient");
    for (const auto& b : f.basis()) all.push_back(b);
  }
  GradedCStarBundle out{group, n, fibers, generate(all, tol),
                        ConcreteStarAlgebra{MatSubspace(n, n, tol), {}}};
  const auto& ae = fibers[group.identity()];
  std::vector<CMatrix> ae_basis(ae.basis());
  out.fiber_algebra = generate(ae_basis, tol);
  return out;
}

Report verify_bundle(const GradedCStarBundle& b) {
  Report rep;
  const double bound = 1e3 * b.tol();
  const int n = b.group.order();

  // Linear independence of the fibers.
  Eigen::Index dim_sum = 0;
  MatSubspace joint(b.ambient, b.ambient, b.tol());
  for (const auto& f : b.fibers) {
    dim_sum += f.dim();
    joint.absorb(f.basis());
  }
  rep.check("fibers.independent", "grading",
            joint.dim() == dim_sum, static_cast<double>(dim_sum - joint.dim()),
            "dim(sum of fibers) equals sum of fiber dims");
  rep.check("total.matches_fibers", "grading",
            b.total.space.equals(joint), 0.0,
            "total algebra equals the span of the fibers");

  // Grading: A_t A_s inside A_{ts}.
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      auto prod = b.fibers[t].product_span(b.fibers[s]);
      rep.check("grading.product.t" + std::to_string(t) + ".s" +
                    std::to_string(s),
                "fiber multiplication", b.fibers[b.group.mul(t, s)].contains(prod));
    }
  // Involution: A_t^* = A_{t^{-1}}.
  for (int t = 0; t < n; ++t)
    rep.check("grading.involution.t" + std::to_string(t), "fiber involution",
              b.fibers[t].adjoint_span().equals(b.fibers[b.group.inv(t)]));

  // The unit of C lies in A_e and is the unit of A.
  const auto& ae = b.fibers[b.group.identity()];
  rep.residual_check("unit.in_unit_fiber", "unit location",
                     ae.membership_residual(b.total.unit), bound);
  rep.residual_check("unit.shared_with_A", "unit location",
                     (b.total.unit - b.fiber_algebra.unit).norm(), bound);
  return rep;
}

bool is_saturated(const GradedCStarBundle& b) {
  const auto& ae = b.fibers[b.group.identity()];
  for (int t = 0; t < b.group.order(); ++t) {
    auto prod = b.fibers[t].product_span(b.fibers[t].adjoint_span());
    if (!prod.equals(ae)) return false;
  }
  return true;
}

std::vector<CMatrix> saturation_witness(const GradedCStarBundle& b, int t) {
  const auto& fiber = b.fibers[t];
  if (fiber.dim() == 0)
    throw NotSaturatedAt(t, "zero fiber at element " + std::to_string(t));
  CMatrix s = CMatrix::Zero(b.ambient, b.ambient);
  for (const auto& x : fiber.basis()) s += x * x.adjoint();
  CMatrix p;
  try {
    p = inv_sqrt(s, b.total.unit, b.tol());
  } catch (const NotPositiveDefinite& e) {
    throw NotSaturatedAt(t, std::string("frame sum not invertible: ") + e.what());
  }
  std::vector<CMatrix> out;
  for (const auto& x : fiber.basis()) out.push_back(p * x);
  return out;
}

std::vector<CMatrix> grading_components(const GradedCStarBundle& b,
                                        const CMatrix& x) {
  if (x.rows() != b.ambient || x.cols() != b.ambient)
    throw ShapeMismatch("ambient mismatch");
  // Least squares against the concatenated fiber bases.
  Eigen::Index total_dim = 0;
  for (const auto& f : b.fibers) total_dim += f.dim();
  const Eigen::Index m = b.ambient * b.ambient;
  CMatrix lhs(m, total_dim);
  Eigen::Index col = 0;
  for (const auto& f : b.fibers)
    for (const auto& bm : f.basis()) lhs.col(col++) = vec(bm);
  CVector coeff = lhs.colPivHouseholderQr().solve(vec(x));
  const double residual =
      (lhs * coeff - vec(x)).norm() / std::max(x.norm(), 1.0);
  if (residual > 1e3 * b.tol())
    throw NotInTotalAlgebra("element is not in the total algebra");
  std::vector<CMatrix> comps;
  col = 0;
  for (const auto& f : b.fibers) {
    CMatrix c = CMatrix::Zero(b.ambient, b.ambient);
    for (const auto& bm : f.basis()) c += coeff(col++) * bm;
    comps.push_back(std::move(c));
  }
  return comps;
}

CMatrix canonical_expectation(const GradedCStarBundle& b, const CMatrix& x) {
  return grading_components(b, x)[b.group.identity()];
}

QuasiBasis quasi_basis_and_index(const GradedCStarBundle& b) {
  if (!is_saturated(b)) throw NotSaturated("bundle is not saturated");
  QuasiBasis qb;
  qb.index = CMatrix::Zero(b.ambient, b.ambient);
  for (int t = 0; t < b.group.order(); ++t) {
    for (const auto& x : saturation_witness(b, t)) {
      qb.pairs.emplace_back(x, x.adjoint());
      qb.index += x * x.adjoint();
    }
  }
  // Quasi-basis identity on a spanning set of C.
  for (const auto& c : b.total.space.basis()) {
    CMatrix rec = CMatrix::Zero(b.ambient, b.ambient);
    for (const auto& [cj, cjs] : qb.pairs)
      rec += cj * canonical_expectation(b, cjs * c);
    if ((rec - c).norm() > 1e-7)
      throw NotSaturated("quasi-basis identity failed");
  }
  return qb;
}

CMatrix regular_rep_unitary(const FiniteGroup& g, int t) {
  CMatrix u = CMatrix::Zero(g.order(), g.order());
  for (int c = 0; c < g.order(); ++c) u(g.mul(t, c), c) = 1.0;
  return u;
}

GradedCStarBundle group_algebra_bundle(const FiniteGroup& g, double tol) {
  std::vector<MatSubspace> fibers;
  for (int t = 0; t < g.order(); ++t)
    fibers.push_back(span({regular_rep_unitary(g, t)}, tol));
  return make_bundle(g, fibers, tol);
}

GradedCStarBundle pauli_bundle(double tol) {
  auto z2 = FiniteGroup::cyclic(2);
  auto g = FiniteGroup::direct_product(z2, z2);
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  // Element (a,b) has index 2a+b: (0,0)->I, (0,1)->sx, (1,0)->sy, (1,1)->sz.
  std::vector<MatSubspace> fibers = {span({id}, tol), span({sx}, tol),
                                     span({sy}, tol), span({sz}, tol)};
  return make_bundle(g, fibers, tol);
}

GradedCStarBundle matrix_group_algebra_bundle(double tol) {
  auto g = FiniteGroup::cyclic(2);
  std::vector<MatSubspace> fibers;
  for (int t = 0; t < 2; ++t) {
    CMatrix lam = regular_rep_unitary(g, t);
    std::vector<CMatrix> basis;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        basis.push_back(
            Eigen::kroneckerProduct(matrix_unit(2, 2, i, j), lam).eval());
    fibers.push_back(span(basis, tol));
  }
  return make_bundle(g, fibers, tol);
}

}  // namespace oat
