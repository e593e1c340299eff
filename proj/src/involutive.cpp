#include "oat/involutive.hpp"

#include <string>

#include "oat/errors.hpp"

namespace oat {

namespace {

// Realified block form of v -> N conj(v).
Eigen::MatrixXd realify_conjugate_map(const CMatrix& n) {
  const Eigen::Index d = n.rows();
  Eigen::MatrixXd out(2 * d, 2 * n.cols());
  out.topLeftCorner(d, n.cols()) = n.real();
  out.topRightCorner(d, n.cols()) = n.imag();
  out.bottomLeftCorner(d, n.cols()) = n.imag();
  out.bottomRightCorner(d, n.cols()) = -n.real();
  return out;
}

// Realified matrix of multiplication by i.
Eigen::MatrixXd i_matrix(Eigen::Index d) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  j.topRightCorner(d, d) = -Eigen::MatrixXd::Identity(d, d);
  j.bottomLeftCorner(d, d) = Eigen::MatrixXd::Identity(d, d);
  return j;
}

CMatrix diag_embed(const CMatrix& a) {
  CMatrix out = CMatrix::Zero(2 * a.rows(), 2 * a.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(a.rows(), a.cols()) = a;
  return out;
}

CMatrix offdiag_embed(const CMatrix& top, const CMatrix& bottom) {
  CMatrix out = CMatrix::Zero(top.rows() + bottom.rows(),
                              bottom.cols() + top.cols());
  out.topRightCorner(top.rows(), top.cols()) = top;
  out.bottomLeftCorner(bottom.rows(), bottom.cols()) = bottom;
  return out;
}

}  // namespace

CMatrix InvolutiveBimodule::apply_natural(const CMatrix& x) const {
  const CVector c = base.space.coordinates(x);
  return base.space.from_coordinates(unrealify(natural * realify(c)));
}

Eigen::MatrixXd conjugate_linear_matrix(const MatSubspace& space,
                                        const std::vector<CMatrix>& images) {
  const Eigen::Index d = space.dim();
  if (static_cast<Eigen::Index>(images.size()) != d)
    throw ShapeMismatch("one image per basis vector required");
  CMatrix n(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (!space.contains(images[k]))
      throw Error("involution image leaves the space");
    n.col(k) = space.coordinates(images[k]);
  }
  return realify_conjugate_map(n);
}

InvolutiveBimodule make_involutive(const ConcreteBimodule& base,
                                   const std::vector<CMatrix>& basis_images) {
  return {base, conjugate_linear_matrix(base.space, basis_images)};
}

InvolutiveBimodule adjoint_involutive(const ConcreteBimodule& base) {
  std::vector<CMatrix> images;
  for (const auto& b : base.space.basis()) images.push_back(b.adjoint());
  return make_involutive(base, images);
}

Report verify_involutive(const InvolutiveBimodule& x) {
  Report rep;
  const double bound = 1e-8;
  const Eigen::Index d = x.base.space.dim();
  const Eigen::MatrixXd j = i_matrix(d);
  rep.residual_check("conjugate_linear", "involution data",
                     (x.natural * j + j * x.natural).norm(), bound,
                     "map anticommutes with multiplication by i");
  double invol = 0.0, cond2 = 0.0, cond3 = 0.0;
  for (const auto& v : x.base.space.basis()) {
    invol = std::max(invol,
                     (x.apply_natural(x.apply_natural(v)) - v).norm());
    for (const auto& a : x.base.left.space.basis())
      for (const auto& b : x.base.right.space.basis())
        cond2 = std::max(cond2,
                         (x.apply_natural(a * v * b) -
                          b.adjoint() * x.apply_natural(v) * a.adjoint())
                             .norm());
    for (const auto& w : x.base.space.basis())
      cond3 = std::max(cond3, (v * x.apply_natural(w).adjoint() -
                               x.apply_natural(v).adjoint() * w)
                                  .norm());
  }
  rep.residual_check("involutive", "involution condition 1", invol, bound);
  rep.residual_check("module_compatible", "involution condition 2", cond2,
                     bound);
  rep.residual_check("inner_product_flip", "involution condition 3", cond3,
                     bound);
  return rep;
}

LinkingSystem linking_and_bundle(const InvolutiveBimodule& x) {
  const double tol = x.base.tol();
  std::vector<CMatrix> diag_basis, off_basis;
  for (const auto& a : x.base.left.space.basis())
    diag_basis.push_back(diag_embed(a));
  for (const auto& v : x.base.space.basis())
    off_basis.push_back(offdiag_embed(v, x.apply_natural(v).adjoint()));
  auto z2 = FiniteGroup::cyclic(2);
  // Size the fibers explicitly so an empty off-diagonal part (the zero
  // module) still lives in the right ambient.
  const Eigen::Index n = 2 * x.base.left.space.rows();
  MatSubspace diag_fiber(n, n, tol), off_fiber(n, n, tol);
  diag_fiber.absorb(diag_basis);
  off_fiber.absorb(off_basis);
  GradedCStarBundle bundle = make_bundle(z2, {diag_fiber, off_fiber}, tol);
  LinkingSystem out{bundle.total, bundle,
                    ConcreteStarAlgebra{span(diag_basis, tol),
                                        diag_embed(x.base.left.unit)}};
  return out;
}

InvolutiveBimodule bundle_to_involutive(const GradedCStarBundle& b) {
  if (b.group.order() != 2)
    throw WrongGroup("a two-element group is required");
  const int other = 1 - b.group.identity();
  ConcreteBimodule base{b.fiber_algebra, b.fiber_algebra, b.fibers[other]};
  return adjoint_involutive(base);
}

InvolutiveBimodule transport(const ConcreteBimodule& m,
                             const InvolutiveBimodule& x) {
  if (!m.left.space.equals(x.base.left.space))
    throw ShapeMismatch("bimodule does not start at the involutive base "
                        "algebra");
  if (!verify_bimodule(m, true).passed())
    throw IllDefinedInvolution("conjugating bimodule is not a full "
                               "equivalence bimodule");
  const double tol = m.tol();
  MatSubspace yspace = m.space.adjoint_span().product_span(
      x.base.space.product_span(m.space));
  const Eigen::Index dy = yspace.dim();
  // Conjugate-linear extension of m^* x n -> n^* x^nat m over the spanning
  // triples, certified by the solve residual.
  const auto& mb = m.space.basis();
  const auto& xb = x.base.space.basis();
  const Eigen::Index triples =
      static_cast<Eigen::Index>(mb.size() * xb.size() * mb.size());
  CMatrix vc(dy, triples), w(dy, triples);
  Eigen::Index col = 0;
  for (const auto& mi : mb)
    for (const auto& xj : xb)
      for (const auto& nk : mb) {
        const CMatrix v = mi.adjoint() * xj * nk;
        const CMatrix img = nk.adjoint() * x.apply_natural(xj) * mi;
        if (!yspace.contains(v) || !yspace.contains(img))
          throw IllDefinedInvolution("spanning element leaves the "
                                     "transported space");
        vc.col(col) = yspace.coordinates(v).conjugate();
        w.col(col) = yspace.coordinates(img);
        ++col;
      }
  // Solve N vc = w in least squares via the transposed system.
  CMatrix nt = vc.transpose().colPivHouseholderQr().solve(w.transpose());
  CMatrix n = nt.transpose();
  const double residual = (n * vc - w).norm() / std::max(w.norm(), 1.0);
  if (residual > 1e-8)
    throw IllDefinedInvolution("involution extension is inconsistent");
  ConcreteBimodule base{m.right, m.right, yspace};
  return {base, realify_conjugate_map(n)};
}

CMatrix SpaceMap::apply(const CMatrix& v) const {
  return to.from_coordinates(coeff * from.coordinates(v));
}

SpaceMap SpaceMap::inverse() const {
  if (coeff.rows() != coeff.cols())
    throw ShapeMismatch("map between spaces of different dimension");
  return {to, from, coeff.inverse()};
}

SpaceMap inclusion_map(const MatSubspace& from, const MatSubspace& to) {
  CMatrix coeff(to.dim(), from.dim());
  for (Eigen::Index k = 0; k < from.dim(); ++k) {
    if (!to.contains(from.basis()[k]))
      throw Error("inclusion target does not contain the source");
    coeff.col(k) = to.coordinates(from.basis()[k]);
  }
  return {from, to, coeff};
}

Report psi_theta_check(const ConcreteBimodule& m, const InvolutiveBimodule& x,
                       const InvolutiveBimodule& y, const SpaceMap& phi) {
  Report rep;
  const double bound = 1e-8;
  InvolutiveBimodule xt = transport(m, x);
  if (!phi.from.equals(xt.base.space) || !phi.to.equals(y.base.space))
    throw NotAnInvolutiveIsomorphism("map endpoints do not match the "
                                     "transported and target spaces");
  if (phi.coeff.rows() != phi.coeff.cols() ||
      std::abs(phi.coeff.determinant()) < 1e-12)
    throw NotAnInvolutiveIsomorphism("map is not a linear bijection");
  double ip_l = 0, ip_r = 0, act = 0, inv = 0;
  for (const auto& v : xt.base.space.basis()) {
    for (const auto& w : xt.base.space.basis()) {
      ip_l = std::max(ip_l, (phi.apply(v) * phi.apply(w).adjoint() -
                             v * w.adjoint())
                                .norm());
      ip_r = std::max(ip_r, (phi.apply(v).adjoint() * phi.apply(w) -
                             v.adjoint() * w)
                                .norm());
    }
    for (const auto& b1 : y.base.left.space.basis())
      for (const auto& b2 : y.base.right.space.basis())
        act = std::max(act, (phi.apply(b1 * v * b2) -
                             b1 * phi.apply(v) * b2)
                                .norm());
    inv = std::max(inv, (phi.apply(xt.apply_natural(v)) -
                         y.apply_natural(phi.apply(v)))
                            .norm());
  }
  if (ip_l > bound || ip_r > bound || act > bound || inv > bound)
    throw NotAnInvolutiveIsomorphism("map fails the involutive isomorphism "
                                     "checks");
  rep.residual_check("phi.left_inner", "isomorphism premise", ip_l, bound);
  rep.residual_check("phi.right_inner", "isomorphism premise", ip_r, bound);
  rep.residual_check("phi.actions", "isomorphism premise", act, bound);
  rep.residual_check("phi.involution", "isomorphism premise", inv, bound);

  MatSubspace xm = x.base.space.product_span(m.space);
  MatSubspace my = m.space.product_span(y.base.space);
  auto psi_with = [&](unsigned seed, const CMatrix& v) {
    CMatrix out = CMatrix::Zero(my.rows(), my.cols());
    for (const auto& u : left_frame(m, seed))
      out += u * phi.apply(u.adjoint() * v);
    return out;
  };
  SpaceMap phi_inv = phi.inverse();
  auto theta = [&](const CMatrix& w) {
    CMatrix out = CMatrix::Zero(xm.rows(), xm.cols());
    for (const auto& u : left_frame(m, 0))
      out += u * phi_inv.apply(u.adjoint() * w);
    return out;
  };

  std::vector<CMatrix> images;
  double into = 0, ipsi_l = 0, ipsi_r = 0, roundtrip = 0, indep = 0;
  for (const auto& v : xm.basis()) {
    const CMatrix pv = psi_with(0, v);
    images.push_back(pv);
    into = std::max(into, my.membership_residual(pv));
    indep = std::max(indep, (psi_with(1, v) - pv).norm());
    roundtrip = std::max(roundtrip, (theta(pv) - v).norm());
    for (const auto& w : xm.basis()) {
      const CMatrix pw = psi_with(0, w);
      ipsi_l = std::max(ipsi_l,
                        (pv * pw.adjoint() - v * w.adjoint()).norm());
      ipsi_r = std::max(ipsi_r,
                        (pv.adjoint() * pw - v.adjoint() * w).norm());
    }
  }
  rep.residual_check("psi.into_target", "identification range", into, bound);
  rep.check("psi.onto", "identification bijectivity",
            span(images, m.tol()).equals(my) && xm.dim() == my.dim());
  rep.residual_check("psi.left_inner", "identification left inner products",
                     ipsi_l, bound);
  rep.residual_check("psi.right_inner", "identification right inner "
                     "products", ipsi_r, bound);
  rep.residual_check("psi.frame_independent", "frame independence", indep,
                     bound);
  rep.residual_check("theta_psi.identity", "inverse identification",
                     roundtrip, bound);
  double rt2 = 0;
  for (const auto& w : my.basis())
    rt2 = std::max(rt2, (psi_with(0, theta(w)) - w).norm());
  rep.residual_check("psi_theta.identity", "inverse identification", rt2,
                     bound);

  // Dual relation: the induced map on adjoints satisfies
  // phi~(m^* x^nat-side n) = phi(n^* x m)^*.
  double dual_rel = 0;
  for (const auto& mi : m.space.basis())
    for (const auto& xj : x.base.space.basis())
      for (const auto& nk : m.space.basis()) {
        const CMatrix lhs =
            phi.apply((mi.adjoint() * xj.adjoint() * nk).adjoint())
                .adjoint();
        const CMatrix rhs = phi.apply(nk.adjoint() * xj * mi).adjoint();
        dual_rel = std::max(dual_rel, (lhs - rhs).norm());
      }
  rep.residual_check("phi.dual_relation", "dual identification", dual_rel,
                     bound);
  return rep;
}

CMResult build_C_M(const ConcreteBimodule& m, const InvolutiveBimodule& x,
                   const InvolutiveBimodule& y, const SpaceMap& phi) {
  (void)phi;  // validity is established by psi_theta_check beforehand
  const double tol = m.tol();
  LinkingSystem lx = linking_and_bundle(x);
  LinkingSystem ly = linking_and_bundle(y);

  std::vector<CMatrix> diag_basis, off_basis;
  for (const auto& m1 : m.space.basis()) diag_basis.push_back(diag_embed(m1));
  for (const auto& xb : x.base.space.basis())
    for (const auto& m2 : m.space.basis())
      off_basis.push_back(
          offdiag_embed(xb * m2, x.apply_natural(xb).adjoint() * m2));
  MatSubspace m0 = span(diag_basis, tol);
  MatSubspace m1f = span(off_basis, tol);
  MatSubspace cmspace = m0.sum(m1f);

  if (!cmspace.contains(cmspace.product_span(ly.cx.space)))
    throw ClosureFailure("right linking-algebra action leaves the span");
  if (!cmspace.contains(lx.cx.space.product_span(cmspace)))
    throw ClosureFailure("left linking-algebra action leaves the span");

  CMResult out{
      InclusionMoritaDatum{
          ConcreteBimodule{lx.cx, ly.cx, cmspace}, m0, lx.cornerA,
          ConcreteStarAlgebra{
              [&] {
                std::vector<CMatrix> bb;
                for (const auto& b : y.base.left.space.basis())
                  bb.push_back(diag_embed(b));
                return span(bb, tol);
              }(),
              diag_embed(y.base.left.unit)}},
      EquivalenceBundle{lx.z2bundle, ly.z2bundle, {m0, m1f}},
      ConcreteBimodule{lx.cx, ly.cx, cmspace}};
  return out;
}

std::pair<ConcreteBimodule, SpaceMap> extract_morita(
    const EquivalenceBundle& e) {
  if (e.bundleA.group.order() != 2)
    throw WrongGroup("a two-element group is required");
  const int id = e.bundleA.group.identity();
  ConcreteBimodule m{e.bundleA.fiber_algebra, e.bundleB.fiber_algebra,
                     e.fibers[id]};
  InvolutiveBimodule x = bundle_to_involutive(e.bundleA);
  InvolutiveBimodule y = bundle_to_involutive(e.bundleB);
  InvolutiveBimodule xt = transport(m, x);
  SpaceMap phi = inclusion_map(xt.base.space, y.base.space);
  return {m, phi};
}

Report involutive_equivalence_check(const ConcreteStarAlgebra& a,
                       const InvolutiveBimodule& x,
                       const ConcreteStarAlgebra& b,
                       const InvolutiveBimodule& y,
                       const ConcreteBimodule* m, const SpaceMap* phi) {
  Report rep;
  rep.check("inputs.x_base_algebra", "hypothesis audit",
            x.base.left.space.equals(a.space));
  rep.check("inputs.y_base_algebra", "hypothesis audit",
            y.base.left.space.equals(b.space));
  rep.merge(verify_involutive(x), "x.");
  rep.merge(verify_involutive(y), "y.");
  rep.merge(verify_bimodule(x.base, true), "x.fullness.");
  rep.merge(verify_bimodule(y.base, true), "y.fullness.");

  LinkingSystem lx = linking_and_bundle(x);
  MatSubspace rc = relative_commutant(lx.cornerA, lx.cx);
  rep.check("irreducibility.audit", "hypothesis audit", true,
            static_cast<double>(rc.dim()),
            "dim(relative commutant of the base corner in the linking "
            "algebra) = " + std::to_string(rc.dim()) +
                "; the irreducibility hypothesis asks for 1, which no "
                "finite-dimensional model satisfies");

  if (m != nullptr && phi != nullptr) {
    rep.merge(psi_theta_check(*m, x, y, *phi), "identification.");
    CMResult cm = build_C_M(*m, x, y, *phi);
    rep.merge(check_inclusion_morita(cm.datum), "linking_morita.");
    rep.merge(verify_equivalence_bundle(cm.bundle), "linking_bundle.");
    // Frame property: diagonal frames of M resolve both linking units.
    const double bound = 1e-8;
    CMatrix sum_l = CMatrix::Zero(lx.cx.ambient(), lx.cx.ambient());
    for (const auto& u : left_frame(*m))
      sum_l += diag_embed(u) * diag_embed(u).adjoint();
    rep.residual_check("frames.left_unit", "frame resolution",
                       (sum_l - lx.cx.unit).norm(), bound);
    LinkingSystem ly = linking_and_bundle(y);
    CMatrix sum_r = CMatrix::Zero(ly.cx.ambient(), ly.cx.ambient());
    for (const auto& v : right_frame(*m))
      sum_r += diag_embed(v).adjoint() * diag_embed(v);
    rep.residual_check("frames.right_unit", "frame resolution",
                       (sum_r - ly.cx.unit).norm(), bound);
    rep.check("strong_morita", "inclusion equivalence conclusion",
              rep.passed());
  } else {
    rep.skip("strong_morita", "inclusion equivalence conclusion",
             "no identification supplied; hypothesis audit only");
  }
  return rep;
}

}  // namespace oat
