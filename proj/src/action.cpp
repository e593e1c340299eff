#include "oat/action.hpp"

#include "oat/errors.hpp"

namespace oat {

namespace {

// Coordinate matrix of a linear map given by its images of the orthonormal
// basis; throws when an image leaves the space.
CMatrix coordinate_matrix(const MatSubspace& space,
                          const std::vector<CMatrix>& images) {
  const Eigen::Index d = space.dim();
  if (static_cast<Eigen::Index>(images.size()) != d)
    throw ShapeMismatch("one image per basis vector required");
  CMatrix m(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (!space.contains(images[k]))
      throw Error("map image leaves the space");
    m.col(k) = space.coordinates(images[k]);
  }
  return m;
}

CMatrix apply_in(const MatSubspace& space, const CMatrix& coord_map,
                 const CMatrix& x) {
  return space.from_coordinates(coord_map * space.coordinates(x));
}

}  // namespace

CMatrix ActionSystem::apply(int t, const CMatrix& x) const {
  return apply_in(algebra.space, maps[t], x);
}

CMatrix BimoduleAction::apply(int t, const CMatrix& x) const {
  return apply_in(bimodule.space, maps[t], x);
}

Report verify_action(const ActionSystem& a) {
  Report rep;
  const int n = a.group.order();
  const double bound = 1e3 * a.algebra.tol();
  const Eigen::Index d = a.algebra.space.dim();
  rep.check("map_count", "action data",
            static_cast<int>(a.maps.size()) == n);
  if (static_cast<int>(a.maps.size()) != n) return rep;

  rep.residual_check("identity_element", "action axioms",
                     (a.maps[a.group.identity()] - CMatrix::Identity(d, d))
                         .norm(),
                     bound);
  for (int t = 0; t < n; ++t) {
    const std::string st = std::to_string(t);
    double mult = 0.0, adj = 0.0;
    for (const auto& b : a.algebra.space.basis()) {
      adj = std::max(adj,
                     (a.apply(t, b.adjoint()) - a.apply(t, b).adjoint()).norm());
      for (const auto& c : a.algebra.space.basis())
        mult = std::max(mult,
                        (a.apply(t, b * c) - a.apply(t, b) * a.apply(t, c))
                            .norm());
    }
    rep.residual_check("multiplicative.t" + st, "automorphism axioms", mult,
                       bound);
    rep.residual_check("star.t" + st, "automorphism axioms", adj, bound);
    rep.residual_check("unital.t" + st, "automorphism axioms",
                       (a.apply(t, a.algebra.unit) - a.algebra.unit).norm(),
                       bound);
    for (int s = 0; s < n; ++s)
      rep.residual_check(
          "compose.s" + std::to_string(s) + ".t" + st, "group law",
          (a.maps[s] * a.maps[t] - a.maps[a.group.mul(s, t)]).norm(), bound);
  }
  return rep;
}

ActionSystem inner_action(const ConcreteStarAlgebra& algebra,
                          const FiniteGroup& group,
                          const std::vector<CMatrix>& unitaries) {
  if (static_cast<int>(unitaries.size()) != group.order())
    throw ShapeMismatch("one unitary per group element required");
  ActionSystem out{algebra, group, {}};
  for (int t = 0; t < group.order(); ++t) {
    std::vector<CMatrix> images;
    for (const auto& b : algebra.space.basis())
      images.push_back(unitaries[t] * b * unitaries[t].adjoint());
    out.maps.push_back(coordinate_matrix(algebra.space, images));
  }
  return out;
}

ActionSystem trivial_action(const ConcreteStarAlgebra& algebra,
                            const FiniteGroup& group) {
  const Eigen::Index d = algebra.space.dim();
  ActionSystem out{algebra, group, {}};
  for (int t = 0; t < group.order(); ++t)
    out.maps.push_back(CMatrix::Identity(d, d));
  return out;
}

ActionSystem action_from_maps(
    const ConcreteStarAlgebra& algebra, const FiniteGroup& group,
    const std::vector<std::vector<CMatrix>>& basis_images) {
  if (static_cast<int>(basis_images.size()) != group.order())
    throw ShapeMismatch("one image family per group element required");
  ActionSystem out{algebra, group, {}};
  for (const auto& images : basis_images)
    out.maps.push_back(coordinate_matrix(algebra.space, images));
  return out;
}

Report verify_bimodule_action(const BimoduleAction& a) {
  Report rep;
  const int n = a.group.order();
  const double bound = 1e3 * a.bimodule.tol();
  const Eigen::Index d = a.bimodule.space.dim();
  rep.check("map_count", "action data",
            static_cast<int>(a.maps.size()) == n);
  if (static_cast<int>(a.maps.size()) != n) return rep;
  rep.merge(verify_action(a.left), "left.");
  rep.merge(verify_action(a.right), "right.");
  rep.residual_check("identity_element", "action axioms",
                     (a.maps[a.group.identity()] - CMatrix::Identity(d, d))
                         .norm(),
                     bound);
  for (int t = 0; t < n; ++t) {
    const std::string st = std::to_string(t);
    double cov = 0.0, left_ip = 0.0, right_ip = 0.0;
    for (const auto& x : a.bimodule.space.basis()) {
      for (const auto& ab : a.left.algebra.space.basis())
        for (const auto& bb : a.right.algebra.space.basis())
          cov = std::max(cov, (a.apply(t, ab * x * bb) -
                               a.left.apply(t, ab) * a.apply(t, x) *
                                   a.right.apply(t, bb))
                                  .norm());
      for (const auto& y : a.bimodule.space.basis()) {
        left_ip = std::max(
            left_ip, (a.apply(t, x) * a.apply(t, y).adjoint() -
                      a.left.apply(t, x * y.adjoint()))
                         .norm());
        right_ip = std::max(
            right_ip, (a.apply(t, x).adjoint() * a.apply(t, y) -
                       a.right.apply(t, x.adjoint() * y))
                          .norm());
      }
    }
    rep.residual_check("covariance.t" + st, "module covariance", cov, bound);
    rep.residual_check("left_inner.t" + st, "inner-product covariance",
                       left_ip, bound);
    rep.residual_check("right_inner.t" + st, "inner-product covariance",
                       right_ip, bound);
    for (int s = 0; s < n; ++s)
      rep.residual_check(
          "compose.s" + std::to_string(s) + ".t" + st, "group law",
          (a.maps[s] * a.maps[t] - a.maps[a.group.mul(s, t)]).norm(), bound);
  }
  return rep;
}

BimoduleAction inner_bimodule_action(
    const ConcreteBimodule& bimodule, const FiniteGroup& group,
    const std::vector<CMatrix>& left_unitaries,
    const std::vector<CMatrix>& right_unitaries) {
  BimoduleAction out{bimodule, group, {},
                     inner_action(bimodule.left, group, left_unitaries),
                     inner_action(bimodule.right, group, right_unitaries)};
  for (int t = 0; t < group.order(); ++t) {
    std::vector<CMatrix> images;
    for (const auto& b : bimodule.space.basis())
      images.push_back(left_unitaries[t] * b * right_unitaries[t].adjoint());
    const Eigen::Index d = bimodule.space.dim();
    CMatrix m(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
      if (!bimodule.space.contains(images[k]))
        throw Error("bimodule action image leaves the space");
      m.col(k) = bimodule.space.coordinates(images[k]);
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace oat
