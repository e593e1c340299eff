#include "oat/reconstruction.hpp"

#include <string>

#include "oat/errors.hpp"

namespace oat {

CMatrix ReconstructionData::lambda(int t, const CMatrix& x) const {
  return z.space.from_coordinates(lambda_maps[t] * z.space.coordinates(x));
}

CMatrix ReconstructionData::beta(int t, const CMatrix& x) const {
  return bcB.action.apply(f[t], x);
}

namespace {

void check_covariance(const ReconstructionData& in) {
  const FiniteGroup& g = in.bundleA.group;
  const double bound = 1e-8;
  for (int t = 0; t < g.order(); ++t) {
    for (const auto& zb : in.z.space.basis()) {
      for (const auto& wb : in.z.space.basis()) {
        const CMatrix lhs = in.lambda(t, zb) * in.lambda(t, wb).adjoint();
        const CMatrix rhs = in.bcA.action.apply(t, zb * wb.adjoint());
        if ((lhs - rhs).norm() > bound)
          throw CovarianceViolation(
              "inner-product covariance fails at element " +
              std::to_string(t));
      }
      for (const auto& c : in.bcA.c1.space.basis())
        for (const auto& d : in.bcB.c1.space.basis()) {
          const CMatrix lhs = in.lambda(t, c * zb * d);
          const CMatrix rhs =
              in.bcA.action.apply(t, c) * in.lambda(t, zb) * in.beta(t, d);
          if ((lhs - rhs).norm() > bound)
            throw CovarianceViolation(
                "module covariance fails at element " + std::to_string(t));
        }
    }
    // Composition per the Cayley table.
    for (int s = 0; s < g.order(); ++s)
      if ((in.lambda_maps[s] * in.lambda_maps[t] -
           in.lambda_maps[g.mul(s, t)])
              .norm() > bound)
        throw CovarianceViolation("module action does not compose per the "
                                  "group law");
  }
}

}  // namespace

EquivalenceBundle build_Z_bundle(const ReconstructionData& in) {
  const FiniteGroup& g = in.bundleA.group;
  if (in.bundleB.group.table() != g.table())
    throw CovarianceViolation("bundles live over different groups");
  if (!is_automorphism(g, in.f))
    throw CovarianceViolation("candidate map is not a group automorphism");
  if (static_cast<int>(in.lambda_maps.size()) != g.order())
    throw CovarianceViolation("one module action map per element required");
  check_covariance(in);

  const double tol = in.bundleA.tol();
  auto lam = [&](int t, const CMatrix& x) { return in.lambda(t, x); };

  // Raw fibers Z_t = e_A Z beta_t(e_B) and their block transports.
  std::vector<MatSubspace> raw, fibers;
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix pb = in.beta(t, in.bcB.jones);
    std::vector<CMatrix> basis;
    for (const auto& zb : in.z.space.basis())
      basis.push_back(in.bcA.jones * zb * pb);
    MatSubspace rt = span(basis, tol);
    if (rt.dim() == 0)
      throw EmptyFiber("fiber at element " + std::to_string(t) + " is zero");
    std::vector<CMatrix> blocks;
    for (const auto& x : rt.basis())
      blocks.push_back(transport_block(g, t, x, lam));
    raw.push_back(std::move(rt));
    fibers.push_back(span(blocks, tol));
  }

  // A side: Y_t = e_A c1 e_{t^-1} transported along the A-side action.
  std::vector<MatSubspace> raw_a;
  for (int t = 0; t < g.order(); ++t) {
    std::vector<CMatrix> basis;
    for (const auto& m : in.bcA.c1.space.basis())
      basis.push_back(in.bcA.jones * m * in.bcA.e_proj[g.inv(t)]);
    raw_a.push_back(span(basis, tol));
  }
  GradedCStarBundle a1 = transported_bundle(g, raw_a, in.bcA.action, tol);

  // B side, relabeled through f: W_t = e_B c1 beta_t(e_B), transported along
  // beta.
  ActionSystem beta_sys{in.bcB.c1, g, {}};
  for (int t = 0; t < g.order(); ++t)
    beta_sys.maps.push_back(in.bcB.action.maps[in.f[t]]);
  std::vector<MatSubspace> raw_b;
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix pb = in.beta(t, in.bcB.jones);
    std::vector<CMatrix> basis;
    for (const auto& m : in.bcB.c1.space.basis())
      basis.push_back(in.bcB.jones * m * pb);
    raw_b.push_back(span(basis, tol));
  }
  GradedCStarBundle b1 = transported_bundle(g, raw_b, beta_sys, tol);

  return {std::move(a1), std::move(b1), std::move(fibers)};
}

Report verify_fiber_inner_products(const EquivalenceBundle& e, const Perm& f) {
  Report rep;
  const FiniteGroup& g = e.bundleA.group;
  for (int t = 0; t < g.order(); ++t)
    for (int s = 0; s < g.order(); ++s) {
      const std::string ts =
          ".t" + std::to_string(t) + ".s" + std::to_string(s);
      rep.check("left_products" + ts, "fiberwise left inner products",
                e.fibers[t]
                    .product_span(e.fibers[s].adjoint_span())
                    .equals(e.bundleA.fibers[g.mul(t, g.inv(s))]));
      rep.check("right_products" + ts,
                "fiberwise right inner products (relabeled at f(" +
                    std::to_string(g.mul(g.inv(t), s)) + ") = " +
                    std::to_string(f[g.mul(g.inv(t), s)]) + ")",
                e.fibers[t]
                    .adjoint_span()
                    .product_span(e.fibers[s])
                    .equals(e.bundleB.fibers[g.mul(g.inv(t), s)]));
    }
  return rep;
}

SearchResult search_automorphism(const GradedCStarBundle& bundleA,
                                 const GradedCStarBundle& bundleB,
                                 const ZFactory& factory) {
  if (bundleB.group.table() != bundleA.group.table())
    throw NoAutomorphismFound("bundles live over different groups");
  for (const Perm& f : automorphisms(bundleA.group)) {
    try {
      ReconstructionData data = factory(f);
      EquivalenceBundle e = build_Z_bundle(data);
      if (verify_equivalence_bundle(e).passed() &&
          verify_fiber_inner_products(e, f).passed())
        return {f, std::move(e)};
    } catch (const Error&) {
      // Candidate rejected; keep searching in order.
    }
  }
  throw NoAutomorphismFound("no group automorphism admits a verified "
                            "equivalence bundle for the given inputs");
}

ReconstructionData roundtrip_data(const GradedCStarBundle& bundleA,
                                  const GradedCStarBundle& bundleB,
                                  const BasicConstructionResult& bcA,
                                  const BasicConstructionResult& bcB,
                                  const Perm& f) {
  if (bcA.dim != bcB.dim)
    throw ShapeMismatch("representation dimensions differ");
  // Change of basis between the two adapted bases (both orthonormal for the
  // shared trace form on the common total algebra).
  CMatrix p(bcA.dim, bcB.dim);
  for (Eigen::Index j = 0; j < bcA.dim; ++j)
    for (Eigen::Index k = 0; k < bcB.dim; ++k)
      p(j, k) =
          canonical_expectation(bundleA, bcA.adapted[j].adjoint() *
                                             bcB.adapted[k])
              .trace();
  if ((p * p.adjoint() - CMatrix::Identity(bcA.dim, bcA.dim)).norm() > 1e-8)
    throw ShapeMismatch("the two total algebras do not share a trace form");

  std::vector<CMatrix> basis;
  for (const auto& m : bcA.c1.space.basis()) basis.push_back(m * p);
  MatSubspace zspace = span(basis, bundleA.tol());
  ReconstructionData out{bundleA, bundleB, bcA, bcB, f,
                         ConcreteBimodule{bcA.c1, bcB.c1, zspace},
                         {}};
  const FiniteGroup& g = bundleA.group;
  for (int t = 0; t < g.order(); ++t) {
    const Eigen::Index dz = zspace.dim();
    CMatrix m(dz, dz);
    for (Eigen::Index k = 0; k < dz; ++k) {
      const CMatrix img =
          bcA.action.apply(t, zspace.basis()[k] * p.adjoint()) * p;
      m.col(k) = zspace.coordinates(img);
    }
    out.lambda_maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace oat
