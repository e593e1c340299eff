#include "oat/equivalence_bundle.hpp"

#include <string>

#include "oat/errors.hpp"
#include "oat/parallel.hpp"

namespace oat {

Report verify_equivalence_bundle(const EquivalenceBundle& e) {
  Report rep;
  const int n = e.bundleA.group.order();
  if (e.bundleB.group.order() != n)
    throw ShapeMismatch("bundles live over groups of different order");
  if (static_cast<int>(e.fibers.size()) != n)
    throw ShapeMismatch("one bimodule fiber per group element required");
  const auto& g = e.bundleA.group;

  // Linear independence of the bimodule fibers.
  Eigen::Index dim_sum = 0;
  MatSubspace joint(e.fibers.front().rows(), e.fibers.front().cols(), e.tol());
  for (const auto& f : e.fibers) {
    dim_sum += f.dim();
    joint.absorb(f.basis());
  }
  rep.check("fibers.independent", "bimodule grading", joint.dim() == dim_sum,
            static_cast<double>(dim_sum - joint.dim()));

  // One record per (condition, t, s), evaluated in parallel but assembled in
  // key order.
  struct Cell {
    bool left_mod, right_mod, left_full, right_full;
  };
  std::vector<Cell> cells(n * n);
  parallel_for(cells.size(), [&](std::size_t idx) {
    const int t = static_cast<int>(idx) / n;
    const int s = static_cast<int>(idx) % n;
    Cell c;
    c.left_mod = e.fibers[g.mul(t, s)].contains(
        e.bundleA.fibers[t].product_span(e.fibers[s]));
    c.right_mod = e.fibers[g.mul(t, s)].contains(
        e.fibers[t].product_span(e.bundleB.fibers[s]));
    c.left_full = e.fibers[t]
                      .product_span(e.fibers[s].adjoint_span())
                      .equals(e.bundleA.fibers[g.mul(t, g.inv(s))]);
    c.right_full = e.fibers[t]
                       .adjoint_span()
                       .product_span(e.fibers[s])
                       .equals(e.bundleB.fibers[g.mul(g.inv(t), s)]);
    cells[idx] = c;
  });
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      const auto& c = cells[t * n + s];
      const std::string ts =
          ".t" + std::to_string(t) + ".s" + std::to_string(s);
      rep.check("left_module" + ts, "module action grading", c.left_mod);
      rep.check("right_module" + ts, "module action grading", c.right_mod);
      rep.check("left_fullness" + ts, "fiberwise fullness", c.left_full);
      rep.check("right_fullness" + ts, "fiberwise fullness", c.right_full);
    }
  // dim X_t is constant (consequence of fullness, asserted directly).
  for (int t = 0; t < n; ++t)
    rep.check("fiber_dim.t" + std::to_string(t), "fiber dimensions",
              e.fibers[t].dim() == e.fibers[g.identity()].dim());
  return rep;
}

InclusionMoritaDatum assemble_total(const EquivalenceBundle& e) {
  MatSubspace y(e.fibers.front().rows(), e.fibers.front().cols(), e.tol());
  for (const auto& f : e.fibers) y.absorb(f.basis());
  InclusionMoritaDatum d{
      ConcreteBimodule{e.bundleA.total, e.bundleB.total, y},
      e.fibers[e.bundleA.group.identity()],
      e.bundleA.fiber_algebra,
      e.bundleB.fiber_algebra};
  Report rep = check_inclusion_morita(d);
  rep.merge(verify_bimodule(d.big, true), "big.");
  if (!rep.passed())
    throw AssemblyFailure("assembled bimodule fails the inclusion checks: " +
                          rep.summary());
  return d;
}

EquivalenceBundle identity_equivalence_bundle(const GradedCStarBundle& b) {
  return {b, b, b.fibers};
}

namespace {

// Block-diagonal covariant representation: block t carries map_{t^-1}(x).
CMatrix rep_block_diag(const FiniteGroup& g,
                       const std::function<CMatrix(int, const CMatrix&)>& act,
                       const CMatrix& x) {
  const int n = g.order();
  CMatrix out = CMatrix::Zero(n * x.rows(), n * x.cols());
  for (int t = 0; t < n; ++t)
    out.block(t * x.rows(), t * x.cols(), x.rows(), x.cols()) =
        act(g.inv(t), x);
  return out;
}

// Translation (Lambda_s xi)(t) = xi(s^-1 t) on blocks of size d.
CMatrix translation(const FiniteGroup& g, int s, Eigen::Index d) {
  const int n = g.order();
  CMatrix out = CMatrix::Zero(n * d, n * d);
  for (int t = 0; t < n; ++t)
    out.block(t * d, g.mul(g.inv(s), t) * d, d, d) =
        CMatrix::Identity(d, d);
  return out;
}

}  // namespace

CrossedProductSystem crossed_product_system(const ActionSystem& alpha,
                                            const ActionSystem& beta,
                                            const BimoduleAction& lambda) {
  const FiniteGroup& g = alpha.group;
  if (beta.group.table() != g.table() || lambda.group.table() != g.table())
    throw IncompatibleActions("actions live over different groups");
  if (!lambda.left.algebra.space.equals(alpha.algebra.space) ||
      !lambda.right.algebra.space.equals(beta.algebra.space))
    throw IncompatibleActions("module action algebras do not match");
  for (int t = 0; t < g.order(); ++t)
    if ((lambda.left.maps[t] - alpha.maps[t]).norm() > 1e-8 ||
        (lambda.right.maps[t] - beta.maps[t]).norm() > 1e-8)
      throw IncompatibleActions("module action is not covariant for the "
                                "supplied algebra actions");
  if (!verify_bimodule_action(lambda).passed())
    throw IncompatibleActions("module action fails its covariance checks");

  const double tol = alpha.algebra.tol();
  const Eigen::Index na = alpha.algebra.ambient();
  const Eigen::Index nb = beta.algebra.ambient();
  auto act_a = [&](int t, const CMatrix& x) { return alpha.apply(t, x); };
  auto act_b = [&](int t, const CMatrix& x) { return beta.apply(t, x); };
  auto act_x = [&](int t, const CMatrix& x) { return lambda.apply(t, x); };
  auto pi_a = [&](const CMatrix& a) { return rep_block_diag(g, act_a, a); };
  auto pi_b = [&](const CMatrix& b) { return rep_block_diag(g, act_b, b); };
  auto pi_x = [&](const CMatrix& x) { return rep_block_diag(g, act_x, x); };

  std::vector<MatSubspace> fib_a, fib_b, fib_x;
  for (int t = 0; t < g.order(); ++t) {
    const CMatrix la = translation(g, t, na);
    const CMatrix lb = translation(g, t, nb);
    std::vector<CMatrix> ba, bb, bx;
    for (const auto& a : alpha.algebra.space.basis()) ba.push_back(pi_a(a) * la);
    for (const auto& b : beta.algebra.space.basis()) bb.push_back(pi_b(b) * lb);
    for (const auto& x : lambda.bimodule.space.basis())
      bx.push_back(pi_x(x) * lb);
    fib_a.push_back(span(ba, tol));
    fib_b.push_back(span(bb, tol));
    fib_x.push_back(span(bx, tol));
  }
  CrossedProductSystem out{make_bundle(g, fib_a, tol),
                           make_bundle(g, fib_b, tol),
                           {},
                           {}};
  out.bundle = EquivalenceBundle{out.bundleA, out.bundleB, fib_x};

  // The four displayed covariance formulas, on full spanning sets.
  Report& rep = out.formulas;
  const double bound = 1e-8;
  for (int t = 0; t < g.order(); ++t)
    for (int s = 0; s < g.order(); ++s) {
      const std::string ts =
          ".t" + std::to_string(t) + ".s" + std::to_string(s);
      const CMatrix la_s = translation(g, s, na);
      const CMatrix lb_t = translation(g, t, nb);
      const CMatrix lb_s = translation(g, s, nb);
      double f1 = 0, f2 = 0, f3 = 0, f4 = 0;
      for (const auto& x : lambda.bimodule.space.basis()) {
        for (const auto& a : alpha.algebra.space.basis())
          f1 = std::max(f1, (pi_a(a) * la_s * pi_x(x) * lb_t -
                             pi_x(a * lambda.apply(s, x)) *
                                 translation(g, g.mul(s, t), nb))
                                .norm());
        for (const auto& b : beta.algebra.space.basis())
          f2 = std::max(f2, (pi_x(x) * lb_t * pi_b(b) * lb_s -
                             pi_x(x * beta.apply(t, b)) *
                                 translation(g, g.mul(t, s), nb))
                                .norm());
        for (const auto& y : lambda.bimodule.space.basis()) {
          const int g1 = g.mul(t, g.inv(s));
          f3 = std::max(
              f3, ((pi_x(x) * lb_t) * (pi_x(y) * lb_s).adjoint() -
                   pi_a(x * lambda.apply(g1, y).adjoint()) *
                       translation(g, g1, na))
                      .norm());
          const int g2 = g.mul(g.inv(t), s);
          f4 = std::max(
              f4, ((pi_x(x) * lb_t).adjoint() * (pi_x(y) * lb_s) -
                   pi_b(beta.apply(g.inv(t), x.adjoint() * y)) *
                       translation(g, g2, nb))
                      .norm());
        }
      }
      rep.residual_check("left_action" + ts, "crossed-product left action",
                         f1, bound);
      rep.residual_check("right_action" + ts, "crossed-product right action",
                         f2, bound);
      rep.residual_check("left_inner" + ts, "crossed-product left inner "
                         "product", f3, bound);
      rep.residual_check("right_inner" + ts, "crossed-product right inner "
                         "product", f4, bound);
    }
  return out;
}

}  // namespace oat
