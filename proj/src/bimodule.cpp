#include "oat/bimodule.hpp"

#include <random>

#include "oat/errors.hpp"

namespace oat {

Report verify_bimodule(const ConcreteBimodule& x, bool require_full) {
  Report rep;
  const auto& s = x.space;
  const double bound = 1e3 * x.tol();

  rep.check("left_action", "module actions",
            s.contains(x.left.space.product_span(s)), 0.0,
            "A X inside X");
  rep.check("right_action", "module actions",
            s.contains(s.product_span(x.right.space)), 0.0,
            "X B inside X");
  rep.check("left_inner", "inner products",
            x.left.space.contains(s.product_span(s.adjoint_span())), 0.0,
            "X X^* inside A");
  rep.check("right_inner", "inner products",
            x.right.space.contains(s.adjoint_span().product_span(s)), 0.0,
            "X^* X inside B");
  double unit_res = 0.0;
  for (const auto& b : s.basis()) {
    unit_res = std::max(unit_res, (x.left.unit * b - b).norm());
    unit_res = std::max(unit_res, (b * x.right.unit - b).norm());
  }
  rep.residual_check("unit_action", "unit compatibility", unit_res, bound);
  if (require_full) {
    rep.check("left_full", "fullness",
              s.product_span(s.adjoint_span()).equals(x.left.space));
    rep.check("right_full", "fullness",
              s.adjoint_span().product_span(s).equals(x.right.space));
  }
  return rep;
}

ConcreteBimodule dual(const ConcreteBimodule& x) {
  return {x.right, x.left, x.space.adjoint_span()};
}

ConcreteBimodule tensor(const ConcreteBimodule& x, const ConcreteBimodule& y) {
  if (x.right.ambient() != y.left.ambient() ||
      !x.right.space.equals(y.left.space))
    throw MiddleAlgebraMismatch("middle algebras differ in tensor product");
  return {x.left, y.right, x.space.product_span(y.space)};
}

Report check_inclusion_morita(const InclusionMoritaDatum& d) {
  Report rep;
  // X as an A-B bimodule must be a full equivalence bimodule.
  ConcreteBimodule small{d.small_left, d.small_right, d.small_space};
  rep.merge(verify_bimodule(small, true), "small.");
  rep.check("small.inside_big", "inclusion data",
            d.big.space.contains(d.small_space));
  // Span of <Y, X> on both sides must recover C and D.
  rep.check("span_YXstar_is_C", "inclusion Morita condition",
            d.big.space.product_span(d.small_space.adjoint_span())
                .equals(d.big.left.space));
  rep.check("span_YstarX_is_D", "inclusion Morita condition",
            d.big.space.adjoint_span().product_span(d.small_space)
                .equals(d.big.right.space));
  return rep;
}

namespace {

// Deterministic unitary on k coordinates; seed 0 is the identity.
CMatrix coordinate_unitary(Eigen::Index k, unsigned seed) {
  if (seed == 0) return CMatrix::Identity(k, k);
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  CMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(k, k);
}

}  // namespace

std::vector<CMatrix> left_frame(const ConcreteBimodule& x, unsigned seed) {
  const auto& basis = x.space.basis();
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  CMatrix u = coordinate_unitary(k, seed);
  std::vector<CMatrix> rotated;
  for (Eigen::Index i = 0; i < k; ++i) {
    CMatrix m = CMatrix::Zero(x.space.rows(), x.space.cols());
    for (Eigen::Index j = 0; j < k; ++j) m += u(i, j) * basis[j];
    rotated.push_back(std::move(m));
  }
  CMatrix s = CMatrix::Zero(x.left.ambient(), x.left.ambient());
  for (const auto& m : rotated) s += m * m.adjoint();
  CMatrix p = inv_sqrt(s, x.left.unit, x.tol());
  std::vector<CMatrix> frame;
  for (const auto& m : rotated) frame.push_back(p * m);
  return frame;
}

std::vector<CMatrix> right_frame(const ConcreteBimodule& x, unsigned seed) {
  ConcreteBimodule d = dual(x);
  auto frame = left_frame(d, seed);
  for (auto& f : frame) f = f.adjoint().eval();
  return frame;
}

}  // namespace oat
