#include "oat/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "oat/action.hpp"
#include "oat/basic_construction.hpp"
#include "oat/bimodule.hpp"
#include "oat/bundle.hpp"
#include "oat/equivalence_bundle.hpp"
#include "oat/errors.hpp"
#include "oat/group.hpp"
#include "oat/involutive.hpp"
#include "oat/reconstruction.hpp"
#include "oat/star_algebra.hpp"

namespace oat {

namespace {

Complex parse_scalar(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw ParseError("complex scalar must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_number()) return {j.get<double>(), 0.0};
  throw ParseError("expected a scalar");
}

CMatrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("matrix must be a non-empty nested array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols)
      throw ParseError("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c]);
  }
  return m;
}

std::vector<CMatrix> parse_matrices(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of matrices");
  std::vector<CMatrix> out;
  for (const auto& e : j) out.push_back(parse_matrix(e));
  return out;
}

struct Context {
  double tol = kDefaultTol;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, ConcreteStarAlgebra> algebras;
  std::map<std::string, GradedCStarBundle> bundles;
  std::map<std::string, ConcreteBimodule> bimodules;
  std::map<std::string, InvolutiveBimodule> involutions;

  template <typename M>
  const typename M::mapped_type& resolve(const M& m, const Json& j,
                                         const char* kind) const {
    if (!j.is_string()) throw ParseError(std::string(kind) + " reference "
                                         "must be a name");
    auto it = m.find(j.get<std::string>());
    if (it == m.end())
      throw UnresolvedReference("unknown " + std::string(kind) + " '" +
                                j.get<std::string>() + "'");
    return it->second;
  }
};

FiniteGroup parse_group(const Context& ctx, const Json& j) {
  if (j.contains("cyclic")) return FiniteGroup::cyclic(j["cyclic"].get<int>());
  if (j.contains("symmetric")) {
    if (j["symmetric"].get<int>() != 3)
      throw ParseError("only the symmetric group on three letters is built "
                       "in");
    return FiniteGroup::symmetric3();
  }
  if (j.contains("product")) {
    const auto& refs = j["product"];
    if (!refs.is_array() || refs.size() != 2)
      throw ParseError("product takes two group names");
    return FiniteGroup::direct_product(ctx.resolve(ctx.groups, refs[0],
                                                   "group"),
                                       ctx.resolve(ctx.groups, refs[1],
                                                   "group"));
  }
  if (j.contains("table")) {
    std::vector<std::vector<int>> t;
    for (const auto& row : j["table"])
      t.push_back(row.get<std::vector<int>>());
    return FiniteGroup::load(t);
  }
  throw ParseError("group stanza needs cyclic/symmetric/product/table");
}

void load_objects(Context& ctx, const Json& doc) {
  if (doc.contains("groups")) {
    // Product stanzas may reference other groups by name, in any document
    // order, so resolve in passes until nothing new can be built.
    std::map<std::string, Json> pending;
    for (const auto& [name, j] : doc["groups"].items()) pending.emplace(name, j);
    while (!pending.empty()) {
      bool progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        try {
          ctx.groups.emplace(it->first, parse_group(ctx, it->second));
          it = pending.erase(it);
          progress = true;
        } catch (const UnresolvedReference&) {
          ++it;
        }
      }
      if (!progress)
        throw UnresolvedReference("circular or unknown group reference in '" +
                                  pending.begin()->first + "'");
    }
  }
  if (doc.contains("algebras"))
    for (const auto& [name, j] : doc["algebras"].items())
      ctx.algebras.emplace(name, generate(parse_matrices(j.at("basis")),
                                          ctx.tol));
  if (doc.contains("bundles"))
    for (const auto& [name, j] : doc["bundles"].items()) {
      const FiniteGroup& g = ctx.resolve(ctx.groups, j.at("group"), "group");
      std::vector<MatSubspace> fibers;
      for (const auto& fb : j.at("fibers"))
        fibers.push_back(span(parse_matrices(fb), ctx.tol));
      ctx.bundles.emplace(name, make_bundle(g, fibers, ctx.tol));
    }
  if (doc.contains("bimodules"))
    for (const auto& [name, j] : doc["bimodules"].items()) {
      ConcreteBimodule m{
          ctx.resolve(ctx.algebras, j.at("left"), "algebra"),
          ctx.resolve(ctx.algebras, j.at("right"), "algebra"),
          span(parse_matrices(j.at("basis")), ctx.tol)};
      ctx.bimodules.emplace(name, std::move(m));
    }
  if (doc.contains("involutions"))
    for (const auto& [name, j] : doc["involutions"].items()) {
      const ConcreteBimodule& base =
          ctx.resolve(ctx.bimodules, j.at("bimodule"), "bimodule");
      std::vector<CMatrix> images;
      if (j.contains("images")) {
        images = parse_matrices(j["images"]);
      } else {
        const Complex phase =
            j.contains("phase") ? parse_scalar(j["phase"]) : Complex(1, 0);
        for (const auto& b : base.space.basis())
          images.push_back(phase * b.adjoint());
      }
      ctx.involutions.emplace(name, make_involutive(base, images));
    }
}

void run_task(Context& ctx, const Json& task, Report& out) {
  const std::string op = task.at("op").get<std::string>();
  const std::string prefix = task.value("id", op) + ".";
  Report rep;
  try {
    if (op == "verify_bundle") {
      const auto& b = ctx.resolve(ctx.bundles, task.at("bundle"), "bundle");
      rep = verify_bundle(b);
      rep.check("saturated", "saturation", is_saturated(b));
    } else if (op == "watatani_index") {
      const auto& b = ctx.resolve(ctx.bundles, task.at("bundle"), "bundle");
      QuasiBasis qb = quasi_basis_and_index(b);
      const int n = b.group.order();
      rep.residual_check(
          "watatani_index", "index of the canonical expectation",
          (qb.index - static_cast<double>(n) * b.total.unit).norm(), 1e-8,
          "watatani_index: " + std::to_string(n));
    } else if (op == "basic_construction") {
      const auto& b = ctx.resolve(ctx.bundles, task.at("bundle"), "bundle");
      BasicConstructionResult r = build_basic_construction(b);
      rep.merge(verify_basic_construction(r, b));
      auto [a1, iso] = bundle_A1_and_iso(r, b);
      rep.merge(iso, "iso.");
      rep.merge(verify_bundle(a1), "transported.");
      rep.check("transported.saturated", "saturation transfer",
                is_saturated(a1));
    } else if (op == "identity_morita") {
      const auto& b = ctx.resolve(ctx.bundles, task.at("bundle"), "bundle");
      EquivalenceBundle e = identity_equivalence_bundle(b);
      rep.merge(verify_equivalence_bundle(e));
      try {
        assemble_total(e);
        rep.check("assembled", "inclusion equivalence", true);
      } catch (const AssemblyFailure& ex) {
        rep.check("assembled", "inclusion equivalence", false, 0.0,
                  ex.what());
      }
    } else if (op == "crossed_product") {
      const auto& g = ctx.resolve(ctx.groups, task.at("group"), "group");
      const auto& m =
          ctx.resolve(ctx.bimodules, task.at("bimodule"), "bimodule");
      auto lus = parse_matrices(task.at("left_unitaries"));
      auto rus = parse_matrices(task.at("right_unitaries"));
      ActionSystem alpha = inner_action(m.left, g, lus);
      ActionSystem beta = inner_action(m.right, g, rus);
      BimoduleAction lambda = inner_bimodule_action(m, g, lus, rus);
      CrossedProductSystem sys = crossed_product_system(alpha, beta, lambda);
      rep.merge(sys.formulas, "formulas.");
      rep.merge(verify_bundle(sys.bundleA), "bundle_a.");
      rep.merge(verify_bundle(sys.bundleB), "bundle_b.");
      rep.check("bundle_a.saturated", "saturation", is_saturated(sys.bundleA));
      rep.check("bundle_b.saturated", "saturation", is_saturated(sys.bundleB));
      rep.merge(verify_equivalence_bundle(sys.bundle), "equivalence.");
      try {
        assemble_total(sys.bundle);
        rep.check("assembled", "inclusion equivalence", true);
      } catch (const AssemblyFailure& ex) {
        rep.check("assembled", "inclusion equivalence", false, 0.0,
                  ex.what());
      }
    } else if (op == "verify_involutive") {
      const auto& x =
          ctx.resolve(ctx.involutions, task.at("involution"), "involution");
      rep = verify_involutive(x);
      const bool expect = task.value("expect_pass", true);
      if (!expect) {
        Report flipped;
        flipped.check("expected_failure", "negative control", !rep.passed(),
                      0.0, "the supplied involution must fail its checks");
        rep = flipped;
      }
    } else if (op == "linking") {
      const auto& x =
          ctx.resolve(ctx.involutions, task.at("involution"), "involution");
      LinkingSystem ls = linking_and_bundle(x);
      rep.merge(verify_bundle(ls.z2bundle), "bundle.");
      const bool full = verify_bimodule(x.base, true).passed();
      rep.check("fullness_matches_saturation", "saturation correspondence",
                full == is_saturated(ls.z2bundle));
    } else if (op == "involutive_pipeline") {
      const auto& x =
          ctx.resolve(ctx.involutions, task.at("involution"), "involution");
      const auto& m =
          ctx.resolve(ctx.bimodules, task.at("bimodule"), "bimodule");
      InvolutiveBimodule y = transport(m, x);
      SpaceMap phi{y.base.space, y.base.space,
                   CMatrix::Identity(y.base.space.dim(), y.base.space.dim())};
      rep.merge(involutive_equivalence_check(x.base.left, x, m.right, y, &m, &phi));
    } else if (op == "cm_roundtrip") {
      const auto& x =
          ctx.resolve(ctx.involutions, task.at("involution"), "involution");
      const auto& m =
          ctx.resolve(ctx.bimodules, task.at("bimodule"), "bimodule");
      InvolutiveBimodule y = transport(m, x);
      SpaceMap phi{y.base.space, y.base.space,
                   CMatrix::Identity(y.base.space.dim(), y.base.space.dim())};
      rep.merge(psi_theta_check(m, x, y, phi), "identification.");
      CMResult cm = build_C_M(m, x, y, phi);
      rep.merge(verify_equivalence_bundle(cm.bundle), "linking_bundle.");
      rep.merge(check_inclusion_morita(cm.datum), "linking_morita.");
      auto [m2, phi2] = extract_morita(cm.bundle);
      InvolutiveBimodule x2 = bundle_to_involutive(cm.bundle.bundleA);
      InvolutiveBimodule y2 = bundle_to_involutive(cm.bundle.bundleB);
      rep.merge(psi_theta_check(m2, x2, y2, phi2), "extracted.");
    } else if (op == "reconstruction") {
      const auto& a = ctx.resolve(ctx.bundles, task.at("bundle"), "bundle");
      GradedCStarBundle b = a;
      if (task.contains("bundle_b"))
        b = ctx.resolve(ctx.bundles, task["bundle_b"], "bundle");
      if (task.contains("relabel")) {
        Perm h = task["relabel"].get<Perm>();
        std::vector<MatSubspace> fibers;
        for (int t = 0; t < a.group.order(); ++t)
          fibers.push_back(a.fibers[h[t]]);
        b = make_bundle(a.group, fibers, ctx.tol);
      }
      BasicConstructionResult bcA = build_basic_construction(a);
      BasicConstructionResult bcB = build_basic_construction(b);
      ZFactory factory = [&](const Perm& f) {
        return roundtrip_data(a, b, bcA, bcB, f);
      };
      if (task.value("expect_failure", false)) {
        try {
          search_automorphism(a, b, factory);
          rep.check("no_candidate", "exhaustive search", false, 0.0,
                    "a candidate unexpectedly verified");
        } catch (const NoAutomorphismFound&) {
          rep.check("no_candidate", "exhaustive search", true, 0.0,
                    "all candidates rejected as expected");
        }
      } else {
        SearchResult found = search_automorphism(a, b, factory);
        std::ostringstream f_str;
        for (int v : found.f) f_str << v << " ";
        rep.check("found", "exhaustive search", true, 0.0,
                  "automorphism: " + f_str.str());
        if (task.contains("expect"))
          rep.check("expected_automorphism", "exhaustive search",
                    found.f == task["expect"].get<Perm>());
        rep.merge(verify_equivalence_bundle(found.bundle), "bundle.");
        rep.merge(verify_fiber_inner_products(found.bundle, found.f),
                  "conclusion.");
      }
    } else {
      throw ParseError("unknown task op '" + op + "'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const UnresolvedReference&) {
    throw;
  } catch (const Error& ex) {
    rep.check("error", "task execution", false, 0.0, ex.what());
  }
  out.merge(rep, prefix);
}

}  // namespace

Report run_scenario_json(const Json& doc, double tol_override) {
  if (!doc.is_object()) throw ParseError("scenario document must be an "
                                         "object");
  Context ctx;
  ctx.tol = doc.value("tol", kDefaultTol);
  if (tol_override > 0) ctx.tol = tol_override;
  load_objects(ctx, doc);
  Report out;
  if (doc.contains("tasks"))
    for (const auto& task : doc["tasks"]) run_task(ctx, task, out);
  return out;
}

Report run_scenario_file(const std::string& path, double tol_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("invalid scenario file: ") + ex.what());
  }
  return run_scenario_json(doc, tol_override);
}

Report filter_report(const Report& rep, const std::string& prefix) {
  if (prefix.empty()) return rep;
  Report out;
  for (const auto& r : rep.records())
    if (r.id.rfind(prefix, 0) == 0) out.add(r);
  return out;
}

Json report_to_json(const Report& rep, double tol) {
  Json checks = Json::array();
  for (const auto& r : rep.sorted_records())
    checks.push_back({{"id", r.id},
                      {"anchor", r.anchor},
                      {"status", to_string(r.status)},
                      {"residual", r.residual},
                      {"message", r.message}});
  return Json{{"tol", tol},
              {"overall", rep.passed() ? "pass" : "fail"},
              {"checks", checks}};
}

std::string report_text(const Report& rep, const std::string& check_filter) {
  Report shown = filter_report(rep, check_filter);
  std::ostringstream out;
  for (const auto& r : shown.sorted_records()) {
    out << "[" << to_string(r.status) << "] " << r.id;
    if (r.residual != 0.0) out << " residual=" << r.residual;
    if (!r.message.empty()) out << " -- " << r.message;
    out << "\n";
  }
  out << shown.summary() << "\n";
  return out.str();
}

}  // namespace oat
