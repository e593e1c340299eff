#include "oat/demos.hpp"

#include "oat/bundle.hpp"
#include "oat/errors.hpp"
#include "oat/group.hpp"

namespace oat {

namespace {

Json json_matrix(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

Json json_basis(const std::vector<CMatrix>& basis) {
  Json out = Json::array();
  for (const auto& b : basis) out.push_back(json_matrix(b));
  return out;
}

Json json_fibers(const GradedCStarBundle& b) {
  Json out = Json::array();
  for (const auto& f : b.fibers) out.push_back(json_basis(f.basis()));
  return out;
}

Json m2_basis() {
  std::vector<CMatrix> basis;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) basis.push_back(matrix_unit(2, 2, i, j));
  return json_basis(basis);
}

Json group_algebra_demo(int n) {
  auto g = FiniteGroup::cyclic(n);
  GradedCStarBundle b = group_algebra_bundle(g);
  return Json{
      {"groups", {{"g", {{"cyclic", n}}}}},
      {"bundles", {{"c", {{"group", "g"}, {"fibers", json_fibers(b)}}}}},
      {"tasks",
       Json::array({{{"op", "verify_bundle"}, {"bundle", "c"}},
                    {{"op", "watatani_index"}, {"bundle", "c"}},
                    {{"op", "basic_construction"}, {"bundle", "c"}},
                    {{"op", "identity_morita"}, {"bundle", "c"}}})}};
}

Json pauli_demo() {
  GradedCStarBundle b = pauli_bundle();
  return Json{
      {"groups",
       {{"z2", {{"cyclic", 2}}},
        {"g", {{"product", Json::array({"z2", "z2"})}}}}},
      {"bundles", {{"c", {{"group", "g"}, {"fibers", json_fibers(b)}}}}},
      {"tasks",
       Json::array({{{"op", "verify_bundle"}, {"bundle", "c"}},
                    {{"op", "watatani_index"}, {"bundle", "c"}},
                    {{"op", "basic_construction"}, {"bundle", "c"}},
                    {{"op", "identity_morita"}, {"bundle", "c"}}})}};
}

Json inner_crossed_product_demo() {
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix u(2, 2);
  u << 1, 0, 0, -1;
  Json unitaries = Json::array({json_matrix(id), json_matrix(u)});
  return Json{
      {"groups", {{"g", {{"cyclic", 2}}}}},
      {"algebras", {{"m2", {{"basis", m2_basis()}}}}},
      {"bimodules",
       {{"x", {{"left", "m2"}, {"right", "m2"}, {"basis", m2_basis()}}}}},
      {"tasks", Json::array({{{"op", "crossed_product"},
                              {"group", "g"},
                              {"bimodule", "x"},
                              {"left_unitaries", unitaries},
                              {"right_unitaries", unitaries}}})}};
}

Json involutive_m2_demo() {
  return Json{
      {"algebras", {{"m2", {{"basis", m2_basis()}}}}},
      {"bimodules",
       {{"x", {{"left", "m2"}, {"right", "m2"}, {"basis", m2_basis()}}},
        {"m", {{"left", "m2"}, {"right", "m2"}, {"basis", m2_basis()}}}}},
      {"involutions",
       {{"star", {{"bimodule", "x"}}},
        {"phase", {{"bimodule", "x"}, {"phase", Json::array({0.0, 1.0})}}},
        {"doubled", {{"bimodule", "x"}, {"phase", 2.0}}}}},
      {"tasks",
       Json::array({{{"op", "verify_involutive"}, {"involution", "star"}},
                    {{"op", "verify_involutive"},
                     {"involution", "phase"},
                     {"id", "verify_phase"}},
                    {{"op", "verify_involutive"},
                     {"involution", "doubled"},
                     {"id", "verify_doubled"},
                     {"expect_pass", false}},
                    {{"op", "linking"}, {"involution", "star"}},
                    {{"op", "involutive_pipeline"},
                     {"involution", "star"},
                     {"bimodule", "m"}}})}};
}

Json cm_roundtrip_demo() {
  return Json{
      {"algebras", {{"m2", {{"basis", m2_basis()}}}}},
      {"bimodules",
       {{"x", {{"left", "m2"}, {"right", "m2"}, {"basis", m2_basis()}}},
        {"m", {{"left", "m2"}, {"right", "m2"}, {"basis", m2_basis()}}}}},
      {"involutions", {{"star", {{"bimodule", "x"}}}}},
      {"tasks", Json::array({{{"op", "cm_roundtrip"},
                              {"involution", "star"},
                              {"bimodule", "m"}}})}};
}

Json reconstruction_roundtrip_demo() {
  GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(2));
  return Json{
      {"groups", {{"g", {{"cyclic", 2}}}}},
      {"bundles", {{"c", {{"group", "g"}, {"fibers", json_fibers(b)}}}}},
      {"tasks", Json::array({{{"op", "reconstruction"},
                              {"bundle", "c"},
                              {"expect", Json::array({0, 1})}}})}};
}

Json reconstruction_relabeled_z4_demo() {
  GradedCStarBundle b = group_algebra_bundle(FiniteGroup::cyclic(4));
  return Json{
      {"groups", {{"g", {{"cyclic", 4}}}}},
      {"bundles", {{"c", {{"group", "g"}, {"fibers", json_fibers(b)}}}}},
      {"tasks", Json::array({{{"op", "reconstruction"},
                              {"bundle", "c"},
                              {"relabel", Json::array({0, 3, 2, 1})},
                              {"expect", Json::array({0, 3, 2, 1})}}})}};
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {
      "group_algebra_z2",        "group_algebra_z3",
      "group_algebra_z4",        "pauli_bundle",
      "inner_crossed_product",   "involutive_m2",
      "cm_roundtrip",            "reconstruction_roundtrip",
      "reconstruction_relabeled_z4"};
  return names;
}

Json generate_demo(const std::string& name) {
  if (name == "group_algebra_z2") return group_algebra_demo(2);
  if (name == "group_algebra_z3") return group_algebra_demo(3);
  if (name == "group_algebra_z4") return group_algebra_demo(4);
  if (name == "pauli_bundle") return pauli_demo();
  if (name == "inner_crossed_product") return inner_crossed_product_demo();
  if (name == "involutive_m2") return involutive_m2_demo();
  if (name == "cm_roundtrip") return cm_roundtrip_demo();
  if (name == "reconstruction_roundtrip")
    return reconstruction_roundtrip_demo();
  if (name == "reconstruction_relabeled_z4")
    return reconstruction_relabeled_z4_demo();
  throw UnknownDemo("unknown demo '" + name + "'");
}

}  // namespace oat
