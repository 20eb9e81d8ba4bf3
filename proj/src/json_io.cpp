#include "ckgeo/json_io.hpp"

#include <cmath>

namespace ckgeo {

using json = nlohmann::ordered_json;

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json index_json(GeneratorIndex g) { return json::array({g.a, g.b}); }

}  // namespace

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v[i]));
  return out;
}

json to_json(const StructureConstants& sc) {
  json brackets = json::array();
  for (const auto& [key, terms] : sc.table()) {
    json t = json::array();
    for (const auto& term : terms) t.push_back({{"coef", number(term.coef)}, {"target", index_json(term.target)}});
    brackets.push_back({{"x", index_json(key.first)}, {"y", index_json(key.second)}, {"terms", t}});
  }
  return {{"n", sc.n()}, {"kappa", sc.kappa()}, {"brackets", brackets}};
}

json to_json(const SpaceReport& report) {
  return {{"m", report.m},
          {"dimension", report.dimension},
          {"rank", report.rank},
          {"curvature_coefficient", number(report.curvature_coefficient)},
          {"isotropy", report.isotropy}};
}

json to_json(const CartanDecomposition& dec) {
  json p = json::array();
  json h = json::array();
  for (auto g : dec.p_generators) p.push_back(index_json(g));
  for (auto g : dec.h_generators) h.push_back(index_json(g));
  return {{"m", dec.m}, {"p", p}, {"h", h}, {"h_left_kappa", dec.h_left_kappa}, {"h_right_kappa", dec.h_right_kappa}};
}

json to_json(const SpaceCatalogEntry& entry) {
  return {{"name", entry.name},
          {"symbol", entry.symbol},
          {"algebra", entry.algebra},
          {"kappa1", number(entry.kappa.kappa1)},
          {"kappa2", number(entry.kappa.kappa2)},
          {"metric_diagonal_symbolic", entry.metric_diagonal_symbolic},
          {"line_element", entry.line_element},
          {"K_sectional", number(entry.k_sectional)},
          {"K_scalar", number(entry.k_scalar)},
          {"degenerate", entry.degenerate}};
}

json to_json(const CurvatureReport& report) {
  json sectional = json::object();
  for (const auto& [plane, k] : report.sectional) {
    const std::string key = "K" + std::to_string(plane.first + 1) + std::to_string(plane.second + 1);
    sectional[key] = k ? number(*k) : json(nullptr);
  }
  return {{"point", vector_json(report.point)},
          {"sectional", sectional},
          {"scalar", number(report.scalar)},
          {"method", report.method == CurvatureMethod::closed_form ? "closed-form" : "finite-difference"}};
}

json to_json(const AlgebraCheck& check) {
  return {{"kappa", check.kappa},
          {"name", check.name},
          {"jacobi", number(check.jacobi)},
          {"invariance", number(check.invariance)},
          {"representation", number(check.representation)},
          {"contraction", number(check.contraction)}};
}

json to_json(const FlowInvariants& inv) {
  return {{"H", number(inv.hamiltonian)},
          {"C2", number(inv.casimir2_12)},
          {"C2_23", number(inv.casimir2_23)},
          {"C3", number(inv.casimir3)},
          {"p_phi", number(inv.p_phi)}};
}

}  // namespace ckgeo
