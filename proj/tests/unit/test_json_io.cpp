#include "ckgeo/json_io.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace ckgeo;

TEST_CASE("structure constants serialize as bracket records") {
  const auto j = to_json(build_structure_constants(CKSignature({1.0, -1.0})));
  CHECK(j["n"] == 2);
  CHECK(j["kappa"] == nlohmann::json::array({1.0, -1.0}));
  const auto& first = j["brackets"][0];
  CHECK(first["x"] == nlohmann::json::array({0, 1}));
  CHECK(first["y"] == nlohmann::json::array({0, 2}));
  CHECK(first["terms"][0]["coef"] == 1.0);
  CHECK(first["terms"][0]["target"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("curvature reports use 1-based plane keys and null for undefined values") {
  CurvatureReport r = closed_form_report(Eigen::Vector3d(0.1, 0.2, 0.3), 3, 1.0, 6.0);
  r.sectional[{0, 2}] = std::nullopt;
  r.scalar = std::numeric_limits<double>::quiet_NaN();
  const auto j = to_json(r);
  CHECK(j["sectional"]["K12"] == 1.0);
  CHECK(j["sectional"]["K13"].is_null());
  CHECK(j["scalar"].is_null());
  CHECK(j["method"] == "closed-form");
  CHECK(j.begin().key() == "point");
}

TEST_CASE("catalog rows and invariants") {
  const auto row = to_json(space_catalog().front());
  CHECK(row["name"] == "spherical");
  CHECK(row["algebra"] == "so(4)");
  CHECK(row["K_scalar"] == 6.0);
  FlowInvariants inv;
  inv.hamiltonian = 0.5;
  const auto j = to_json(inv);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"H", "C2", "C2_23", "C3", "p_phi"});
  CHECK(std::string(kSchema) == "ckgeo/1");
}
