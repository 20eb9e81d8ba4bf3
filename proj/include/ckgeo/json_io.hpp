#pragma once

// JSON forms of the library's reports. Non-finite doubles serialize as null.

#include "ckgeo/ck_algebra.hpp"
#include "ckgeo/ck_space.hpp"
#include "ckgeo/qdeform.hpp"
#include "ckgeo/riemann.hpp"
#include "ckgeo/sweep.hpp"

#include <json.hpp>

namespace ckgeo {

inline constexpr const char* kSchema = "ckgeo/1";

/// {"n", "kappa", "brackets": [{"x": [a,b], "y": [c,d], "terms": [{"coef", "target": [e,f]}]}]}
nlohmann::ordered_json to_json(const StructureConstants& sc);
nlohmann::ordered_json to_json(const SpaceReport& report);
nlohmann::ordered_json to_json(const CartanDecomposition& dec);
nlohmann::ordered_json to_json(const SpaceCatalogEntry& entry);
/// Sectional curvatures keyed "K12", "K13", ... (1-based), null where undefined.
nlohmann::ordered_json to_json(const CurvatureReport& report);
nlohmann::ordered_json to_json(const AlgebraCheck& check);
nlohmann::ordered_json to_json(const FlowInvariants& inv);

nlohmann::ordered_json vector_json(const Eigen::VectorXd& v);

}  // namespace ckgeo
