#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "csmcalc/classes.hpp"

namespace csmcalc::io {

using Json = nlohmann::json;

// Scene file schema:
//   ambient    [n_1, .., n_k]                   required
//   degrees    [[d_11, .., d_1k], ..]           required
//   polynomial "y^2*z - x^3 - x^2*z"            optional, single-factor ambients only
//   variables  ["x", "y", "z"]                  optional, defaults per poly::default_variables
//   chart      "z"                              required with polynomial
//   smooth     true                             optional
//   strata     [{id, dim, chi_c?, closure_chi?, parents?, csm_class?, shape?}]
//   mu         {"stratum-id": value}            stratum-wise values of mu(1_Y)
// csm_class is a map "a1,..,ak" -> integer; shape is "point" or "linear:k".
classes::VarietyInput parse_scene(const Json& doc);
classes::VarietyInput load_scene_file(const std::filesystem::path& path);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_to_json(const chow::Integer& v);
chow::Integer integer_from_json(const Json& j);

Json class_to_json(const chow::ChowClass& c);
chow::ChowClass class_from_json(const Json& j, const chow::AmbientSpace& ambient);

Json report_to_json(const classes::ClassReport& report);
std::string report_to_text(const classes::ClassReport& report);

// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace csmcalc::io
