#include "csmcalc/scene_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "csmcalc/error.hpp"

namespace csmcalc::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("field '" + field + "': " + what);
}

std::vector<int> int_list(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected a list of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(field, "expected a list of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::pair<chow::Exponent, chow::Integer> exponent_entry(const std::string& key, const Json& value,
                                                        std::size_t factors, const std::string& field) {
  chow::Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      int a = std::stoi(part, &used);
      if (used != part.size() || a < 0) throw std::invalid_argument(part);
      e.push_back(a);
    } catch (const std::exception&) {
      fail(field, "bad exponent key '" + key + "'");
    }
  }
  if (e.size() != factors) fail(field, "exponent key '" + key + "' needs " + std::to_string(factors) + " entries");
  try {
    return {std::move(e), integer_from_json(value)};
  } catch (const ValidationError& err) {
    fail(field, err.what());
  }
}

chow::ChowClass shape_class(const std::string& name, const chow::AmbientSpace& ambient, const std::string& field) {
  if (name == "point") return classes::csm_library(classes::Shape::point(), ambient);
  if (name.rfind("linear:", 0) == 0) {
    try {
      return classes::csm_library(classes::Shape::linear(std::stoi(name.substr(7))), ambient);
    } catch (const std::logic_error& e) {
      fail(field, e.what());
    }
  }
  fail(field, "unsupported shape '" + name + "'");
}

cfun::Stratum parse_stratum(const Json& j, const chow::AmbientSpace& ambient, std::size_t index) {
  const std::string field = "strata[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(field, "expected an object");
  cfun::Stratum s;
  if (!j.contains("id") || !j["id"].is_string()) fail(field + ".id", "required string");
  s.id = j["id"].get<std::string>();
  if (!j.contains("dim") || !j["dim"].is_number_integer()) fail(field + ".dim", "required integer");
  s.dim = j["dim"].get<int>();
  if (j.contains("chi_c")) {
    if (!j["chi_c"].is_number_integer()) fail(field + ".chi_c", "expected integer");
    s.chi_c = j["chi_c"].get<std::int64_t>();
  }
  if (j.contains("closure_chi")) {
    if (!j["closure_chi"].is_number_integer()) fail(field + ".closure_chi", "expected integer");
    s.closure_chi = j["closure_chi"].get<std::int64_t>();
  }
  if (j.contains("parents")) {
    if (!j["parents"].is_array()) fail(field + ".parents", "expected a list of ids");
    for (const auto& p : j["parents"]) {
      if (!p.is_string()) fail(field + ".parents", "expected a list of ids");
      s.parents.push_back(p.get<std::string>());
    }
  }
  if (j.contains("csm_class") && j.contains("shape")) fail(field, "give either csm_class or shape, not both");
  if (j.contains("csm_class")) s.csm_class = class_from_json(j["csm_class"], ambient);
  if (j.contains("shape")) {
    if (!j["shape"].is_string()) fail(field + ".shape", "expected a string");
    s.csm_class = shape_class(j["shape"].get<std::string>(), ambient, field + ".shape");
  }
  return s;
}

}  // namespace

classes::VarietyInput parse_scene(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("scene file must be a JSON object");
  static const std::vector<std::string> known{"ambient", "degrees", "polynomial", "variables", "chart",
                                              "smooth",  "strata",  "mu",         "name",      "comment"};
  for (const auto& [key, value] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) fail(key, "unknown field");

  if (!doc.contains("ambient")) fail("ambient", "required");
  classes::VarietyInput input;
  try {
    input.ambient = chow::AmbientSpace(int_list(doc["ambient"], "ambient"));
  } catch (const ValidationError& e) {
    fail("ambient", e.what());
  }
  if (!doc.contains("degrees") || !doc["degrees"].is_array() || doc["degrees"].empty())
    fail("degrees", "required nonempty list of multidegrees");
  for (const auto& d : doc["degrees"]) {
    auto md = int_list(d, "degrees");
    if (md.size() != input.ambient.num_factors()) fail("degrees", "multidegree length must match ambient");
    if (std::all_of(md.begin(), md.end(), [](int a) { return a == 0; })) fail("degrees", "zero multidegree");
    input.degrees.push_back(std::move(md));
  }

  if (doc.contains("smooth")) {
    if (!doc["smooth"].is_boolean()) fail("smooth", "expected boolean");
    input.declared_smooth = doc["smooth"].get<bool>();
  }

  if (doc.contains("polynomial")) {
    if (!doc["polynomial"].is_string()) fail("polynomial", "expected a string");
    if (input.ambient.num_factors() != 1) fail("polynomial", "only supported for a single P^n ambient");
    std::vector<std::string> vars;
    if (doc.contains("variables")) {
      if (!doc["variables"].is_array()) fail("variables", "expected a list of names");
      for (const auto& v : doc["variables"]) {
        if (!v.is_string()) fail("variables", "expected a list of names");
        vars.push_back(v.get<std::string>());
      }
    } else {
      vars = poly::default_variables(static_cast<std::size_t>(input.ambient.factor_dim(0) + 1));
    }
    if (vars.size() != static_cast<std::size_t>(input.ambient.factor_dim(0) + 1))
      fail("variables", "need n+1 homogeneous variables for P^n");
    try {
      input.polynomial = poly::parse_polynomial(doc["polynomial"].get<std::string>(), vars);
    } catch (const ParseError& e) {
      fail("polynomial", e.what());
    }
    if (!input.polynomial->is_homogeneous() || input.polynomial->is_zero())
      fail("polynomial", "must be a nonzero homogeneous polynomial");
    if (!doc.contains("chart") || !doc["chart"].is_string()) fail("chart", "required with polynomial");
    auto it = std::find(vars.begin(), vars.end(), doc["chart"].get<std::string>());
    if (it == vars.end()) fail("chart", "not one of the variables");
    input.chart = static_cast<std::size_t>(it - vars.begin());
  } else if (doc.contains("chart") || doc.contains("variables")) {
    fail(doc.contains("chart") ? "chart" : "variables", "only meaningful with polynomial");
  }

  if (doc.contains("strata")) {
    if (!doc["strata"].is_array() || doc["strata"].empty()) fail("strata", "expected a nonempty list");
    std::vector<cfun::Stratum> strata;
    for (std::size_t i = 0; i < doc["strata"].size(); ++i)
      strata.push_back(parse_stratum(doc["strata"][i], input.ambient, i));
    try {
      input.strata = cfun::make_scene(input.ambient, input.degrees, std::move(strata), input.polynomial);
    } catch (const ValidationError& e) {
      fail("strata", e.what());
    }
  }

  if (doc.contains("mu")) {
    if (!doc["mu"].is_object()) fail("mu", "expected a map from stratum id to integer");
    if (!input.strata) fail("mu", "requires strata");
    std::map<std::string, std::int64_t> mu;
    for (const auto& [id, v] : doc["mu"].items()) {
      if (!v.is_number_integer()) fail("mu." + id, "expected integer");
      if (!input.strata->contains(id)) fail("mu." + id, "unknown stratum");
      mu[id] = v.get<std::int64_t>();
    }
    input.mu = std::move(mu);
  }

  if (!input.polynomial && !input.mu && !input.declared_smooth)
    fail("polynomial", "scene needs polynomial+chart, strata+mu, or smooth: true");
  if (input.declared_smooth && input.mu) fail("smooth", "a smooth scene cannot carry mu values");
  return input;
}

classes::VarietyInput load_scene_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scene file '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("scene file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_scene(doc);
}

Json integer_to_json(const chow::Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

chow::Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return chow::Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    chow::Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("bad integer string");
    return v;
  }
  throw ValidationError("expected an integer");
}

Json class_to_json(const chow::ChowClass& c) {
  Json out = Json::object();
  for (const auto& [e, v] : c.coefficients()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    out[key] = integer_to_json(v);
  }
  return out;
}

chow::ChowClass class_from_json(const Json& j, const chow::AmbientSpace& ambient) {
  if (!j.is_object()) throw ValidationError("class must be a map from exponent strings to integers");
  std::map<chow::Exponent, chow::Integer> coeffs;
  for (const auto& [key, value] : j.items()) {
    auto [e, v] = exponent_entry(key, value, ambient.num_factors(), "csm_class");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > ambient.factor_dim(i)) fail("csm_class", "exponent key '" + key + "' outside the ambient");
    coeffs[e] += v;
  }
  return chow::ChowClass(ambient, coeffs);
}

Json report_to_json(const classes::ClassReport& report) {
  Json out;
  out["ambient"] = report.csm.ambient().factors();
  out["fulton_johnson"] = class_to_json(report.fulton_johnson);
  out["milnor_class"] = class_to_json(report.milnor_class);
  out["csm"] = class_to_json(report.csm);
  out["euler"] = integer_to_json(report.euler);
  Json loc = Json::array();
  for (const auto& [id, c] : report.localization) loc.push_back({{"stratum", id}, {"class", class_to_json(c)}});
  out["localization"] = loc;
  Json checks = Json::object();
  for (const auto& [name, r] : report.checks) {
    Json entry{{"pass", r.pass}};
    if (!r.pass) entry["residual"] = class_to_json(r.residual);
    if (!r.detail.empty()) entry["detail"] = r.detail;
    checks[name] = entry;
  }
  out["checks"] = checks;
  if (report.milnor) {
    out["total_milnor"] = report.milnor->total_milnor;
    out["jacobian_dim"] = report.milnor->jacobian_dim;
    out["off_curve_dim"] = report.milnor->off_curve_dim;
  }
  return out;
}

std::string report_to_text(const classes::ClassReport& report) {
  std::ostringstream out;
  out << "fulton_johnson: " << report.fulton_johnson.to_string() << "\n"
      << "milnor_class:   " << report.milnor_class.to_string() << "\n"
      << "csm:            " << report.csm.to_string() << "\n"
      << "euler:          " << report.euler.get_str() << "\n";
  if (report.milnor) out << "total_milnor:   " << report.milnor->total_milnor << "\n";
  for (const auto& [id, c] : report.localization) out << "localization[" << id << "]: " << c.to_string() << "\n";
  for (const auto& [name, r] : report.checks) {
    out << "check " << name << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.pass) out << " (residual " << r.residual.to_string() << ")";
    out << "\n";
  }
  return out.str();
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace csmcalc::io
