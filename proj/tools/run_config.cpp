#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "poncelet/inversive.hpp"
#include "poncelet/power.hpp"

namespace poncelet::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double read_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + " needs '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + " must be finite");
  return x;
}

Complex read_complex(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + " needs '" + key + "'");
  const json& v = obj.at(key);
  Complex z;
  if (v.is_number()) {
    z = {v.get<double>(), 0.0};
  } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    z = {v[0].get<double>(), v[1].get<double>()};
  } else {
    throw ConfigError(where + "." + key + " must be [re, im]");
  }
  if (!is_finite(z)) throw ConfigError(where + "." + key + " must be finite");
  return z;
}

std::string read_file_name(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw ConfigError("output." + key + " must be a non-empty string");
  }
  return v.get<std::string>();
}

}  // namespace

const std::map<std::string, double Tolerances::*>& tolerance_fields() {
  static const std::map<std::string, double Tolerances::*> fields = {
      {"closed_form", &Tolerances::closed_form},
      {"hypothesis", &Tolerances::hypothesis},
      {"conic_distance", &Tolerances::conic_distance},
      {"conic_residual", &Tolerances::conic_residual},
      {"collinearity", &Tolerances::collinearity},
      {"pencil", &Tolerances::pencil},
      {"p3_power", &Tolerances::p3_power},
      {"p5_power", &Tolerances::p5_power},
      {"argzero", &Tolerances::argzero},
      {"tangency", &Tolerances::tangency},
      {"cloud_tangency", &Tolerances::cloud_tangency},
      {"homothety", &Tolerances::homothety},
      {"nonconic_low", &Tolerances::nonconic_low},
      {"nonconic_high", &Tolerances::nonconic_high},
      {"closure", &Tolerances::closure},
      {"chapple_p3", &Tolerances::chapple_p3},
      {"chapple_x5", &Tolerances::chapple_x5},
  };
  return fields;
}

PonceletFamily RunConfig::family() const {
  if (foci) return PonceletFamily::from_foci(foci->f, foci->g, foci->a, foci->b);
  return family_from_inner_circle(inner_circle->a, inner_circle->b,
                                  inner_circle->center, inner_circle->radius);
}

Circle RunConfig::inversion_circle(const PonceletFamily& fam) const {
  const Complex center = inversion.center ? *inversion.center : p3_point(fam).point;
  return make_circle(center, inversion.radius);
}

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(doc, {"family", "inversion", "samples", "tolerances", "output"},
                 "config");

  RunConfig cfg;

  if (!doc.contains("family") || !doc["family"].is_object()) {
    throw ConfigError("config needs a 'family' object");
  }
  const json& fam = doc["family"];
  const bool has_foci = fam.contains("f") || fam.contains("g");
  const bool has_circle =
      fam.contains("inner_circle_center") || fam.contains("inner_circle_radius");
  if (has_foci == has_circle) {
    throw ConfigError(
        "family needs exactly one of {f, g, a, b} or "
        "{a, b, inner_circle_center, inner_circle_radius}");
  }
  if (has_foci) {
    reject_unknown(fam, {"f", "g", "a", "b"}, "family");
    cfg.foci = FociSpec{read_complex(fam, "f", "family"), read_complex(fam, "g", "family"),
                        read_number(fam, "a", "family"), read_number(fam, "b", "family")};
  } else {
    reject_unknown(fam, {"a", "b", "inner_circle_center", "inner_circle_radius"}, "family");
    cfg.inner_circle = InnerCircleSpec{read_number(fam, "a", "family"),
                                       read_number(fam, "b", "family"),
                                       read_complex(fam, "inner_circle_center", "family"),
                                       read_number(fam, "inner_circle_radius", "family")};
  }

  if (!doc.contains("inversion") || !doc["inversion"].is_object()) {
    throw ConfigError("config needs an 'inversion' object");
  }
  const json& inv = doc["inversion"];
  reject_unknown(inv, {"center", "radius"}, "inversion");
  if (inv.contains("center") && inv["center"].is_string()) {
    if (inv["center"].get<std::string>() != "P3") {
      throw ConfigError("inversion.center must be [re, im] or \"P3\"");
    }
  } else {
    cfg.inversion.center = read_complex(inv, "center", "inversion");
  }
  cfg.inversion.radius = read_number(inv, "radius", "inversion");
  if (!(cfg.inversion.radius > 0.0)) throw ConfigError("inversion.radius must be > 0");

  if (doc.contains("samples")) {
    const json& n = doc["samples"];
    if (!n.is_number_integer() || n.get<long long>() < 64) {
      throw ConfigError("samples must be an integer >= 64");
    }
    cfg.samples = static_cast<std::size_t>(n.get<long long>());
  }

  if (doc.contains("tolerances")) {
    const json& tol = doc["tolerances"];
    if (!tol.is_object()) throw ConfigError("tolerances must be an object");
    const auto& fields = tolerance_fields();
    for (const auto& [key, value] : tol.items()) {
      const auto it = fields.find(key);
      if (it == fields.end()) throw ConfigError("unknown tolerance '" + key + "'");
      const double x = read_number(tol, key, "tolerances");
      if (!(x > 0.0)) throw ConfigError("tolerances." + key + " must be > 0");
      cfg.tolerances.*(it->second) = x;
    }
  }

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw ConfigError("output must be an object");
    reject_unknown(out, {"csv", "svg", "report", "locus"}, "output");
    if (out.contains("csv")) cfg.output.csv = read_file_name(out, "csv");
    if (out.contains("svg")) cfg.output.svg = read_file_name(out, "svg");
    if (out.contains("report")) cfg.output.report = read_file_name(out, "report");
    if (out.contains("locus")) cfg.output.locus = read_file_name(out, "locus");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace poncelet::cli
