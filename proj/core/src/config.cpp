// Copyright 2026 The cpforce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpforce/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"
#include "spec_json.hpp"

namespace cpforce {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double get_number(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' in " + where + " must be a number");
  return v.get<double>();
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(std::string("'") + key + "' in " + where + " must be a string");
  return v.get<std::string>();
}

AtomModel atom_from_json(const json& v) {
  if (v.is_string()) {
    auto atom = presets::atom_by_name(v.get<std::string>());
    if (!atom) throw ConfigError("unknown atom preset '" + v.get<std::string>() + "'");
    return *atom;
  }
  if (!v.is_object()) throw ConfigError("'atom' must be a preset name or an object");
  reject_unknown(v, {"name", "alpha0_cm3", "hbar_omega_a_ev", "g", "J", "tau_rel_s"}, "atom");
  if (!v.contains("alpha0_cm3") || !v.contains("hbar_omega_a_ev")) {
    throw ConfigError("custom atom needs alpha0_cm3 and hbar_omega_a_ev");
  }
  AtomModel atom;
  atom.name = v.contains("name") ? get_string(v, "name", "atom") : "custom";
  atom.alpha0 = get_number(v, "alpha0_cm3", "atom");
  const double ev = get_number(v, "hbar_omega_a_ev", "atom");
  if (!(ev > 0.0)) throw ConfigError("atom: hbar_omega_a_ev must be > 0");
  atom.omega_a = units::ev_to_angular_frequency(ev);
  atom.g = v.contains("g") ? get_number(v, "g", "atom") : 1.0;
  atom.J = v.contains("J") ? get_number(v, "J", "atom") : 0.5;
  atom.tau_rel = v.contains("tau_rel_s") ? get_number(v, "tau_rel_s", "atom") : presets::kDefaultTauRel;
  return atom;
}

WallModel wall_from_json(const json& v) {
  if (v.is_string()) {
    auto wall = presets::wall_by_name(v.get<std::string>());
    if (!wall) throw ConfigError("unknown wall preset '" + v.get<std::string>() + "'");
    return *wall;
  }
  if (!v.is_object()) throw ConfigError("'wall' must be a preset name or an object");
  if (!v.contains("eps_model")) throw ConfigError("custom wall needs eps_model");
  const std::string model = get_string(v, "eps_model", "wall");
  WallModel wall;
  wall.name = v.contains("name") ? get_string(v, "name", "wall") : "custom";
  if (model == "ideal") {
    reject_unknown(v, {"name", "eps_model"}, "wall (ideal)");
    wall.eps = IdealMetal{};
    wall.mu = NonMagnetic{};
    return wall;
  }
  if (model == "plasma") {
    reject_unknown(v, {"name", "eps_model", "omega_p_ev", "mu0", "mu_mode"}, "wall (plasma)");
    if (!v.contains("omega_p_ev")) throw ConfigError("plasma wall needs omega_p_ev");
    const double ev = get_number(v, "omega_p_ev", "wall");
    if (!(ev > 0.0)) throw ConfigError("wall: omega_p_ev must be > 0");
    wall.eps = Plasma{units::ev_to_angular_frequency(ev)};
  } else if (model == "constant") {
    reject_unknown(v, {"name", "eps_model", "eps0", "mu0", "mu_mode"}, "wall (constant)");
    if (!v.contains("eps0")) throw ConfigError("constant wall needs eps0");
    wall.eps = ConstantEps{get_number(v, "eps0", "wall")};
  } else {
    throw ConfigError("unknown eps_model '" + model + "' (expected ideal, plasma or constant)");
  }
  const double mu0 = v.contains("mu0") ? get_number(v, "mu0", "wall") : 1.0;
  MuMode mode = MuMode::ZeroFrequencyOnly;
  if (v.contains("mu_mode")) {
    auto m = parse_mu_mode(get_string(v, "mu_mode", "wall"));
    if (!m) throw ConfigError("wall: mu_mode must be zero-frequency-only or all-frequencies");
    mode = *m;
  }
  if (mu0 == 1.0 && !v.contains("mu_mode")) {
    wall.mu = NonMagnetic{};
  } else {
    wall.mu = StaticFerromagnet{mu0, mode};
  }
  return wall;
}

json atom_to_json(const AtomModel& atom) {
  return {{"name", atom.name},
          {"alpha0_cm3", atom.alpha0},
          {"hbar_omega_a_ev", units::angular_frequency_to_ev(atom.omega_a)},
          {"g", atom.g},
          {"J", atom.J},
          {"tau_rel_s", atom.tau_rel}};
}

json wall_to_json(const WallModel& wall) {
  json out = {{"name", wall.name}};
  if (wall.is_ideal_metal()) {
    out["eps_model"] = "ideal";
    return out;
  }
  if (const auto* p = std::get_if<Plasma>(&wall.eps)) {
    out["eps_model"] = "plasma";
    out["omega_p_ev"] = units::angular_frequency_to_ev(p->omega_p);
  } else {
    out["eps_model"] = "constant";
    out["eps0"] = std::get<ConstantEps>(wall.eps).eps0;
  }
  if (const auto* f = std::get_if<StaticFerromagnet>(&wall.mu)) {
    out["mu0"] = f->mu0;
    out["mu_mode"] = to_string(f->mode);
  }
  return out;
}

}  // namespace

namespace detail {

json spec_to_json(const SweepSpec& spec) {
  return {{"schema_version", kConfigSchemaVersion},
          {"atom", atom_to_json(spec.atom)},
          {"wall", wall_to_json(spec.wall)},
          {"temp_k", spec.temperature_k},
          {"a_min_m", spec.a_min_m},
          {"a_max_m", spec.a_max_m},
          {"points", spec.points},
          {"spacing", to_string(spec.spacing)},
          {"mode", to_string(spec.mode)},
          {"tolerances",
           {{"sum_rel_tol", spec.solver.sum_rel_tol},
            {"quad_rel_tol", spec.solver.quad_rel_tol},
            {"l_max", spec.solver.l_max}}}};
}

SweepSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  reject_unknown(doc,
                 {"schema_version", "atom", "wall", "temp_k", "a_min_m", "a_max_m", "points",
                  "spacing", "mode", "tolerances"},
                 "configuration");
  if (!doc.contains("schema_version")) throw ConfigError("configuration lacks schema_version");
  if (!doc.at("schema_version").is_number_integer() ||
      doc.at("schema_version").get<int>() != kConfigSchemaVersion) {
    throw ConfigError("unsupported schema_version (expected " +
                      std::to_string(kConfigSchemaVersion) + ")");
  }
  SweepSpec spec = default_sweep_spec();
  const std::string where = "configuration";
  if (doc.contains("atom")) spec.atom = atom_from_json(doc.at("atom"));
  if (doc.contains("wall")) spec.wall = wall_from_json(doc.at("wall"));
  if (doc.contains("temp_k")) spec.temperature_k = get_number(doc, "temp_k", where);
  if (doc.contains("a_min_m")) spec.a_min_m = get_number(doc, "a_min_m", where);
  if (doc.contains("a_max_m")) spec.a_max_m = get_number(doc, "a_max_m", where);
  if (doc.contains("points")) {
    if (!doc.at("points").is_number_unsigned()) throw ConfigError("'points' must be a positive integer");
    spec.points = doc.at("points").get<std::size_t>();
  }
  if (doc.contains("spacing")) {
    auto s = parse_spacing(get_string(doc, "spacing", where));
    if (!s) throw ConfigError("'spacing' must be log or linear");
    spec.spacing = *s;
  }
  if (doc.contains("mode")) {
    auto m = parse_sweep_mode(get_string(doc, "mode", where));
    if (!m) throw ConfigError("'mode' must be full, alpha_only or static_model");
    spec.mode = *m;
  }
  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    reject_unknown(t, {"sum_rel_tol", "quad_rel_tol", "l_max"}, "tolerances");
    if (t.contains("sum_rel_tol")) spec.solver.sum_rel_tol = get_number(t, "sum_rel_tol", "tolerances");
    if (t.contains("quad_rel_tol")) spec.solver.quad_rel_tol = get_number(t, "quad_rel_tol", "tolerances");
    if (t.contains("l_max")) {
      if (!t.at("l_max").is_number_unsigned()) throw ConfigError("'l_max' must be a positive integer");
      spec.solver.l_max = t.at("l_max").get<std::size_t>();
    }
  }
  return spec;
}

}  // namespace detail

SweepSpec default_sweep_spec() {
  SweepSpec spec;
  spec.atom = presets::hydrogen();
  spec.wall = presets::ideal_metal();
  return spec;
}

SweepSpec parse_sweep_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  try {
    return detail::spec_from_json(doc);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

SweepSpec load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

std::string to_config_json(const SweepSpec& spec, int indent) {
  return detail::spec_to_json(spec).dump(indent);
}

}  // namespace cpforce
