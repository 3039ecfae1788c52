#include "ferrocasimir/config.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/io.hpp"

namespace ferrocasimir {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key()))
      throw ConfigError("config: unknown key \"" + item.key() + "\" in " +
                        where);
  }
}

double get_number(const json& obj, const std::string& where,
                  const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number())
    throw ConfigError("config: " + where + "." + key + " must be a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key,
            int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw ConfigError("config: " + where + "." + key + " must be an integer");
  return v.get<int>();
}

std::string get_string(const json& obj, const std::string& where,
                       const std::string& key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string())
    throw ConfigError("config: " + where + "." + key + " must be a string");
  return v.get<std::string>();
}

GridSpec parse_grid(const json& obj, const std::string& where,
                    const GridSpec& defaults) {
  if (!obj.is_object())
    throw ConfigError("config: " + where + " must be an object");
  reject_unknown_keys(obj, where, {"min", "max", "count", "spacing"});
  GridSpec g = defaults;
  g.min = get_number(obj, where, "min", g.min);
  g.max = get_number(obj, where, "max", g.max);
  g.count = get_int(obj, where, "count", g.count);
  const std::string spacing = get_string(
      obj, where, "spacing",
      defaults.spacing == GridSpacing::LOG ? "log" : "lin");
  if (spacing == "log")
    g.spacing = GridSpacing::LOG;
  else if (spacing == "lin")
    g.spacing = GridSpacing::LIN;
  else
    throw ConfigError("config: " + where + ".spacing must be \"lin\" or \"log\"");
  return g;
}

}  // namespace

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.count < 1) throw ConfigError("grid: count must be >= 1");
  if (!(spec.min < spec.max)) throw ConfigError("grid: min must be < max");
  if (spec.spacing == GridSpacing::LOG && !(spec.min > 0.0))
    throw ConfigError("grid: log spacing requires min > 0");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(spec.count));
  if (spec.count == 1) {
    pts.push_back(spec.min);
    return pts;
  }
  const int last = spec.count - 1;
  for (int i = 0; i <= last; ++i) {
    if (i == 0) {
      pts.push_back(spec.min);
    } else if (i == last) {
      pts.push_back(spec.max);
    } else if (spec.spacing == GridSpacing::LOG) {
      pts.push_back(spec.min *
                    std::exp(i * std::log(spec.max / spec.min) / last));
    } else {
      pts.push_back(spec.min + i * (spec.max - spec.min) / last);
    }
  }
  return pts;
}

RunConfig parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown_keys(doc, "top level",
                      {"db", "temperature_k", "stack", "engine", "ell_grid",
                       "refine_tol_nm", "format", "out", "materials", "sweep"});

  RunConfig cfg;
  cfg.db_path = get_string(doc, "top level", "db", "");
  cfg.engine.temperature_k =
      get_number(doc, "top level", "temperature_k", cfg.engine.temperature_k);

  if (doc.contains("stack")) {
    const json& s = doc.at("stack");
    if (!s.is_object()) throw ConfigError("config: stack must be an object");
    reject_unknown_keys(s, "stack",
                        {"a", "solvent", "particle", "phi", "diameter_nm",
                         "ms_a_per_m", "coating", "b1_nm", "substrate"});
    StackConfig& st = cfg.stack;
    st.a = get_string(s, "stack", "a", st.a);
    st.solvent = get_string(s, "stack", "solvent", st.solvent);
    st.particle = get_string(s, "stack", "particle", st.particle);
    st.phi = get_number(s, "stack", "phi", st.phi);
    st.diameter_nm = get_number(s, "stack", "diameter_nm", st.diameter_nm);
    st.ms_a_per_m = get_number(s, "stack", "ms_a_per_m", st.ms_a_per_m);
    st.coating = get_string(s, "stack", "coating", st.coating);
    st.b1_nm = get_number(s, "stack", "b1_nm", st.b1_nm);
    st.substrate = get_string(s, "stack", "substrate", st.substrate);
  }

  if (doc.contains("engine")) {
    const json& e = doc.at("engine");
    if (!e.is_object()) throw ConfigError("config: engine must be an object");
    reject_unknown_keys(e, "engine", {"rel_tol", "y_cut", "n_cap", "tail_stop"});
    cfg.engine.rel_tol = get_number(e, "engine", "rel_tol", cfg.engine.rel_tol);
    cfg.engine.y_cut = get_number(e, "engine", "y_cut", cfg.engine.y_cut);
    cfg.engine.n_cap = get_int(e, "engine", "n_cap", cfg.engine.n_cap);
    cfg.engine.tail_stop = get_int(e, "engine", "tail_stop", cfg.engine.tail_stop);
  }

  if (doc.contains("ell_grid"))
    cfg.ell = parse_grid(doc.at("ell_grid"), "ell_grid", cfg.ell);
  cfg.refine_tol_nm =
      get_number(doc, "top level", "refine_tol_nm", cfg.refine_tol_nm);
  if (!(cfg.refine_tol_nm > 0.0))
    throw ConfigError("config: refine_tol_nm must be > 0");

  const std::string format = get_string(doc, "top level", "format", "csv");
  if (format == "csv")
    cfg.format = OutputFormat::CSV;
  else if (format == "json")
    cfg.format = OutputFormat::JSON;
  else
    throw ConfigError("config: format must be \"csv\" or \"json\"");
  cfg.out_path = get_string(doc, "top level", "out", "");

  if (doc.contains("materials")) {
    const json& m = doc.at("materials");
    if (!m.is_object()) throw ConfigError("config: materials must be an object");
    reject_unknown_keys(m, "materials", {"names", "xi_grid"});
    if (m.contains("names")) {
      const json& names = m.at("names");
      if (!names.is_array())
        throw ConfigError("config: materials.names must be an array");
      for (const json& n : names) {
        if (!n.is_string())
          throw ConfigError("config: materials.names entries must be strings");
        cfg.materials.names.push_back(n.get<std::string>());
      }
    }
    if (m.contains("xi_grid"))
      cfg.materials.xi =
          parse_grid(m.at("xi_grid"), "materials.xi_grid", cfg.materials.xi);
  }

  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    if (!s.is_object()) throw ConfigError("config: sweep must be an object");
    reject_unknown_keys(s, "sweep", {"axis", "values"});
    if (!s.contains("axis") || !s.contains("values"))
      throw ConfigError("config: sweep needs both \"axis\" and \"values\"");
    cfg.sweep.axis = parse_sweep_axis(get_string(s, "sweep", "axis", ""));
    const json& values = s.at("values");
    if (!values.is_array() || values.empty())
      throw ConfigError("config: sweep.values must be a non-empty array");
    for (const json& v : values) {
      if (v.is_string())
        cfg.sweep.values.emplace_back(v.get<std::string>());
      else if (v.is_number())
        cfg.sweep.values.emplace_back(v.get<double>());
      else
        throw ConfigError("config: sweep.values entries must be numbers or strings");
    }
  }
  return cfg;
}

SweepAxis parse_sweep_axis(const std::string& name) {
  if (name == "METAL") return SweepAxis::METAL;
  if (name == "B1_THICKNESS") return SweepAxis::B1_THICKNESS;
  if (name == "PHI") return SweepAxis::PHI;
  if (name == "DIAMETER") return SweepAxis::DIAMETER;
  if (name == "SOLVENT") return SweepAxis::SOLVENT;
  throw ConfigError("config: sweep axis must be one of METAL, B1_THICKNESS, "
                    "PHI, DIAMETER, SOLVENT (got \"" + name + "\")");
}

std::string resolve_db_path(const std::string& cli_db_flag,
                            const RunConfig& cfg) {
  if (!cli_db_flag.empty()) return cli_db_flag;
  if (!cfg.db_path.empty()) return cfg.db_path;
  if (const char* env = std::getenv("FERROCASIMIR_DB"); env && *env)
    return env;
  return "data/materials.json";
}

FourLayerStack build_stack(const StackConfig& cfg, const MaterialDatabase& db,
                           double temperature_k) {
  if (!(cfg.b1_nm > 0.0))
    throw ConfigError("stack: coating thickness b1_nm must be > 0");
  if (!(cfg.phi >= 0.0 && cfg.phi < 1.0))
    throw ConfigError("stack: phi must be in [0, 1)");
  if (!(cfg.diameter_nm > 0.0))
    throw ConfigError("stack: diameter_nm must be > 0");
  if (!(cfg.ms_a_per_m >= 0.0))
    throw ConfigError("stack: ms_a_per_m must be >= 0");
  if (!(temperature_k > 0.0))
    throw ConfigError("stack: temperature_k must be > 0");
  FourLayerStack stack;
  stack.a = db.at(cfg.a);
  stack.gap.solvent = db.at(cfg.solvent);
  stack.gap.particle = db.at(cfg.particle);
  stack.gap.phi = cfg.phi;
  stack.gap.diameter_nm = cfg.diameter_nm;
  stack.gap.ms_a_per_m = cfg.ms_a_per_m;
  stack.gap.temperature_k = temperature_k;
  stack.coating = db.at(cfg.coating);
  stack.b1_nm = cfg.b1_nm;
  stack.substrate = db.at(cfg.substrate);
  return stack;
}

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
  nlohmann::ordered_json echo;
  echo["db"] = cfg.db_path;
  echo["temperature_k"] = cfg.engine.temperature_k;
  echo["stack"] = {{"a", cfg.stack.a},
                   {"solvent", cfg.stack.solvent},
                   {"particle", cfg.stack.particle},
                   {"phi", cfg.stack.phi},
                   {"diameter_nm", cfg.stack.diameter_nm},
                   {"ms_a_per_m", cfg.stack.ms_a_per_m},
                   {"coating", cfg.stack.coating},
                   {"b1_nm", cfg.stack.b1_nm},
                   {"substrate", cfg.stack.substrate}};
  echo["engine"] = {{"rel_tol", cfg.engine.rel_tol},
                    {"y_cut", cfg.engine.y_cut},
                    {"n_cap", cfg.engine.n_cap},
                    {"tail_stop", cfg.engine.tail_stop}};
  const auto grid_json = [](const GridSpec& g) {
    return nlohmann::ordered_json{
        {"min", g.min},
        {"max", g.max},
        {"count", g.count},
        {"spacing", g.spacing == GridSpacing::LOG ? "log" : "lin"}};
  };
  echo["ell_grid"] = grid_json(cfg.ell);
  echo["refine_tol_nm"] = cfg.refine_tol_nm;
  echo["format"] = cfg.format == OutputFormat::CSV ? "csv" : "json";
  echo["out"] = cfg.out_path;
  echo["materials"] = {{"names", cfg.materials.names},
                       {"xi_grid", grid_json(cfg.materials.xi)}};
  if (!cfg.sweep.values.empty()) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const SweepValue& v : cfg.sweep.values) {
      if (std::holds_alternative<std::string>(v))
        values.push_back(std::get<std::string>(v));
      else
        values.push_back(std::get<double>(v));
    }
    echo["sweep"] = {{"axis", io::to_string(cfg.sweep.axis)}, {"values", values}};
  } else {
    echo["sweep"] = nullptr;
  }
  return echo;
}

}  // namespace ferrocasimir
