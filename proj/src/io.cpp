#include "ferrocasimir/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ferrocasimir/errors.hpp"

namespace ferrocasimir::io {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view data) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return std::string(buf.data(), 16);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw ConfigError("failed reading file: " + path);
  return out.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open output file: " + tmp);
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw ConfigError("failed writing output file: " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ConfigError("failed to move output into place: " + path);
  }
}

const char* to_string(EquilibriumKind kind) {
  return kind == EquilibriumKind::STABLE ? "STABLE" : "UNSTABLE";
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::METAL: return "METAL";
    case SweepAxis::B1_THICKNESS: return "B1_THICKNESS";
    case SweepAxis::PHI: return "PHI";
    case SweepAxis::DIAMETER: return "DIAMETER";
    case SweepAxis::SOLVENT: return "SOLVENT";
  }
  return "UNKNOWN";
}

namespace {

void append_curve_row(std::string& out, const CurvePoint& pt,
                      bool with_diagnostics) {
  const PressureBreakdown& b = pt.breakdown;
  out += format_double(pt.ell_nm);
  for (double v : {b.te0, b.tm0, b.te_pos, b.tm_pos, b.total, b.normalized}) {
    out += ',';
    out += format_double(v);
  }
  if (with_diagnostics) {
    out += ',';
    out += std::to_string(b.n_used);
    out += ',';
    out += std::to_string(b.quad_evals);
  }
  out += '\n';
}

std::string curve_header(bool with_diagnostics) {
  std::string header(kCurveCsvHeader);
  if (with_diagnostics) header += ",n_used,quad_evals";
  header += '\n';
  return header;
}

}  // namespace

std::string curve_csv(const std::vector<CurvePoint>& curve,
                      bool with_diagnostics) {
  std::string out = curve_header(with_diagnostics);
  for (const CurvePoint& pt : curve) append_curve_row(out, pt, with_diagnostics);
  return out;
}

std::string equilibria_csv(const std::vector<Equilibrium>& roots) {
  std::string out(kEquilibriaCsvHeader);
  out += '\n';
  for (const Equilibrium& eq : roots) {
    out += format_double(eq.ell_star_nm);
    out += ',';
    out += to_string(eq.kind);
    out += ',';
    out += format_double(eq.bracket_lo_nm);
    out += ',';
    out += format_double(eq.bracket_hi_nm);
    out += ',';
    out += format_double(eq.residual_pa);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(std::string_view axis_name,
                      const std::vector<SweepEntry>& entries,
                      bool with_diagnostics) {
  std::string out = "axis,value,";
  out += curve_header(with_diagnostics);
  for (const SweepEntry& entry : entries) {
    for (const CurvePoint& pt : entry.curve) {
      out += axis_name;
      out += ',';
      out += entry.label;
      out += ',';
      append_curve_row(out, pt, with_diagnostics);
    }
  }
  return out;
}

std::string materials_csv(const std::vector<double>& xi_grid,
                          const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& values) {
  std::string out = "xi_ev";
  for (const std::string& name : columns) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t i = 0; i < xi_grid.size(); ++i) {
    out += format_double(xi_grid[i]);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out += ',';
      out += format_double(values[c][i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::ordered_json curve_row_json(const CurvePoint& pt,
                                      bool with_diagnostics) {
  nlohmann::ordered_json row;
  row["ell_nm"] = pt.ell_nm;
  row["p_te_n0_pa"] = pt.breakdown.te0;
  row["p_tm_n0_pa"] = pt.breakdown.tm0;
  row["p_te_npos_pa"] = pt.breakdown.te_pos;
  row["p_tm_npos_pa"] = pt.breakdown.tm_pos;
  row["p_total_pa"] = pt.breakdown.total;
  row["p_normalized"] = pt.breakdown.normalized;
  if (with_diagnostics) {
    row["n_used"] = pt.breakdown.n_used;
    row["quad_evals"] = pt.breakdown.quad_evals;
  }
  return row;
}

}  // namespace

nlohmann::ordered_json curve_rows_json(const std::vector<CurvePoint>& curve,
                                       bool with_diagnostics) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CurvePoint& pt : curve)
    rows.push_back(curve_row_json(pt, with_diagnostics));
  return rows;
}

nlohmann::ordered_json equilibria_rows_json(
    const std::vector<Equilibrium>& roots) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Equilibrium& eq : roots) {
    nlohmann::ordered_json row;
    row["ell_star_nm"] = eq.ell_star_nm;
    row["kind"] = to_string(eq.kind);
    row["bracket_lo_nm"] = eq.bracket_lo_nm;
    row["bracket_hi_nm"] = eq.bracket_hi_nm;
    row["residual_pa"] = eq.residual_pa;
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json sweep_entries_json(
    std::string_view axis_name, const std::vector<SweepEntry>& entries,
    bool with_diagnostics) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SweepEntry& entry : entries) {
    nlohmann::ordered_json item;
    item["axis"] = std::string(axis_name);
    item["value"] = entry.label;
    item["rows"] = curve_rows_json(entry.curve, with_diagnostics);
    item["equilibria"] = equilibria_rows_json(entry.equilibria);
    out.push_back(std::move(item));
  }
  return out;
}

nlohmann::ordered_json materials_rows_json(
    const std::vector<double>& xi_grid,
    const std::vector<std::string>& columns,
    const std::vector<std::vector<double>>& values) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < xi_grid.size(); ++i) {
    nlohmann::ordered_json row;
    row["xi_ev"] = xi_grid[i];
    for (std::size_t c = 0; c < columns.size(); ++c)
      row[columns[c]] = values[c][i];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ferrocasimir::io
