#include "gfswme/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gfswme/errors.hpp"

namespace gfswme {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  if (t.empty() || t == "--") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.size()) throw InvalidArgument("line " + std::to_string(line) + ": not a number: '" + t + "'");
  return v;
}

}  // namespace

int CsvTable::column(const std::string& name) const {
  for (std::size_t c = 0; c < header.size(); ++c)
    if (header[c] == name) return static_cast<int>(c);
  throw InvalidArgument("missing column '" + name + "'");
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
  os << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw InvalidArgument("row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << '\n';
  }
}

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (t.header.empty()) {
      for (auto& f : split_line(line)) t.header.push_back(trim(f));
      continue;
    }
    const auto fields = split_line(line);
    if (fields.size() != t.header.size()) {
      throw InvalidArgument("line " + std::to_string(n) + ": expected " + std::to_string(t.header.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f, n));
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw InvalidArgument("empty CSV input");
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_csv(in);
}

std::vector<std::string> solution_columns(ModelId model) {
  const int nm = moment_count(model);
  std::vector<std::string> cols{"x", "b", "h", "eta", "u_m"};
  for (int k = 1; k <= nm; ++k) cols.push_back("alpha_" + std::to_string(k));
  cols.push_back("hu");
  for (int k = 1; k <= nm; ++k) cols.push_back("halpha_" + std::to_string(k));
  return cols;
}

CsvTable solution_table(const StateField& state, ModelId model, const BathymetryField& bathymetry) {
  const int m = variable_count(model);
  if (state.vars() != m) throw InvalidArgument("state width does not match the model");
  const Mesh& mesh = bathymetry.mesh();
  if (state.rows() != mesh.total()) throw InvalidArgument("state does not match the bathymetry mesh");
  CsvTable t;
  t.header = solution_columns(model);
  for (int s = mesh.first_interior(); s <= mesh.last_interior(); ++s) {
    const auto u = state.row(s);
    const PrimitiveState w = to_primitive(model, u);
    const double b = bathymetry.average(s);
    std::vector<double> row{mesh.center(s), b, w.h, w.h + b, w.u};
    for (int k = 0; k < m - 2; ++k) row.push_back(w.alpha[k]);
    for (int v = 1; v < m; ++v) row.push_back(u[v]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_solution_csv(const std::filesystem::path& path, const StateField& state, ModelId model,
                        const BathymetryField& bathymetry) {
  const CsvTable t = solution_table(state, model, bathymetry);
  std::ostringstream os;
  write_csv(os, t.header, t.rows);
  write_text_file(path, os.str());
}

StateField state_from_solution(const CsvTable& table, const Mesh& mesh, ModelId model) {
  if (static_cast<int>(table.rows.size()) != mesh.n_cells) {
    throw InvalidArgument("solution has " + std::to_string(table.rows.size()) + " rows, mesh has " +
                          std::to_string(mesh.n_cells) + " cells");
  }
  const int m = variable_count(model);
  std::vector<int> cols{table.column("h"), table.column("hu")};
  for (int k = 1; k <= m - 2; ++k) cols.push_back(table.column("halpha_" + std::to_string(k)));
  StateField state(mesh, m);
  for (int i = 0; i < mesh.n_cells; ++i)
    for (int v = 0; v < m; ++v) state(mesh.first_interior() + i, v) = table.rows[i][cols[v]];
  return state;
}

Mesh mesh_from_solution(const CsvTable& table) {
  const int xc = table.column("x");
  const int n = static_cast<int>(table.rows.size());
  if (n < 2) throw InvalidArgument("a solution file needs at least two cells to define a mesh");
  const double x0 = table.rows.front()[xc], x1 = table.rows.back()[xc];
  const double dx = (x1 - x0) / (n - 1);
  if (!(dx > 0.0)) throw InvalidArgument("cell centers must increase");
  return Mesh(x0 - 0.5 * dx, x1 + 0.5 * dx, n);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace gfswme
