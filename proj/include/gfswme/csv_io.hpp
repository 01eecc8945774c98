#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfswme/bathymetry.hpp"
#include "gfswme/mesh_state.hpp"
#include "gfswme/models.hpp"

namespace gfswme {

/// A numeric table with named columns. Missing entries ("--" or empty) read as NaN.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a column; throws InvalidArgument when absent.
  int column(const std::string& name) const;
};

/// %.17g, so a value read back is the same double.
std::string format_number(double v);

/// Header line then one line per row, comma separated, LF endings.
void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);
CsvTable read_csv(std::istream& is);
CsvTable read_csv(const std::filesystem::path& path);

/// x, b, h, eta, u_m, alpha_1[, alpha_2], hu[, halpha_1[, halpha_2]].
std::vector<std::string> solution_columns(ModelId model);

/// One row per interior cell: center, bottom cell average, primitives and conserved averages.
CsvTable solution_table(const StateField& state, ModelId model, const BathymetryField& bathymetry);

void write_solution_csv(const std::filesystem::path& path, const StateField& state, ModelId model,
                        const BathymetryField& bathymetry);

/// Conserved columns of a solution file placed on the interior rows of a
/// state on `mesh`; ghost rows are zero. Throws InvalidArgument when the row
/// count or columns do not match.
StateField state_from_solution(const CsvTable& table, const Mesh& mesh, ModelId model);

/// Mesh implied by the cell centers of a solution file.
Mesh mesh_from_solution(const CsvTable& table);

/// Creates missing parent directories; throws Error when the file cannot be opened.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gfswme
