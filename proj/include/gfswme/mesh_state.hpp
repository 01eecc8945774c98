#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gfswme {

class BathymetryField;

/// Ghost layers per side. Wide enough for WENO5 reconstruction of the global
/// flux averages of the outermost ghost cells that interior interfaces touch.
inline constexpr int kGhostCells = 5;

/// Uniform 1D mesh on [x_left, x_right]. Storage index s covers ghosts and
/// interior; interior cell i lives at s = i + n_ghost.
struct Mesh {
  double x_left = 0.0;
  double x_right = 1.0;
  int n_cells = 1;
  int n_ghost = kGhostCells;

  Mesh() = default;
  Mesh(double left, double right, int cells, int ghosts = kGhostCells);

  double dx() const noexcept { return (x_right - x_left) / n_cells; }
  int total() const noexcept { return n_cells + 2 * n_ghost; }
  int first_interior() const noexcept { return n_ghost; }
  int last_interior() const noexcept { return n_ghost + n_cells - 1; }
  /// Center of the cell at storage index s (ghosts included).
  double center(int s) const noexcept { return x_left + (s - n_ghost + 0.5) * dx(); }
  double left_edge(int s) const noexcept { return x_left + (s - n_ghost) * dx(); }
};

/// Cell averages of the m conserved variables on every storage cell.
class StateField {
 public:
  StateField() = default;
  StateField(const Mesh& mesh, int n_vars);

  int rows() const noexcept { return rows_; }
  int vars() const noexcept { return vars_; }
  int n_ghost() const noexcept { return ghost_; }
  int n_cells() const noexcept { return rows_ - 2 * ghost_; }

  double& operator()(int row, int var) noexcept { return data_[static_cast<std::size_t>(row) * vars_ + var]; }
  double operator()(int row, int var) const noexcept { return data_[static_cast<std::size_t>(row) * vars_ + var]; }

  std::span<double> row(int r) noexcept { return {data_.data() + static_cast<std::size_t>(r) * vars_, static_cast<std::size_t>(vars_)}; }
  std::span<const double> row(int r) const noexcept {
    return {data_.data() + static_cast<std::size_t>(r) * vars_, static_cast<std::size_t>(vars_)};
  }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  /// True when every interior entry is finite and every interior height positive.
  bool admissible() const noexcept;

  friend bool operator==(const StateField&, const StateField&) = default;

 private:
  int rows_ = 0;
  int vars_ = 0;
  int ghost_ = 0;
  std::vector<double> data_;
};

enum class BoundaryKind {
  SupercriticalInflow,  ///< every conserved component prescribed
  SubcriticalInlet,     ///< discharge and moments prescribed, free surface extrapolated
  SubcriticalOutlet,    ///< height prescribed, discharge and moments extrapolated
  Transmissive,         ///< zeroth-order extrapolation of every component
  Periodic,
};

BoundaryKind parse_boundary_kind(std::string_view name);
std::string_view to_string(BoundaryKind kind) noexcept;

struct BoundarySide {
  BoundaryKind kind = BoundaryKind::Transmissive;
  std::vector<double> values;
};

struct BoundarySpec {
  BoundarySide left;
  BoundarySide right;

  /// Throws InvalidArgument when a side carries the wrong number of values,
  /// a prescribed height is non-positive, or periodicity is one-sided.
  void validate(int n_vars) const;
};

/// Number of prescribed values a side of kind `kind` needs for an m-variable model.
int prescribed_count(BoundaryKind kind, int n_vars);

/// Fills the ghost rows of `state` in place. Extrapolated heights keep the
/// free surface h+b of the nearest interior cell.
void fill_ghosts(StateField& state, const BoundarySpec& bc, const BathymetryField& bathymetry);
/// Same, over a flat bottom.
void fill_ghosts(StateField& state, const BoundarySpec& bc);

/// Per-component grid-function L2 norm sqrt(sum_i dx (U_i - V_i)^2) over interior cells.
std::vector<double> l2_error(const StateField& state, const StateField& reference, const Mesh& mesh);

/// Noise floor below which an error is not used to estimate a convergence rate.
inline constexpr double kErrorNoiseFloor = 1e-14;

/// log(e_coarse/e_fine)/log(ratio); empty when either error is at the noise floor.
std::optional<double> estimated_order(double error_coarse, double error_fine, double ratio);

}  // namespace gfswme
