#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfswme/bathymetry.hpp"
#include "gfswme/mesh_state.hpp"
#include "gfswme/models.hpp"
#include "gfswme/solver.hpp"

namespace gfswme {

enum class Scenario {
  LakeAtRest,
  LarPerturbation,
  Supercritical,
  Subcritical,
  SupercriticalFriction,
  PerturbationComparison,
  EigenvalueReport,
  Custom,
};

Scenario parse_scenario(std::string_view name);
std::string_view to_string(Scenario s) noexcept;

/// How a steady state is reached.
enum class SteadyMethod {
  Newton,        ///< solve_steady, seeded by the exact profile or a coarse marched state
  TimeMarching,  ///< advance to t_end on the target mesh
};

SteadyMethod parse_steady_method(std::string_view name);
std::string_view to_string(SteadyMethod m) noexcept;

/// delta h = A exp(1 - 1/(1 - r)^2) with r = width (x - center)^2, zero for r >= 1.
struct PerturbationSpec {
  double amplitude = 0.0;
  double center = 9.5;
  double width = 4.0;

  double operator()(double x) const;
};

struct ExperimentConfig {
  Scenario scenario = Scenario::Supercritical;
  ModelId model = ModelId::SWME1;
  std::vector<ModelId> models;  ///< comparison and eigenvalue runs
  SchemeConfig scheme;
  PhysicalParams physics;
  std::vector<int> mesh_sizes{100, 200, 400, 600, 800};
  int n_cells = 100;
  double x_left = 0.0;
  double x_right = 25.0;
  std::string bathymetry = "bump";
  double t_end = 50.0;
  double eta0 = 1.0;
  PerturbationSpec perturbation;
  std::vector<double> snapshot_times;
  SteadyMethod steady_method = SteadyMethod::Newton;
  int settle_cells = 100;       ///< mesh on which Newton seeds are marched
  double steady_flag_tol = 1e-9;  ///< residual above which a result is flagged non-steady
  double probe_x = 23.0;        ///< eigenvalue sampling position
  std::filesystem::path out_dir = "out";

  // Custom scenario only.
  BoundarySpec boundary;
  std::vector<double> initial;  ///< free surface, discharge, moment discharges
  std::filesystem::path initial_state;  ///< solution CSV to restart from

  void validate() const;
};

/// Parameterisation of a catalogue scenario for one model.
ExperimentConfig scenario_preset(Scenario scenario, ModelId model = ModelId::SWME1);

/// key = value lines, '#' comments. The scenario and model keys select the
/// preset, every other key overrides it. Unknown keys throw InvalidArgument.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Boundary data of a scenario for a model (custom: the configured sides).
BoundarySpec scenario_boundary(const ExperimentConfig& cfg, ModelId model);

/// Mesh of n cells over the configured domain.
Mesh scenario_mesh(const ExperimentConfig& cfg, int n_cells);

/// Solver for one model on one mesh of the scenario.
Solver make_solver(const ExperimentConfig& cfg, ModelId model, int n_cells);

/// Initial data of a scenario (lake at rest: the exact state).
StateField scenario_initial(const ExperimentConfig& cfg, ModelId model, const Solver& solver);

/// Analytic reference on the solver mesh, when the scenario has one.
std::optional<StateField> scenario_reference(const ExperimentConfig& cfg, ModelId model, const Solver& solver);

/// Cell averages of `coarse` transferred to `fine` by quadratic interpolation
/// through neighbouring averages; ghost rows are left zero.
StateField transfer_state(const StateField& coarse, const Mesh& coarse_mesh, const Mesh& fine_mesh);

struct SteadyRun {
  StateField state;
  double residual = 0.0;  ///< L-infinity of dU/dt at the returned state
  bool steady = false;
  long march_steps = 0;
  int newton_iterations = 0;
};

/// Steady state of the scenario on n cells.
SteadyRun compute_steady(const ExperimentConfig& cfg, ModelId model, int n_cells);

struct ConvergenceRow {
  int n_cells = 0;
  std::vector<double> error;                ///< per conserved component
  std::vector<std::optional<double>> order; ///< against the previous row
  bool steady = true;
  double residual = 0.0;
};

struct ConvergenceTable {
  Scenario scenario = Scenario::Supercritical;
  ModelId model = ModelId::SWME1;
  int order = 5;
  FluxKind flux = FluxKind::Central;
  std::vector<ConvergenceRow> rows;
};

/// Errors against the scenario reference on every mesh of cfg.mesh_sizes.
/// Lake at rest marches to t_end; the moving equilibria are driven to steady.
ConvergenceTable run_convergence(const ExperimentConfig& cfg);

struct Snapshot {
  double time = 0.0;
  StateField state;
};

struct PerturbationRun {
  ModelId model = ModelId::SWME1;
  Mesh mesh;
  StateField equilibrium;
  std::vector<Snapshot> snapshots;

  /// Deviation of component v from the equilibrium on interior cell i.
  double deviation(int snapshot, int cell, int v) const;
  /// Largest |deviation| over cells and components at a snapshot.
  double max_deviation(int snapshot) const;
};

/// Equilibrium, bump on the height, snapshots at cfg.snapshot_times. Throws
/// SolverError when the equilibrium residual exceeds cfg.steady_flag_tol.
PerturbationRun run_perturbation(const ExperimentConfig& cfg, ModelId model);

/// run_perturbation for each of cfg.models.
std::vector<PerturbationRun> run_comparison(const ExperimentConfig& cfg);

struct EigenRow {
  ModelId model = ModelId::SWME1;
  double x = 0.0;
  PrimitiveState state;
  std::vector<std::optional<double>> lambda;  ///< four slots, descending; empty slot where a model has none
  std::string error;                          ///< set instead of lambda on hyperbolicity loss
};

/// Eigenvalues of each model's system matrix in the cell containing cfg.probe_x
/// of its steady state. SWME1 leaves slot three empty, as does a model whose
/// third eigenvalue repeats the second.
std::vector<EigenRow> run_eigen_report(const ExperimentConfig& cfg);

/// Local maxima of |values| that exceed `threshold` times the global maximum.
std::vector<int> peak_indices(const std::vector<double>& values, double threshold);

/// File writers for the experiment results. Each returns the paths written.
std::vector<std::filesystem::path> emit_convergence(const ConvergenceTable& table, const std::filesystem::path& dir);
std::vector<std::filesystem::path> emit_perturbation(const PerturbationRun& run, const ExperimentConfig& cfg);
std::vector<std::filesystem::path> emit_eigen(const std::vector<EigenRow>& rows, const std::filesystem::path& dir);

/// Convergence CSV columns: N_e, err_h, eoa_h, err_hu, eoa_hu, err_ha1, eoa_ha1[, err_ha2, eoa_ha2].
std::vector<std::string> convergence_columns(ModelId model);

/// Human-readable tables for the terminal.
void print_convergence(std::ostream& os, const ConvergenceTable& table);
void print_eigen(std::ostream& os, const std::vector<EigenRow>& rows);

}  // namespace gfswme
