#pragma once

#include <string_view>
#include <vector>

#include "gfswme/bathymetry.hpp"
#include "gfswme/global_flux.hpp"
#include "gfswme/mesh_state.hpp"
#include "gfswme/models.hpp"
#include "gfswme/numerical_flux.hpp"
#include "gfswme/parallel.hpp"
#include "gfswme/quadrature.hpp"
#include "gfswme/reconstruction.hpp"
#include "gfswme/weno.hpp"

namespace gfswme {

enum class TimeIntegrator { SSPRK3, RK4 };

TimeIntegrator parse_time_integrator(std::string_view name);
std::string_view to_string(TimeIntegrator t) noexcept;

struct SchemeConfig {
  FluxKind flux = FluxKind::Central;
  WenoConfig weno;
  double cfl = 0.4;
  TimeIntegrator integrator = TimeIntegrator::SSPRK3;
  double steady_residual_tol = 1e-14;  ///< L-infinity of dU/dt that counts as steady; 0 never stops early
  long max_steps = 50'000'000;
  Execution exec = Execution::Parallel;

  void validate(ModelId model) const;
};

struct RunResult {
  StateField state;
  double time = 0.0;
  bool steady = false;
  long steps = 0;
  std::vector<double> residual_history;  ///< L-infinity of dU/dt at the start of each step
};

struct SteadyOptions {
  int max_iterations = 60;
  double update_tol = 1e-13;  ///< converged once max |dU| <= update_tol * max(1, max |U|)
  double refresh_ratio = 0.5; ///< rebuild the Jacobian when the update shrinks slower than this
};

struct SteadySolveResult {
  StateField state;
  bool converged = false;
  int iterations = 0;
  int jacobians = 0;
  std::vector<double> residual_history;  ///< L-infinity of dU/dt after each iteration, initial first
  std::vector<double> update_history;    ///< L-infinity of each Newton update
};

/// Global-flux finite volume discretisation of one model on one mesh.
class Solver {
 public:
  Solver(ModelId model, const PhysicalParams& params, const Mesh& mesh, const BathymetryProfile& bathymetry,
         const BoundarySpec& bc, const SchemeConfig& scheme);

  ModelId model() const noexcept { return model_; }
  const PhysicalParams& params() const noexcept { return params_; }
  const Mesh& mesh() const noexcept { return mesh_; }
  const SchemeConfig& scheme() const noexcept { return scheme_; }
  const BoundarySpec& boundary() const noexcept { return bc_; }
  const QuadratureTable& table() const noexcept { return table_; }
  const BathymetryField& bathymetry() const noexcept { return bathy_; }
  int n_vars() const noexcept { return variable_count(model_); }

  /// Semi-discrete right-hand side dU/dt = -(G_{i+1/2} - G_{i-1/2})/dx on the
  /// interior rows; ghost rows of `dudt` are zero.
  void residual(const StateField& state, StateField& dudt);
  StateField residual(const StateField& state);

  /// Numerical fluxes at the n_cells+1 interior interfaces from the last residual call.
  std::span<const double> interface_fluxes() const noexcept { return fluxes_; }
  /// Reconstruction and global flux layer from the last residual call (ghosts filled).
  const CellReconstruction& reconstruction() const noexcept { return recon_; }
  const GlobalFluxLayer& layer() const noexcept { return layer_; }
  const StateField& filled_state() const noexcept { return work_; }

  /// Largest |lambda| over interior cells.
  double max_wave_speed(const StateField& state) const;

  /// Integrates from t_start to t_end, stopping early once the residual drops
  /// to the steady tolerance. Throws SolverError on non-finite data or when
  /// max_steps is exhausted.
  RunResult advance(StateField state, double t_end, double t_start = 0.0);

  /// Drives the semi-discrete residual to zero with chord-Newton iterations
  /// on the interior unknowns (dense finite-difference Jacobian). Reaches the
  /// same discrete steady state as long time marching, in far fewer residual
  /// evaluations on meshes of a few thousand unknowns.
  SteadySolveResult solve_steady(StateField initial, const SteadyOptions& options = {});

  /// One time step with the CFL time step of `state`; returns the step size.
  double step(StateField& state);

  /// A state on this solver's mesh with every entry zero.
  StateField make_state() const { return StateField(mesh_, n_vars()); }

 private:
  ModelId model_;
  PhysicalParams params_;
  Mesh mesh_;
  BoundarySpec bc_;
  SchemeConfig scheme_;
  QuadratureTable table_;
  BathymetryField bathy_;
  Reconstructor reconstructor_;
  GlobalFluxAssembler assembler_;
  void stage_update(StateField& state, double dt, const StateField& k1);

  StateField work_;
  StateField k2_, k3_, k4_, stage_, stage2_;
  CellReconstruction recon_;
  GlobalFluxLayer layer_;
  std::vector<double> fluxes_;
};

/// Infinity norm of a residual over interior rows and all components.
double residual_norm(const StateField& dudt);

/// One-shot residual evaluation.
StateField semidiscrete_residual(const StateField& state, ModelId model, const PhysicalParams& params,
                                 const BathymetryProfile& bathymetry, const SchemeConfig& scheme, const Mesh& mesh,
                                 const BoundarySpec& bc);

/// One-shot time integration.
RunResult advance(const StateField& state, double t_end, ModelId model, const PhysicalParams& params,
                  const BathymetryProfile& bathymetry, const SchemeConfig& scheme, const Mesh& mesh,
                  const BoundarySpec& bc);

}  // namespace gfswme
