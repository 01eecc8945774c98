#include "gfswme/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gfswme/errors.hpp"

namespace gfswme {

TimeIntegrator parse_time_integrator(std::string_view name) {
  if (name == "ssprk3") return TimeIntegrator::SSPRK3;
  if (name == "rk4") return TimeIntegrator::RK4;
  throw InvalidArgument("unknown time integrator '" + std::string(name) + "'");
}

std::string_view to_string(TimeIntegrator t) noexcept { return t == TimeIntegrator::SSPRK3 ? "ssprk3" : "rk4"; }

void SchemeConfig::validate(ModelId model) const {
  weno.validate();
  if (!(cfl > 0.0 && cfl <= 1.0)) throw InvalidArgument("cfl must lie in (0, 1]");
  if (!(steady_residual_tol >= 0.0)) throw InvalidArgument("steady tolerance must be non-negative");
  if (max_steps < 1) throw InvalidArgument("max_steps must be positive");
  if (flux == FluxKind::Upwind && !has_left_eigensystem(model)) {
    throw CapabilityError("the upwind global flux needs a closed-form eigensystem; " + std::string(to_string(model)) +
                          " supports the central flux only");
  }
}

Solver::Solver(ModelId model, const PhysicalParams& params, const Mesh& mesh, const BathymetryProfile& bathymetry,
               const BoundarySpec& bc, const SchemeConfig& scheme)
    : model_(model), params_(params), mesh_(mesh), bc_(bc), scheme_(scheme),
      table_(QuadratureTable::build(scheme.weno.order, mesh.dx())),
      bathy_(mesh, table_, bathymetry),
      reconstructor_(variable_count(model), scheme.weno, table_),
      assembler_(model, params, scheme.weno, table_) {
  scheme_.validate(model_);
  params_.validate();
  bc_.validate(variable_count(model_));
  const int need = 2 * scheme_.weno.radius() - 1;
  if (mesh_.n_ghost < need) {
    throw InvalidArgument("order " + std::to_string(scheme_.weno.order) + " needs at least " + std::to_string(need) +
                          " ghost cells per side");
  }
}

void Solver::residual(const StateField& state, StateField& dudt) {
  const int m = n_vars();
  if (state.rows() != mesh_.total() || state.vars() != m) throw InvalidArgument("state does not match the solver mesh");
  work_ = state;
  fill_ghosts(work_, bc_, bathy_);
  reconstructor_(work_, bathy_, recon_, scheme_.exec);
  assembler_.assemble(recon_, layer_, scheme_.exec);

  const int g = mesh_.n_ghost;
  const int n = mesh_.n_cells;
  fluxes_.resize(static_cast<std::size_t>(n + 1) * m);
  for_each_index(scheme_.exec, 0, n + 1, [&](int k) {
    const int right = g + k;
    const int left = right - 1;
    Vec GL(m), GR(m);
    for (int v = 0; v < m; ++v) {
      GL(v) = layer_.G_face(left, 1)[v];
      GR(v) = layer_.G_face(right, 0)[v];
    }
    const PrimitiveState wL = to_primitive(model_, recon_.point(left, recon_.right_face()).first(m));
    const PrimitiveState wR = to_primitive(model_, recon_.point(right, recon_.left_face()).first(m));
    try {
      const Vec f = numerical_flux(scheme_.flux, GL, GR, wL, wR, model_, params_);
      for (int v = 0; v < m; ++v) fluxes_[static_cast<std::size_t>(k) * m + v] = f(v);
    } catch (HyperbolicityError& e) {
      e.set_cell(k);
      throw;
    }
  });

  if (dudt.rows() != state.rows() || dudt.vars() != m) dudt = StateField(mesh_, m);
  std::fill(dudt.data().begin(), dudt.data().end(), 0.0);
  const double inv_dx = 1.0 / mesh_.dx();
  for_each_index(scheme_.exec, 0, n, [&](int i) {
    for (int v = 0; v < m; ++v) {
      dudt(g + i, v) = -(fluxes_[static_cast<std::size_t>(i + 1) * m + v] - fluxes_[static_cast<std::size_t>(i) * m + v]) * inv_dx;
    }
  });
}

StateField Solver::residual(const StateField& state) {
  StateField dudt(mesh_, n_vars());
  residual(state, dudt);
  return dudt;
}

double Solver::max_wave_speed(const StateField& state) const {
  double s = 0.0;
  for (int r = mesh_.first_interior(); r <= mesh_.last_interior(); ++r) {
    const PrimitiveState w = to_primitive(model_, state.row(r));
    try {
      s = std::max(s, spectral_radius(model_, w, params_));
    } catch (HyperbolicityError& e) {
      e.set_cell(r - mesh_.n_ghost);
      throw;
    }
  }
  return s;
}

double residual_norm(const StateField& dudt) {
  double m = 0.0;
  for (int r = dudt.n_ghost(); r < dudt.rows() - dudt.n_ghost(); ++r)
    for (double v : dudt.row(r)) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// out = a*x + b*(y + c*z), elementwise over all rows.
void combine(StateField& out, double a, const StateField& x, double b, const StateField& y, double c,
             const StateField& z) {
  auto o = out.data();
  auto xs = x.data(), ys = y.data(), zs = z.data();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = a * xs[k] + b * (ys[k] + c * zs[k]);
}

}  // namespace

void Solver::stage_update(StateField& state, double dt, const StateField& k1) {
  if (k2_.rows() != state.rows() || k2_.vars() != state.vars()) {
    k2_ = StateField(mesh_, n_vars());
    k3_ = k2_;
    k4_ = k2_;
    stage_ = k2_;
    stage2_ = k2_;
  }
  StateField &k2 = k2_, &k3 = k3_, &k4 = k4_, &stage = stage_, &stage2 = stage2_;
  if (scheme_.integrator == TimeIntegrator::SSPRK3) {
    combine(stage, 0.0, state, 1.0, state, dt, k1);
    residual(stage, k2);
    combine(stage2, 0.75, state, 0.25, stage, dt, k2);
    residual(stage2, k3);
    combine(state, 1.0 / 3.0, state, 2.0 / 3.0, stage2, dt, k3);
  } else {
    combine(stage, 0.0, state, 1.0, state, 0.5 * dt, k1);
    residual(stage, k2);
    combine(stage, 0.0, state, 1.0, state, 0.5 * dt, k2);
    residual(stage, k3);
    combine(stage, 0.0, state, 1.0, state, dt, k3);
    residual(stage, k4);
    auto s = state.data();
    const auto a = k1.data();
    auto b = k2.data(), c = k3.data(), d = k4.data();
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += dt / 6.0 * (a[k] + 2.0 * b[k] + 2.0 * c[k] + d[k]);
  }
}

double Solver::step(StateField& state) {
  StateField k1(mesh_, n_vars());
  residual(state, k1);
  const double dt = scheme_.cfl * mesh_.dx() / max_wave_speed(state);
  stage_update(state, dt, k1);
  return dt;
}

RunResult Solver::advance(StateField state, double t_end, double t_start) {
  if (state.rows() != mesh_.total() || state.vars() != n_vars()) {
    throw InvalidArgument("state does not match the solver mesh");
  }
  if (t_end < t_start) throw InvalidArgument("t_end precedes t_start");
  RunResult result;
  result.time = t_start;
  StateField k1(mesh_, n_vars());
  double t = t_start;
  long step = 0;
  while (t < t_end) {
    residual(state, k1);
    const double res = residual_norm(k1);
    result.residual_history.push_back(res);
    if (!std::isfinite(res)) throw SolverError("non-finite residual at step " + std::to_string(step), step);
    if (scheme_.steady_residual_tol > 0.0 && res <= scheme_.steady_residual_tol) {
      result.steady = true;
      break;
    }
    if (step >= scheme_.max_steps) {
      throw SolverError("step budget of " + std::to_string(scheme_.max_steps) + " exhausted at t=" + std::to_string(t),
                        step);
    }
    const double speed = max_wave_speed(state);
    if (!(speed > 0.0)) throw SolverError("vanishing wave speed, cannot choose a time step", step);
    double dt = scheme_.cfl * mesh_.dx() / speed;
    bool last = false;
    if (t + dt >= t_end) {
      dt = t_end - t;
      last = true;
    }
    stage_update(state, dt, k1);
    ++step;
    t = last ? t_end : t + dt;
    for (int r = mesh_.first_interior(); r <= mesh_.last_interior(); ++r) {
      for (double v : state.row(r)) {
        if (!std::isfinite(v)) {
          std::ostringstream os;
          os << "non-finite state in cell " << (r - mesh_.n_ghost) << " after step " << step;
          throw SolverError(os.str(), step);
        }
      }
    }
  }
  result.state = std::move(state);
  result.time = t;
  result.steps = step;
  return result;
}

SteadySolveResult Solver::solve_steady(StateField state, const SteadyOptions& options) {
  if (state.rows() != mesh_.total() || state.vars() != n_vars()) {
    throw InvalidArgument("state does not match the solver mesh");
  }
  const int m = n_vars();
  const int g = mesh_.n_ghost;
  const int n_unknowns = mesh_.n_cells * m;
  auto unknown = [&](int k) -> double& { return state(g + k / m, k % m); };

  StateField r(mesh_, m);
  auto gather = [&](const StateField& f, Eigen::VectorXd& out) {
    for (int k = 0; k < n_unknowns; ++k) out(k) = f(g + k / m, k % m);
  };
  Eigen::VectorXd r0(n_unknowns), rk(n_unknowns), dx(n_unknowns);
  Eigen::MatrixXd jac(n_unknowns, n_unknowns);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;

  SteadySolveResult result;
  auto build_jacobian = [&]() {
    residual(state, r);
    gather(r, r0);
    for (int k = 0; k < n_unknowns; ++k) {
      double& u = unknown(k);
      const double saved = u;
      const double h = 1.5e-8 * std::max(1.0, std::abs(saved));
      u = saved + h;
      const double step = u - saved;
      residual(state, r);
      gather(r, rk);
      jac.col(k) = (rk - r0) / step;
      u = saved;
    }
    lu.compute(jac);
    ++result.jacobians;
  };

  residual(state, r);
  gather(r, r0);
  result.residual_history.push_back(r0.lpNorm<Eigen::Infinity>());
  build_jacobian();
  double previous_update = std::numeric_limits<double>::infinity();
  for (int it = 0; it < options.max_iterations; ++it) {
    dx = -lu.solve(r0);
    if (!dx.allFinite()) throw SolverError("non-finite Newton update", it);
    for (int k = 0; k < n_unknowns; ++k) unknown(k) += dx(k);
    ++result.iterations;
    const double update = dx.lpNorm<Eigen::Infinity>();
    result.update_history.push_back(update);
    residual(state, r);
    gather(r, r0);
    result.residual_history.push_back(r0.lpNorm<Eigen::Infinity>());
    double scale = 1.0;
    for (int k = 0; k < n_unknowns; ++k) scale = std::max(scale, std::abs(unknown(k)));
    if (update <= options.update_tol * scale) {
      result.converged = true;
      break;
    }
    if (update > options.refresh_ratio * previous_update) build_jacobian();
    previous_update = update;
  }
  fill_ghosts(state, bc_, bathy_);
  result.state = std::move(state);
  return result;
}

StateField semidiscrete_residual(const StateField& state, ModelId model, const PhysicalParams& params,
                                 const BathymetryProfile& bathymetry, const SchemeConfig& scheme, const Mesh& mesh,
                                 const BoundarySpec& bc) {
  Solver solver(model, params, mesh, bathymetry, bc, scheme);
  return solver.residual(state);
}

RunResult advance(const StateField& state, double t_end, ModelId model, const PhysicalParams& params,
                  const BathymetryProfile& bathymetry, const SchemeConfig& scheme, const Mesh& mesh,
                  const BoundarySpec& bc) {
  Solver solver(model, params, mesh, bathymetry, bc, scheme);
  return solver.advance(state, t_end);
}

}  // namespace gfswme
