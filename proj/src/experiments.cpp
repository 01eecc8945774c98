#include "gfswme/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "gfswme/csv_io.hpp"
#include "gfswme/errors.hpp"
#include "gfswme/quadrature.hpp"
#include "gfswme/steady_reference.hpp"

namespace gfswme {

namespace {

constexpr double kSuperH = 2.0, kSuperHu = 24.0, kSuperHa1 = -0.5, kFrictionHa2 = -0.2;
constexpr double kSubHOut = 2.0, kSubHu = 4.42, kSubHa1 = 0.1;

bool is_lake(Scenario s) { return s == Scenario::LakeAtRest || s == Scenario::LarPerturbation; }

bool is_subcritical(Scenario s) { return s == Scenario::Subcritical; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw InvalidArgument("config key '" + key + "': not a number: '" + v + "'");
  return d;
}

long to_long(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw InvalidArgument("config key '" + key + "': not an integer: '" + v + "'");
  return n;
}

std::vector<double> to_doubles(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split_list(v)) out.push_back(to_double(key, item));
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw InvalidArgument("config key '" + key + "': not a boolean: '" + v + "'");
}

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", t);
  return buf;
}

// Moment discharges a model carries, from the first two.
std::vector<double> moment_discharges(ModelId model, double ha1, double ha2) {
  std::vector<double> out;
  if (moment_count(model) >= 1) out.push_back(ha1);
  if (moment_count(model) >= 2) out.push_back(ha2);
  return out;
}

double scenario_ha2(Scenario s) {
  return (s == Scenario::SupercriticalFriction || s == Scenario::PerturbationComparison ||
          s == Scenario::EigenvalueReport)
             ? kFrictionHa2
             : 0.0;
}

}  // namespace

Scenario parse_scenario(std::string_view name) {
  static const std::map<std::string_view, Scenario> table{
      {"lake_at_rest", Scenario::LakeAtRest},
      {"lar_perturbation", Scenario::LarPerturbation},
      {"supercritical", Scenario::Supercritical},
      {"subcritical", Scenario::Subcritical},
      {"supercritical_friction", Scenario::SupercriticalFriction},
      {"perturbation_comparison", Scenario::PerturbationComparison},
      {"eigenvalue_report", Scenario::EigenvalueReport},
      {"custom", Scenario::Custom},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown scenario '" + std::string(name) + "'");
  return it->second;
}

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::LakeAtRest: return "lake_at_rest";
    case Scenario::LarPerturbation: return "lar_perturbation";
    case Scenario::Supercritical: return "supercritical";
    case Scenario::Subcritical: return "subcritical";
    case Scenario::SupercriticalFriction: return "supercritical_friction";
    case Scenario::PerturbationComparison: return "perturbation_comparison";
    case Scenario::EigenvalueReport: return "eigenvalue_report";
    case Scenario::Custom: return "custom";
  }
  return "?";
}

SteadyMethod parse_steady_method(std::string_view name) {
  if (name == "newton") return SteadyMethod::Newton;
  if (name == "march" || name == "time_marching") return SteadyMethod::TimeMarching;
  throw InvalidArgument("unknown steady method '" + std::string(name) + "'");
}

std::string_view to_string(SteadyMethod m) noexcept {
  return m == SteadyMethod::Newton ? "newton" : "march";
}

double PerturbationSpec::operator()(double x) const {
  const double r = width * (x - center) * (x - center);
  if (r >= 1.0) return 0.0;
  return amplitude * std::exp(1.0 - 1.0 / ((1.0 - r) * (1.0 - r)));
}

void ExperimentConfig::validate() const {
  physics.validate();
  for (ModelId m : models) scheme.validate(m);
  if (models.empty()) scheme.validate(model);
  if (mesh_sizes.empty()) throw InvalidArgument("mesh_sizes must not be empty");
  for (std::size_t k = 0; k < mesh_sizes.size(); ++k) {
    if (mesh_sizes[k] < 1) throw InvalidArgument("mesh sizes must be positive");
    if (k > 0 && mesh_sizes[k] <= mesh_sizes[k - 1]) throw InvalidArgument("mesh sizes must be ascending");
  }
  if (n_cells < 1) throw InvalidArgument("n_cells must be positive");
  if (settle_cells < 1) throw InvalidArgument("settle_cells must be positive");
  if (!(x_right > x_left)) throw InvalidArgument("x_right must exceed x_left");
  if (!(t_end >= 0.0)) throw InvalidArgument("t_end must be non-negative");
  for (double t : snapshot_times)
    if (!(t >= 0.0)) throw InvalidArgument("snapshot times must be non-negative");
  if (!(perturbation.width > 0.0)) throw InvalidArgument("perturbation width must be positive");
  if ((scenario == Scenario::PerturbationComparison || scenario == Scenario::EigenvalueReport) && models.empty()) {
    throw InvalidArgument(std::string(to_string(scenario)) + " needs a model list");
  }
  if (scenario == Scenario::Custom) {
    if (initial_state.empty() && initial.size() != static_cast<std::size_t>(variable_count(model))) {
      throw InvalidArgument("custom scenario needs 'initial' with " + std::to_string(variable_count(model)) +
                            " values (free surface, discharge, moment discharges) or 'initial_state'");
    }
    boundary.validate(variable_count(model));
  }
}

ExperimentConfig scenario_preset(Scenario scenario, ModelId model) {
  ExperimentConfig c;
  c.scenario = scenario;
  c.model = model;
  c.scheme.weno.order = 5;
  c.scheme.flux = FluxKind::Central;
  switch (scenario) {
    case Scenario::LakeAtRest:
    case Scenario::LarPerturbation:
      c.physics.g = scenario == Scenario::LakeAtRest ? 1.0 : 9.8;
      c.physics.nu = 0.05;
      c.physics.lambda_slip = 1.0;
      c.physics.friction_enabled = true;
      c.eta0 = 1.0;
      c.t_end = scenario == Scenario::LakeAtRest ? 1.0 : 2.0;
      c.scheme.steady_residual_tol = 0.0;
      if (scenario == Scenario::LarPerturbation) {
        c.perturbation.amplitude = 0.1;
        c.snapshot_times = {0.0, 0.66, 1.33, 2.0};
      }
      break;
    case Scenario::Supercritical:
    case Scenario::Subcritical:
      c.physics.g = 9.812;
      c.t_end = scenario == Scenario::Supercritical ? 50.0 : 400.0;
      c.snapshot_times = {0.225, 0.45, 0.675, 0.9};
      break;
    case Scenario::SupercriticalFriction:
    case Scenario::PerturbationComparison:
    case Scenario::EigenvalueReport:
      c.physics.g = 9.812;
      c.physics.nu = 0.05;
      c.physics.lambda_slip = 1.0;
      c.physics.friction_enabled = true;
      c.t_end = 50.0;
      c.snapshot_times = {0.225, 0.45, 0.675, 0.9};
      if (scenario != Scenario::SupercriticalFriction) {
        c.models = {ModelId::SWME1, ModelId::SWLME2, ModelId::HSWME2, ModelId::SWME2};
      }
      if (scenario == Scenario::PerturbationComparison) c.perturbation.amplitude = 1e-3;
      break;
    case Scenario::Custom:
      c.physics.g = 9.81;
      c.t_end = 1.0;
      break;
  }
  return c;
}

ExperimentConfig parse_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int n = 0;
  Scenario scenario = Scenario::Supercritical;
  ModelId model = ModelId::SWME1;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config line " + std::to_string(n) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InvalidArgument("config line " + std::to_string(n) + ": empty key");
    if (key == "scenario") scenario = parse_scenario(value);
    else if (key == "model") model = parse_model(value);
    else entries.emplace_back(std::move(key), std::move(value));
  }

  ExperimentConfig c = scenario_preset(scenario, model);
  bool friction_set = false;
  for (const auto& [key, v] : entries) {
    if (key == "models") {
      c.models.clear();
      for (const auto& name : split_list(v)) c.models.push_back(parse_model(name));
    } else if (key == "order") {
      c.scheme.weno.order = static_cast<int>(to_long(key, v));
    } else if (key == "flux") {
      c.scheme.flux = parse_flux_kind(v);
    } else if (key == "weno_weights") {
      c.scheme.weno.mode = parse_weight_mode(v);
    } else if (key == "weno_epsilon") {
      c.scheme.weno.epsilon = to_double(key, v);
    } else if (key == "integrator") {
      c.scheme.integrator = parse_time_integrator(v);
    } else if (key == "cfl") {
      c.scheme.cfl = to_double(key, v);
    } else if (key == "max_steps") {
      c.scheme.max_steps = to_long(key, v);
    } else if (key == "steady_tol") {
      c.scheme.steady_residual_tol = to_double(key, v);
    } else if (key == "exec") {
      if (v == "serial") c.scheme.exec = Execution::Serial;
      else if (v == "parallel") c.scheme.exec = Execution::Parallel;
      else throw InvalidArgument("config key 'exec': expected serial or parallel");
    } else if (key == "n_cells") {
      c.n_cells = static_cast<int>(to_long(key, v));
    } else if (key == "mesh_sizes") {
      c.mesh_sizes.clear();
      for (const auto& item : split_list(v)) c.mesh_sizes.push_back(static_cast<int>(to_long(key, item)));
    } else if (key == "g") {
      c.physics.g = to_double(key, v);
    } else if (key == "nu") {
      c.physics.nu = to_double(key, v);
      if (!friction_set) c.physics.friction_enabled = c.physics.nu > 0.0;
    } else if (key == "lambda") {
      c.physics.lambda_slip = to_double(key, v);
    } else if (key == "friction") {
      c.physics.friction_enabled = to_bool(key, v);
      friction_set = true;
    } else if (key == "t_end") {
      c.t_end = to_double(key, v);
    } else if (key == "out_dir") {
      c.out_dir = v;
    } else if (key == "perturb_amplitude") {
      c.perturbation.amplitude = to_double(key, v);
    } else if (key == "perturb_center") {
      c.perturbation.center = to_double(key, v);
    } else if (key == "perturb_width") {
      c.perturbation.width = to_double(key, v);
    } else if (key == "snapshot_times") {
      c.snapshot_times = to_doubles(key, v);
    } else if (key == "steady_method") {
      c.steady_method = parse_steady_method(v);
    } else if (key == "settle_cells") {
      c.settle_cells = static_cast<int>(to_long(key, v));
    } else if (key == "steady_flag_tol") {
      c.steady_flag_tol = to_double(key, v);
    } else if (key == "probe_x") {
      c.probe_x = to_double(key, v);
    } else if (key == "x_left") {
      c.x_left = to_double(key, v);
    } else if (key == "x_right") {
      c.x_right = to_double(key, v);
    } else if (key == "bathymetry") {
      bathymetry_by_name(v);
      c.bathymetry = v;
    } else if (key == "eta0") {
      c.eta0 = to_double(key, v);
    } else if (key == "left_bc") {
      c.boundary.left.kind = parse_boundary_kind(v);
    } else if (key == "right_bc") {
      c.boundary.right.kind = parse_boundary_kind(v);
    } else if (key == "left_values") {
      c.boundary.left.values = to_doubles(key, v);
    } else if (key == "right_values") {
      c.boundary.right.values = to_doubles(key, v);
    } else if (key == "initial") {
      c.initial = to_doubles(key, v);
    } else if (key == "initial_state") {
      c.initial_state = v;
    } else {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  return parse_config(in);
}

BoundarySpec scenario_boundary(const ExperimentConfig& cfg, ModelId model) {
  const int m = variable_count(model);
  BoundarySpec bc;
  const double ha2 = scenario_ha2(cfg.scenario);
  if (cfg.scenario == Scenario::Custom) {
    bc = cfg.boundary;
  } else if (is_lake(cfg.scenario)) {
    bc.left.kind = BoundaryKind::SubcriticalInlet;
    bc.left.values.assign(static_cast<std::size_t>(m - 1), 0.0);
    bc.right.kind = BoundaryKind::SubcriticalOutlet;
    bc.right.values = {cfg.eta0 - bathymetry_by_name(cfg.bathymetry).elevation(cfg.x_right)};
  } else if (is_subcritical(cfg.scenario)) {
    bc.left.kind = BoundaryKind::SubcriticalInlet;
    bc.left.values = {kSubHu};
    for (double v : moment_discharges(model, kSubHa1, 0.0)) bc.left.values.push_back(v);
    bc.right.kind = BoundaryKind::SubcriticalOutlet;
    bc.right.values = {kSubHOut};
  } else {
    bc.left.kind = BoundaryKind::SupercriticalInflow;
    bc.left.values = {kSuperH, kSuperHu};
    for (double v : moment_discharges(model, kSuperHa1, ha2)) bc.left.values.push_back(v);
    bc.right.kind = BoundaryKind::Transmissive;
  }
  bc.validate(m);
  return bc;
}

Mesh scenario_mesh(const ExperimentConfig& cfg, int n_cells) { return Mesh(cfg.x_left, cfg.x_right, n_cells); }

Solver make_solver(const ExperimentConfig& cfg, ModelId model, int n_cells) {
  return Solver(model, cfg.physics, scenario_mesh(cfg, n_cells), bathymetry_by_name(cfg.bathymetry),
                scenario_boundary(cfg, model), cfg.scheme);
}

StateField scenario_initial(const ExperimentConfig& cfg, ModelId model, const Solver& solver) {
  const Mesh& mesh = solver.mesh();
  const BathymetryField& bathy = solver.bathymetry();
  if (is_lake(cfg.scenario)) return lake_at_rest(mesh, bathy, cfg.eta0, model);

  if (cfg.scenario == Scenario::Custom && !cfg.initial_state.empty()) {
    const CsvTable t = read_csv(cfg.initial_state);
    StateField s = state_from_solution(t, mesh, model);
    StateField full = s;
    fill_ghosts(full, solver.boundary(), bathy);
    return full;
  }

  std::vector<double> init;  // free surface, discharge, moment discharges
  if (cfg.scenario == Scenario::Custom) {
    init = cfg.initial;
  } else {
    init = {is_subcritical(cfg.scenario) ? kSubHOut : kSuperH, 0.0};
    const double ha1 = is_subcritical(cfg.scenario) ? kSubHa1 : kSuperHa1;
    for (double v : moment_discharges(model, ha1, scenario_ha2(cfg.scenario))) init.push_back(v);
  }
  StateField s = solver.make_state();
  for (int r = 0; r < s.rows(); ++r) {
    const double h = init[0] - bathy.average(r);
    if (!(h > 0.0)) throw InvalidArgument("initial free surface lies below the bottom");
    s(r, 0) = h;
    for (int v = 1; v < s.vars(); ++v) s(r, v) = init[v];
  }
  return s;
}

std::optional<StateField> scenario_reference(const ExperimentConfig& cfg, ModelId model, const Solver& solver) {
  if (is_lake(cfg.scenario)) return lake_at_rest(solver.mesh(), solver.bathymetry(), cfg.eta0, model);
  const bool frictionless = !cfg.physics.friction_enabled || cfg.physics.nu == 0.0;
  if (model != ModelId::SWME1 || !frictionless) return std::nullopt;
  if (cfg.scenario != Scenario::Supercritical && cfg.scenario != Scenario::Subcritical) return std::nullopt;

  PrimitiveState anchor;
  double x_anchor = cfg.x_left;
  FlowRegime regime = FlowRegime::Supercritical;
  if (cfg.scenario == Scenario::Supercritical) {
    anchor.h = kSuperH;
    anchor.u = kSuperHu / kSuperH;
    anchor.alpha = {kSuperHa1 / kSuperH, 0.0};
  } else {
    anchor.h = kSubHOut;
    anchor.u = kSubHu / kSubHOut;
    anchor.alpha = {kSubHa1 / kSubHOut, 0.0};
    x_anchor = cfg.x_right;
    regime = FlowRegime::Subcritical;
  }
  return swme1_exact_profile(solver.mesh(), solver.bathymetry(), solver.table(), anchor, x_anchor, cfg.physics.g,
                             regime);
}

StateField transfer_state(const StateField& coarse, const Mesh& coarse_mesh, const Mesh& fine_mesh) {
  if (coarse.rows() != coarse_mesh.total()) throw InvalidArgument("coarse state does not match its mesh");
  const int nc = coarse_mesh.n_cells;
  StateField fine(fine_mesh, coarse.vars());
  for (int s = fine_mesh.first_interior(); s <= fine_mesh.last_interior(); ++s) {
    const double xi = (fine_mesh.center(s) - coarse_mesh.x_left) / coarse_mesh.dx() - 0.5;
    int j = static_cast<int>(std::lround(xi));
    j = std::clamp(j, nc >= 3 ? 1 : 0, nc >= 3 ? nc - 2 : nc - 1);
    const double t = xi - j;
    const int cj = coarse_mesh.first_interior() + j;
    for (int v = 0; v < coarse.vars(); ++v) {
      if (nc < 3) {
        fine(s, v) = coarse(cj, v);
        continue;
      }
      const double a = coarse(cj - 1, v), b = coarse(cj, v), c = coarse(cj + 1, v);
      fine(s, v) = b + 0.5 * t * (c - a) + 0.5 * t * t * (c - 2.0 * b + a);
    }
  }
  return fine;
}

SteadyRun compute_steady(const ExperimentConfig& cfg, ModelId model, int n_cells) {
  Solver solver = make_solver(cfg, model, n_cells);
  SteadyRun out;
  if (cfg.steady_method == SteadyMethod::TimeMarching) {
    RunResult r = solver.advance(scenario_initial(cfg, model, solver), cfg.t_end);
    out.march_steps = r.steps;
    out.state = std::move(r.state);
  } else {
    StateField seed;
    if (is_lake(cfg.scenario)) {
      seed = scenario_initial(cfg, model, solver);
    } else if (auto ref = scenario_reference(cfg, model, solver)) {
      seed = std::move(*ref);
    } else {
      const int nc = std::min(cfg.settle_cells, n_cells);
      Solver coarse = make_solver(cfg, model, nc);
      RunResult r = coarse.advance(scenario_initial(cfg, model, coarse), cfg.t_end);
      out.march_steps = r.steps;
      seed = std::move(r.state);
      if (nc != n_cells) {
        SteadySolveResult settled = coarse.solve_steady(seed);
        seed = transfer_state(settled.state, coarse.mesh(), solver.mesh());
      }
    }
    SteadySolveResult nr = solver.solve_steady(std::move(seed));
    out.newton_iterations = nr.iterations;
    out.state = std::move(nr.state);
  }
  out.residual = residual_norm(solver.residual(out.state));
  out.steady = out.residual <= cfg.steady_flag_tol;
  return out;
}

ConvergenceTable run_convergence(const ExperimentConfig& cfg) {
  if (!is_lake(cfg.scenario) && cfg.scenario != Scenario::Supercritical && cfg.scenario != Scenario::Subcritical) {
    throw InvalidArgument("scenario " + std::string(to_string(cfg.scenario)) + " has no analytic reference");
  }
  if (!is_lake(cfg.scenario) && cfg.model != ModelId::SWME1) {
    throw CapabilityError("exact moving equilibria are available for SWME1 only");
  }
  ConvergenceTable table;
  table.scenario = cfg.scenario;
  table.model = cfg.model;
  table.order = cfg.scheme.weno.order;
  table.flux = cfg.scheme.flux;
  const int m = variable_count(cfg.model);
  for (int n : cfg.mesh_sizes) {
    ConvergenceRow row;
    row.n_cells = n;
    Solver solver = make_solver(cfg, cfg.model, n);
    const StateField reference = *scenario_reference(cfg, cfg.model, solver);
    StateField result;
    if (is_lake(cfg.scenario)) {
      result = solver.advance(reference, cfg.t_end).state;
      row.residual = residual_norm(solver.residual(result));
      row.steady = row.residual <= cfg.steady_flag_tol;
    } else {
      SteadyRun s = compute_steady(cfg, cfg.model, n);
      row.residual = s.residual;
      row.steady = s.steady;
      result = std::move(s.state);
    }
    row.error = l2_error(result, reference, solver.mesh());
    row.order.assign(static_cast<std::size_t>(m), std::nullopt);
    if (!table.rows.empty()) {
      const ConvergenceRow& prev = table.rows.back();
      const double ratio = static_cast<double>(n) / prev.n_cells;
      for (int v = 0; v < m; ++v) row.order[v] = estimated_order(prev.error[v], row.error[v], ratio);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

double PerturbationRun::deviation(int snapshot, int cell, int v) const {
  const int s = mesh.first_interior() + cell;
  return snapshots.at(snapshot).state(s, v) - equilibrium(s, v);
}

double PerturbationRun::max_deviation(int snapshot) const {
  double mx = 0.0;
  for (int i = 0; i < mesh.n_cells; ++i)
    for (int v = 0; v < equilibrium.vars(); ++v) mx = std::max(mx, std::abs(deviation(snapshot, i, v)));
  return mx;
}

PerturbationRun run_perturbation(const ExperimentConfig& cfg, ModelId model) {
  ExperimentConfig marching = cfg;
  marching.scheme.steady_residual_tol = 0.0;
  Solver solver = make_solver(marching, model, cfg.n_cells);

  PerturbationRun run;
  run.model = model;
  run.mesh = solver.mesh();
  if (is_lake(cfg.scenario)) {
    run.equilibrium = scenario_initial(cfg, model, solver);
  } else {
    run.equilibrium = compute_steady(cfg, model, cfg.n_cells).state;
  }
  const double res = residual_norm(solver.residual(run.equilibrium));
  if (res > cfg.steady_flag_tol) {
    std::ostringstream os;
    os << "equilibrium is not steady: residual " << res << " exceeds " << cfg.steady_flag_tol;
    throw SolverError(os.str(), 0);
  }

  StateField state = run.equilibrium;
  const auto [nodes, weights] = gauss_legendre_unit(3);
  const double dx = run.mesh.dx();
  for (int s = run.mesh.first_interior(); s <= run.mesh.last_interior(); ++s) {
    double bump = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) bump += weights[q] * cfg.perturbation(run.mesh.center(s) + nodes[q] * dx);
    state(s, 0) += bump;
  }

  std::vector<double> times = cfg.snapshot_times;
  if (times.empty()) times.push_back(cfg.t_end);
  std::sort(times.begin(), times.end());
  double t = 0.0;
  for (double target : times) {
    if (target > t) {
      state = solver.advance(std::move(state), target, t).state;
      t = target;
    }
    run.snapshots.push_back({target, state});
  }
  return run;
}

std::vector<PerturbationRun> run_comparison(const ExperimentConfig& cfg) {
  std::vector<PerturbationRun> out;
  const std::vector<ModelId> models = cfg.models.empty() ? std::vector<ModelId>{cfg.model} : cfg.models;
  for (ModelId m : models) out.push_back(run_perturbation(cfg, m));
  return out;
}

std::vector<EigenRow> run_eigen_report(const ExperimentConfig& cfg) {
  std::vector<EigenRow> rows;
  const std::vector<ModelId> models = cfg.models.empty() ? std::vector<ModelId>{cfg.model} : cfg.models;
  const Mesh mesh = scenario_mesh(cfg, cfg.n_cells);
  if (cfg.probe_x < mesh.x_left || cfg.probe_x > mesh.x_right) throw InvalidArgument("probe_x lies outside the domain");
  const int cell = std::min(mesh.n_cells - 1, static_cast<int>(std::floor((cfg.probe_x - mesh.x_left) / mesh.dx())));
  const int s = mesh.first_interior() + cell;
  for (ModelId model : models) {
    EigenRow row;
    row.model = model;
    row.x = mesh.center(s);
    const SteadyRun steady = compute_steady(cfg, model, cfg.n_cells);
    row.state = to_primitive(model, steady.state.row(s));
    try {
      const Vec ev = eigenvalues(model, row.state, cfg.physics);
      std::vector<double> lam(ev.data(), ev.data() + ev.size());
      row.lambda.assign(4, std::nullopt);
      if (lam.size() == 3) {
        row.lambda = {lam[0], lam[1], std::nullopt, lam[2]};
      } else if (lam.size() == 4) {
        const bool repeated = std::abs(lam[2] - lam[1]) <= 1e-9 * std::max(1.0, std::abs(lam[1]));
        row.lambda = {lam[0], lam[1], repeated ? std::nullopt : std::optional<double>(lam[2]), lam[3]};
      } else {
        for (std::size_t k = 0; k < lam.size() && k < 4; ++k) row.lambda[k] = lam[k];
      }
    } catch (const HyperbolicityError& e) {
      row.lambda.clear();
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> peak_indices(const std::vector<double>& values, double threshold) {
  std::vector<int> peaks;
  const int n = static_cast<int>(values.size());
  double mx = 0.0;
  for (double v : values) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) return peaks;
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(values[i]);
    if (a < threshold * mx) continue;
    const double l = i > 0 ? std::abs(values[i - 1]) : -1.0;
    const double r = i + 1 < n ? std::abs(values[i + 1]) : -1.0;
    if (a > l && a >= r) peaks.push_back(i);
  }
  return peaks;
}

std::vector<std::string> convergence_columns(ModelId model) {
  std::vector<std::string> cols{"N_e", "err_h", "eoa_h", "err_hu", "eoa_hu"};
  for (int k = 1; k <= moment_count(model); ++k) {
    cols.push_back("err_ha" + std::to_string(k));
    cols.push_back("eoa_ha" + std::to_string(k));
  }
  return cols;
}

std::vector<std::filesystem::path> emit_convergence(const ConvergenceTable& table, const std::filesystem::path& dir) {
  std::ostringstream os;
  const auto cols = convergence_columns(table.model);
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  for (const auto& row : table.rows) {
    os << row.n_cells;
    for (std::size_t v = 0; v < row.error.size(); ++v) {
      os << ',' << format_number(row.error[v]) << ',';
      if (row.order[v]) os << format_number(*row.order[v]);
    }
    os << '\n';
  }
  const auto path = dir / ("convergence_" + std::string(to_string(table.scenario)) + "_" +
                           std::string(to_string(table.model)) + "_weno" + std::to_string(table.order) + "_" +
                           std::string(to_string(table.flux)) + ".csv");
  write_text_file(path, os.str());
  return {path};
}

std::vector<std::filesystem::path> emit_perturbation(const PerturbationRun& run, const ExperimentConfig& cfg) {
  std::vector<std::filesystem::path> paths;
  const QuadratureTable table = QuadratureTable::build(cfg.scheme.weno.order, run.mesh.dx());
  const BathymetryField bathy(run.mesh, table, bathymetry_by_name(cfg.bathymetry));
  const int m = variable_count(run.model);
  const std::string stem = std::string(to_string(cfg.scenario)) + "_" + std::string(to_string(run.model)) + "_N" +
                           std::to_string(run.mesh.n_cells);
  for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
    CsvTable t = solution_table(run.snapshots[k].state, run.model, bathy);
    t.header.push_back("dh");
    t.header.push_back("dhu");
    for (int j = 1; j <= m - 2; ++j) t.header.push_back("dhalpha_" + std::to_string(j));
    for (int i = 0; i < run.mesh.n_cells; ++i)
      for (int v = 0; v < m; ++v) t.rows[i].push_back(run.deviation(static_cast<int>(k), i, v));
    std::ostringstream os;
    write_csv(os, t.header, t.rows);
    const auto path = cfg.out_dir / (stem + "_t" + time_label(run.snapshots[k].time) + ".csv");
    write_text_file(path, os.str());
    paths.push_back(path);
  }
  return paths;
}

std::vector<std::filesystem::path> emit_eigen(const std::vector<EigenRow>& rows, const std::filesystem::path& dir) {
  std::ostringstream os;
  os << "model,x,h,u_m,alpha_1,alpha_2,lambda_1,lambda_2,lambda_3,lambda_4\n";
  for (const auto& r : rows) {
    os << to_string(r.model) << ',' << format_number(r.x) << ',' << format_number(r.state.h) << ','
       << format_number(r.state.u) << ',' << format_number(r.state.alpha[0]) << ',' << format_number(r.state.alpha[1]);
    for (std::size_t k = 0; k < 4; ++k) {
      os << ',';
      if (k < r.lambda.size() && r.lambda[k]) os << format_number(*r.lambda[k]);
      else os << "--";
    }
    os << '\n';
  }
  const auto path = dir / "eigenvalues.csv";
  write_text_file(path, os.str());
  return {path};
}

void print_convergence(std::ostream& os, const ConvergenceTable& table) {
  os << to_string(table.scenario) << ' ' << to_string(table.model) << " GF-WENO" << table.order << ' '
     << to_string(table.flux) << '\n';
  const auto cols = convergence_columns(table.model);
  os << std::setw(6) << cols[0];
  for (std::size_t c = 1; c < cols.size(); ++c) os << std::setw(c % 2 ? 13 : 7) << cols[c];
  os << "  steady\n";
  for (const auto& row : table.rows) {
    os << std::setw(6) << row.n_cells;
    for (std::size_t v = 0; v < row.error.size(); ++v) {
      os << std::setw(13) << std::scientific << std::setprecision(3) << row.error[v];
      if (row.order[v]) os << std::setw(7) << std::fixed << std::setprecision(2) << *row.order[v];
      else os << std::setw(7) << "--";
    }
    os << (row.steady ? "  yes" : "  NO") << '\n';
  }
  os << std::defaultfloat;
}

void print_eigen(std::ostream& os, const std::vector<EigenRow>& rows) {
  os << std::setw(8) << "model" << std::setw(9) << "x";
  for (int k = 1; k <= 4; ++k) os << std::setw(10) << ("lambda_" + std::to_string(k));
  os << '\n';
  for (const auto& r : rows) {
    os << std::setw(8) << to_string(r.model) << std::setw(9) << std::fixed << std::setprecision(3) << r.x;
    if (!r.error.empty()) {
      os << "  " << r.error << '\n';
      continue;
    }
    for (const auto& l : r.lambda) {
      if (l) os << std::setw(10) << std::setprecision(4) << *l;
      else os << std::setw(10) << "--";
    }
    os << '\n';
  }
  os << std::defaultfloat;
}

}  // namespace gfswme
