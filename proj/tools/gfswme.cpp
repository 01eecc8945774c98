#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfswme/csv_io.hpp"
#include "gfswme/errors.hpp"
#include "gfswme/experiments.hpp"
#include "gfswme/steady_reference.hpp"

using namespace gfswme;

namespace {

std::vector<ModelId> parse_models(const std::string& list) {
  std::vector<ModelId> out;
  std::string item;
  std::istringstream ss(list);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_model(item));
  if (out.empty()) throw InvalidArgument("empty model list");
  return out;
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(list);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

void report_paths(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p.string() << '\n';
}

void print_errors(const std::vector<double>& e) {
  std::printf("L2 error:");
  for (double v : e) std::printf(" %.3e", v);
  std::printf("\n");
}

void write_final(const ExperimentConfig& cfg, const Solver& solver, const StateField& state, const std::string& tag) {
  const auto path = cfg.out_dir / (std::string(to_string(cfg.scenario)) + "_" + std::string(to_string(solver.model())) +
                                   "_N" + std::to_string(solver.mesh().n_cells) + "_" + tag + ".csv");
  write_solution_csv(path, state, solver.model(), solver.bathymetry());
  std::cout << "wrote " << path.string() << '\n';
}

int run_command(ExperimentConfig cfg) {
  switch (cfg.scenario) {
    case Scenario::LakeAtRest:
    case Scenario::Custom: {
      if (!cfg.initial_state.empty()) {
        const Mesh mesh = mesh_from_solution(read_csv(cfg.initial_state));
        cfg.n_cells = mesh.n_cells;
        cfg.x_left = mesh.x_left;
        cfg.x_right = mesh.x_right;
      }
      Solver solver = make_solver(cfg, cfg.model, cfg.n_cells);
      const StateField init = scenario_initial(cfg, cfg.model, solver);
      const RunResult r = solver.advance(init, cfg.t_end);
      std::printf("t=%.6g steps=%ld residual=%.3e%s\n", r.time, r.steps, residual_norm(solver.residual(r.state)),
                  r.steady ? " (steady)" : "");
      if (auto ref = scenario_reference(cfg, cfg.model, solver)) print_errors(l2_error(r.state, *ref, solver.mesh()));
      write_final(cfg, solver, r.state, "final");
      return 0;
    }
    case Scenario::LarPerturbation: {
      const PerturbationRun run = run_perturbation(cfg, cfg.model);
      for (std::size_t k = 0; k < run.snapshots.size(); ++k)
        std::printf("t=%.6g max deviation %.3e\n", run.snapshots[k].time, run.max_deviation(static_cast<int>(k)));
      report_paths(emit_perturbation(run, cfg));
      return 0;
    }
    case Scenario::Supercritical:
    case Scenario::Subcritical:
    case Scenario::SupercriticalFriction: {
      Solver solver = make_solver(cfg, cfg.model, cfg.n_cells);
      const SteadyRun s = compute_steady(cfg, cfg.model, cfg.n_cells);
      std::printf("steady residual %.3e%s (march steps %ld, newton iterations %d)\n", s.residual,
                  s.steady ? "" : " NOT STEADY", s.march_steps, s.newton_iterations);
      if (auto ref = scenario_reference(cfg, cfg.model, solver)) print_errors(l2_error(s.state, *ref, solver.mesh()));
      write_final(cfg, solver, s.state, "steady");
      if (cfg.perturbation.amplitude != 0.0) {
        const PerturbationRun run = run_perturbation(cfg, cfg.model);
        for (std::size_t k = 0; k < run.snapshots.size(); ++k)
          std::printf("t=%.6g max deviation %.3e\n", run.snapshots[k].time, run.max_deviation(static_cast<int>(k)));
        report_paths(emit_perturbation(run, cfg));
      }
      return s.steady ? 0 : 2;
    }
    case Scenario::PerturbationComparison: {
      for (const auto& run : run_comparison(cfg)) {
        const int last = static_cast<int>(run.snapshots.size()) - 1;
        std::printf("%s: max deviation at t=%.6g %.3e\n", std::string(to_string(run.model)).c_str(),
                    run.snapshots.back().time, run.max_deviation(last));
        report_paths(emit_perturbation(run, cfg));
      }
      return 0;
    }
    case Scenario::EigenvalueReport: {
      const auto rows = run_eigen_report(cfg);
      print_eigen(std::cout, rows);
      report_paths(emit_eigen(rows, cfg.out_dir));
      return 0;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global-flux WENO finite volume solver for shallow water moment models"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a scenario described by a key=value config file");
  run->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  std::string scenario = "supercritical", model = "swme1", flux = "central", weights = "nonlinear", sizes, out = "out";
  std::string method = "newton";
  int order = 5;
  auto* conv = app.add_subcommand("convergence", "Error and order table against the exact steady state");
  conv->add_option("--scenario", scenario, "lake_at_rest, supercritical or subcritical")->capture_default_str();
  conv->add_option("--model", model, "Model")->capture_default_str();
  conv->add_option("--order", order, "WENO order (1, 3, 5)")->capture_default_str();
  conv->add_option("--flux", flux, "upwind or central")->capture_default_str();
  conv->add_option("--weights", weights, "nonlinear, linear or face_only")->capture_default_str();
  conv->add_option("--meshes", sizes, "Comma-separated cell counts");
  conv->add_option("--method", method, "newton or march")->capture_default_str();
  conv->add_option("--out", out, "Output directory")->capture_default_str();

  std::string models = "swme1,swlme2,hswme2,swme2";
  int n_cells = 100;
  double amplitude = 1e-3;
  auto* cmp = app.add_subcommand("compare", "Perturbation of the friction steady state for several models");
  cmp->add_option("--models", models, "Comma-separated models")->capture_default_str();
  cmp->add_option("--n-cells", n_cells, "Cells")->capture_default_str();
  cmp->add_option("--amplitude", amplitude, "Bump amplitude")->capture_default_str();
  cmp->add_option("--out", out, "Output directory")->capture_default_str();

  auto* eig = app.add_subcommand("eigen", "Eigenvalues at x=23 of the friction steady states");
  eig->add_option("--models", models, "Comma-separated models")->capture_default_str();
  eig->add_option("--n-cells", n_cells, "Cells")->capture_default_str();
  eig->add_option("--out", out, "Output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(load_config(config_path));

    if (*conv) {
      ExperimentConfig cfg = scenario_preset(parse_scenario(scenario), parse_model(model));
      cfg.scheme.weno.order = order;
      cfg.scheme.flux = parse_flux_kind(flux);
      cfg.scheme.weno.mode = parse_weight_mode(weights);
      cfg.steady_method = parse_steady_method(method);
      if (!sizes.empty()) cfg.mesh_sizes = parse_sizes(sizes);
      cfg.out_dir = out;
      cfg.validate();
      const ConvergenceTable table = run_convergence(cfg);
      print_convergence(std::cout, table);
      report_paths(emit_convergence(table, cfg.out_dir));
      for (const auto& row : table.rows)
        if (!row.steady) return 2;
      return 0;
    }

    if (*cmp) {
      ExperimentConfig cfg = scenario_preset(Scenario::PerturbationComparison);
      cfg.models = parse_models(models);
      cfg.n_cells = n_cells;
      cfg.perturbation.amplitude = amplitude;
      cfg.out_dir = out;
      cfg.validate();
      return run_command(cfg);
    }

    if (*eig) {
      ExperimentConfig cfg = scenario_preset(Scenario::EigenvalueReport);
      cfg.models = parse_models(models);
      cfg.n_cells = n_cells;
      cfg.out_dir = out;
      cfg.validate();
      return run_command(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
