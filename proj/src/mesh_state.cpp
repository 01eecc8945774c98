#include "gfswme/mesh_state.hpp"

#include <cmath>
#include <sstream>

#include "gfswme/bathymetry.hpp"
#include "gfswme/errors.hpp"

namespace gfswme {

Mesh::Mesh(double left, double right, int cells, int ghosts)
    : x_left(left), x_right(right), n_cells(cells), n_ghost(ghosts) {
  if (!(right > left)) throw InvalidArgument("mesh needs x_right > x_left");
  if (cells < 1) throw InvalidArgument("mesh needs at least one cell");
  if (ghosts < 0) throw InvalidArgument("ghost count must be nonnegative");
}

StateField::StateField(const Mesh& mesh, int n_vars)
    : rows_(mesh.total()), vars_(n_vars), ghost_(mesh.n_ghost),
      data_(static_cast<std::size_t>(mesh.total()) * n_vars, 0.0) {
  if (n_vars < 1) throw InvalidArgument("state needs at least one variable");
}

bool StateField::admissible() const noexcept {
  for (int r = ghost_; r < rows_ - ghost_; ++r) {
    const auto u = row(r);
    if (!(u[0] > 0.0)) return false;
    for (double v : u)
      if (!std::isfinite(v)) return false;
  }
  return true;
}

BoundaryKind parse_boundary_kind(std::string_view name) {
  if (name == "supercritical_inflow") return BoundaryKind::SupercriticalInflow;
  if (name == "subcritical_inlet") return BoundaryKind::SubcriticalInlet;
  if (name == "subcritical_outlet") return BoundaryKind::SubcriticalOutlet;
  if (name == "transmissive") return BoundaryKind::Transmissive;
  if (name == "periodic") return BoundaryKind::Periodic;
  throw InvalidArgument("unknown boundary kind '" + std::string(name) + "'");
}

std::string_view to_string(BoundaryKind kind) noexcept {
  switch (kind) {
    case BoundaryKind::SupercriticalInflow: return "supercritical_inflow";
    case BoundaryKind::SubcriticalInlet: return "subcritical_inlet";
    case BoundaryKind::SubcriticalOutlet: return "subcritical_outlet";
    case BoundaryKind::Transmissive: return "transmissive";
    case BoundaryKind::Periodic: return "periodic";
  }
  return "unknown";
}

int prescribed_count(BoundaryKind kind, int n_vars) {
  switch (kind) {
    case BoundaryKind::SupercriticalInflow: return n_vars;
    case BoundaryKind::SubcriticalInlet: return n_vars - 1;
    case BoundaryKind::SubcriticalOutlet: return 1;
    default: return 0;
  }
}

void BoundarySpec::validate(int n_vars) const {
  auto check = [n_vars](const BoundarySide& side, const char* where) {
    const int want = prescribed_count(side.kind, n_vars);
    if (static_cast<int>(side.values.size()) != want) {
      std::ostringstream os;
      os << where << " boundary '" << to_string(side.kind) << "' needs " << want << " values, got "
         << side.values.size();
      throw InvalidArgument(os.str());
    }
    const bool has_height =
        side.kind == BoundaryKind::SupercriticalInflow || side.kind == BoundaryKind::SubcriticalOutlet;
    if (has_height && !(side.values[0] > 0.0)) {
      throw InvalidArgument(std::string(where) + " boundary prescribes a non-positive height");
    }
  };
  check(left, "left");
  check(right, "right");
  if ((left.kind == BoundaryKind::Periodic) != (right.kind == BoundaryKind::Periodic)) {
    throw InvalidArgument("periodic boundaries must be set on both sides");
  }
}

namespace {

// `b` holds per-row bottom averages, or is empty for a flat bottom.
void fill_side(StateField& state, const BoundarySide& side, std::span<const double> b, bool left_side) {
  const int g = state.n_ghost();
  const int m = state.vars();
  const int n = state.n_cells();
  const int inner = left_side ? g : g + n - 1;
  auto bottom = [&](int r) { return b.empty() ? 0.0 : b[r]; };
  for (int k = 0; k < g; ++k) {
    const int r = left_side ? k : g + n + k;
    auto dst = state.row(r);
    if (side.kind == BoundaryKind::Periodic) {
      const int src = left_side ? r + n : r - n;
      for (int v = 0; v < m; ++v) dst[v] = state(src, v);
      continue;
    }
    const double h_extrapolated = state(inner, 0) + bottom(inner) - bottom(r);
    switch (side.kind) {
      case BoundaryKind::SupercriticalInflow:
        for (int v = 0; v < m; ++v) dst[v] = side.values[v];
        break;
      case BoundaryKind::SubcriticalInlet:
        dst[0] = h_extrapolated;
        for (int v = 1; v < m; ++v) dst[v] = side.values[v - 1];
        break;
      case BoundaryKind::SubcriticalOutlet:
        dst[0] = side.values[0];
        for (int v = 1; v < m; ++v) dst[v] = state(inner, v);
        break;
      default:
        dst[0] = h_extrapolated;
        for (int v = 1; v < m; ++v) dst[v] = state(inner, v);
        break;
    }
  }
}

void fill_all(StateField& state, const BoundarySpec& bc, std::span<const double> b) {
  bc.validate(state.vars());
  if (bc.left.kind == BoundaryKind::Periodic && state.n_ghost() > state.n_cells()) {
    throw InvalidArgument("periodic wrap needs at least as many cells as ghost layers");
  }
  fill_side(state, bc.left, b, true);
  fill_side(state, bc.right, b, false);
}

}  // namespace

void fill_ghosts(StateField& state, const BoundarySpec& bc, const BathymetryField& bathymetry) {
  if (static_cast<int>(bathymetry.averages().size()) != state.rows()) {
    throw InvalidArgument("bathymetry field does not match the state mesh");
  }
  fill_all(state, bc, bathymetry.averages());
}

void fill_ghosts(StateField& state, const BoundarySpec& bc) { fill_all(state, bc, {}); }

std::vector<double> l2_error(const StateField& state, const StateField& reference, const Mesh& mesh) {
  if (state.rows() != reference.rows() || state.vars() != reference.vars() || state.rows() != mesh.total()) {
    throw InvalidArgument("l2_error needs states of identical shape on the given mesh");
  }
  std::vector<double> err(state.vars(), 0.0);
  const double dx = mesh.dx();
  for (int r = mesh.first_interior(); r <= mesh.last_interior(); ++r) {
    for (int v = 0; v < state.vars(); ++v) {
      const double d = state(r, v) - reference(r, v);
      err[v] += dx * d * d;
    }
  }
  for (double& e : err) e = std::sqrt(e);
  return err;
}

std::optional<double> estimated_order(double error_coarse, double error_fine, double ratio) {
  if (!(ratio > 1.0)) throw InvalidArgument("refinement ratio must exceed one");
  if (!(error_coarse >= kErrorNoiseFloor) || !(error_fine >= kErrorNoiseFloor)) return std::nullopt;
  return std::log(error_coarse / error_fine) / std::log(ratio);
}

}  // namespace gfswme
