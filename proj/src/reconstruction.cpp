#include "gfswme/reconstruction.hpp"

#include <array>
#include <sstream>

#include "gfswme/errors.hpp"

namespace gfswme {

namespace {

std::vector<double> evaluation_points(const QuadratureTable& table) {
  std::vector<double> pts(table.nodes().begin(), table.nodes().end());
  pts.push_back(-0.5);
  pts.push_back(0.5);
  return pts;
}

}  // namespace

CellReconstruction::CellReconstruction(int rows, int n_vars, int n_nodes, int radius)
    : rows_(rows), vars_(n_vars), nodes_(n_nodes), weight_stride_((n_nodes + 2) * radius),
      values_(static_cast<std::size_t>(rows) * (n_nodes + 2) * (n_vars + 2), 0.0),
      traces_(static_cast<std::size_t>(rows) * 2 * (n_vars + 2), 0.0),
      eta_weights_(static_cast<std::size_t>(rows) * weight_stride_, 0.0) {}

Reconstructor::Reconstructor(int n_vars, const WenoConfig& config, const QuadratureTable& table)
    : vars_(n_vars), table_(table), stencil_(config, evaluation_points(table)) {
  if (config.order != table.order()) throw InvalidArgument("WENO order and quadrature order differ");
}

void Reconstructor::reconstruct_row(const StateField& state, const BathymetryField& bathymetry, int row,
                                    CellReconstruction& out) const {
  const int p = stencil_.order();
  const int r = stencil_.radius();
  const int np = stencil_.n_points();
  const int nq = table_.n_nodes();
  const int eta = out.eta_slot(), bs = out.b_slot();
  std::array<double, 5> window{};
  std::array<double, 5> bwin{};
  std::array<double, 8> vals{};

  for (int j = 0; j < p; ++j) {
    const int src = row - r + 1 + j;
    bwin[j] = bathymetry.average(src);
    window[j] = state(src, 0) + bwin[j];
  }
  auto omega = out.eta_weights(row);
  stencil_.weights(window.data(), omega.data());
  for (int pt = 0; pt < np; ++pt) {
    const double* w = omega.data() + pt * r;
    const double e = stencil_.evaluate(window.data(), pt, w);
    const double b = stencil_.evaluate(bwin.data(), pt, w);
    out.value(row, pt, eta) = e;
    out.value(row, pt, bs) = b;
    out.value(row, pt, 0) = e - b;
    if (!(e - b > 0.0)) {
      std::ostringstream os;
      os << "non-positive reconstructed height " << (e - b) << " in cell " << (row - state.n_ghost());
      throw PositivityError(os.str(), row - state.n_ghost());
    }
  }
  for (int v = 1; v < vars_; ++v) {
    for (int j = 0; j < p; ++j) window[j] = state(row - r + 1 + j, v);
    stencil_.reconstruct(window.data(), vals.data());
    for (int pt = 0; pt < np; ++pt) out.value(row, pt, v) = vals[pt];
  }
  for (int slot = 0; slot < out.slots(); ++slot) {
    double l = 0.0, rt = 0.0;
    for (int q = 0; q < nq; ++q) {
      const double x = out.value(row, q, slot);
      l += table_.left_basis(q) * x;
      rt += table_.right_basis(q) * x;
    }
    out.trace(row, 0, slot) = l;
    out.trace(row, 1, slot) = rt;
  }
}

void Reconstructor::operator()(const StateField& state, const BathymetryField& bathymetry, CellReconstruction& out,
                               Execution exec) const {
  if (state.vars() != vars_) throw InvalidArgument("state variable count does not match the reconstructor");
  const int r = stencil_.radius();
  if (out.rows() != state.rows() || out.n_vars() != vars_ || out.n_nodes() != table_.n_nodes()) {
    out = CellReconstruction(state.rows(), vars_, table_.n_nodes(), r);
  }
  const int first = r - 1;
  const int last = state.rows() - r;
  if (last < first) throw InvalidArgument("mesh too small for the reconstruction stencil");
  out.set_range(first, last);
  for_each_index(exec, first, last + 1, [&](int row) { reconstruct_row(state, bathymetry, row, out); });
}

CellReconstruction Reconstructor::operator()(const StateField& state, const BathymetryField& bathymetry,
                                             Execution exec) const {
  CellReconstruction out;
  (*this)(state, bathymetry, out, exec);
  return out;
}

CellReconstruction reconstruct_field(const StateField& state, const BathymetryField& bathymetry,
                                     const WenoConfig& config, const QuadratureTable& table, Execution exec) {
  return Reconstructor(state.vars(), config, table)(state, bathymetry, exec);
}

}  // namespace gfswme
