#include "gfswme/global_flux.hpp"

#include <array>

#include "gfswme/errors.hpp"

namespace gfswme {

namespace {

constexpr std::array<double, 2> kFacePoints{-0.5, 0.5};

}  // namespace

InterfaceTrace make_trace(int n_vars, std::span<const double> slots) {
  InterfaceTrace t;
  t.U.resize(n_vars);
  for (int v = 0; v < n_vars; ++v) t.U(v) = slots[v];
  t.eta = slots[n_vars];
  t.b = slots[n_vars + 1];
  return t;
}

Vec noncons_path_integral(ModelId model, const InterfaceTrace& left, const InterfaceTrace& right) {
  const Mat mean = 0.5 * (noncons_matrix(model, to_primitive(model, left.U)) +
                          noncons_matrix(model, to_primitive(model, right.U)));
  return mean * (right.U - left.U);
}

Vec interface_jump(ModelId model, const InterfaceTrace& left, const InterfaceTrace& right, const PhysicalParams& p) {
  Vec j = -noncons_path_integral(model, left, right);
  j(0) = 0.0;
  j(1) += p.g * 0.5 * (left.eta + right.eta) * (right.b - left.b) - p.g * 0.5 * (right.b * right.b - left.b * left.b);
  return j;
}

GlobalFluxLayer::GlobalFluxLayer(int rows, int n_vars, int n_nodes)
    : rows_(rows), vars_(n_vars), nodes_(n_nodes),
      R_nodes_(static_cast<std::size_t>(rows) * n_nodes * n_vars, 0.0),
      R_left_(static_cast<std::size_t>(rows) * n_vars, 0.0),
      R_right_(R_left_.size(), 0.0),
      jump_(R_left_.size(), 0.0),
      G_bar_(R_left_.size(), 0.0),
      G_face_(2 * R_left_.size(), 0.0),
      increment_(R_left_.size(), 0.0) {}

GlobalFluxAssembler::GlobalFluxAssembler(ModelId model, const PhysicalParams& params, const WenoConfig& config,
                                         const QuadratureTable& table)
    : model_(model), params_(params), table_(table), face_stencil_(config, kFacePoints) {
  params_.validate();
}

Vec GlobalFluxAssembler::node_integrand(const CellReconstruction& recon, int row, int theta) const {
  const int m = recon.n_vars();
  const int nq = table_.n_nodes();
  Vec dU = Vec::Zero(m);
  double db = 0.0;
  for (int s = 0; s < nq; ++s) {
    const double d = table_.derivative(theta, s);
    for (int v = 0; v < m; ++v) dU(v) += d * recon.value(row, s, v);
    db += d * recon.value(row, s, recon.b_slot());
  }
  const PrimitiveState w = to_primitive(model_, recon.point(row, theta).first(m));
  Vec q = -(noncons_matrix(model_, w) * dU) + friction(model_, w, params_);
  q(0) = 0.0;
  q(1) += params_.g * recon.value(row, theta, recon.eta_slot()) * db;
  return q;
}

void GlobalFluxAssembler::local_increments(const CellReconstruction& recon, GlobalFluxLayer& layer, int row) const {
  const int m = recon.n_vars();
  const int nq = table_.n_nodes();
  const int bs = recon.b_slot();
  std::array<Vec, 3> q;
  for (int theta = 0; theta < nq; ++theta) q[theta] = node_integrand(recon, row, theta);

  const double g = params_.g;
  const double b_left = recon.trace(row, 0, bs);
  const double b_right = recon.trace(row, 1, bs);
  for (int node = 0; node < nq; ++node) {
    double* R = layer.R_node(row, node);
    for (int v = 0; v < m; ++v) {
      double s = 0.0;
      for (int theta = 0; theta < nq; ++theta) s += table_.partial_integral(node, theta) * q[theta](v);
      R[v] = s;
    }
    const double b = recon.value(row, node, bs);
    R[1] -= g * 0.5 * (b * b - b_left * b_left);
  }
  double* inc = layer.increment(row);
  for (int v = 0; v < m; ++v) {
    double s = 0.0;
    for (int theta = 0; theta < nq; ++theta) s += table_.full_integral(theta) * q[theta](v);
    inc[v] = s;
  }
  inc[1] -= g * 0.5 * (b_right * b_right - b_left * b_left);
}

void GlobalFluxAssembler::accumulate_R(const CellReconstruction& recon, GlobalFluxLayer& layer, Execution exec) const {
  const int m = recon.n_vars();
  if (layer.rows() != recon.rows() || layer.n_vars() != m || layer.n_nodes() != recon.n_nodes()) {
    layer = GlobalFluxLayer(recon.rows(), m, recon.n_nodes());
  }
  const int first = recon.first_row();
  const int last = recon.last_row();
  layer.set_range(first, last);

  for_each_index(exec, first, last + 1, [&](int row) { local_increments(recon, layer, row); });
  for_each_index(exec, first + 1, last + 1, [&](int row) {
    const InterfaceTrace left = make_trace(m, recon.traces(row - 1, 1));
    const InterfaceTrace right = make_trace(m, recon.traces(row, 0));
    const Vec j = interface_jump(model_, left, right, params_);
    for (int v = 0; v < m; ++v) layer.jump(row)[v] = j(v);
  });
  for (int v = 0; v < m; ++v) layer.jump(first)[v] = 0.0;

  for (int v = 0; v < m; ++v) layer.R_left(first)[v] = 0.0;
  for (int row = first; row <= last; ++row) {
    for (int v = 0; v < m; ++v) layer.R_right(row)[v] = layer.R_left(row)[v] + layer.increment(row)[v];
    if (row < last) {
      for (int v = 0; v < m; ++v) layer.R_left(row + 1)[v] = layer.R_right(row)[v] + layer.jump(row + 1)[v];
    }
  }

  for_each_index(exec, first, last + 1, [&](int row) {
    const double* base = layer.R_left(row);
    for (int node = 0; node < recon.n_nodes(); ++node) {
      double* R = layer.R_node(row, node);
      for (int v = 0; v < m; ++v) R[v] += base[v];
    }
  });
}

void GlobalFluxAssembler::cell_average_G(const CellReconstruction& recon, GlobalFluxLayer& layer,
                                         Execution exec) const {
  const int m = recon.n_vars();
  const int nq = table_.n_nodes();
  for_each_index(exec, layer.first_row(), layer.last_row() + 1, [&](int row) {
    double* G = layer.G_bar(row);
    for (int v = 0; v < m; ++v) G[v] = 0.0;
    for (int node = 0; node < nq; ++node) {
      const Vec f = flux(model_, to_primitive(model_, recon.point(row, node).first(m)), params_);
      const double* R = layer.R_node(row, node);
      const double w = table_.weights()[node];
      for (int v = 0; v < m; ++v) G[v] += w * (f(v) + R[v]);
    }
  });
}

void GlobalFluxAssembler::reconstruct_G_interfaces(GlobalFluxLayer& layer, Execution exec) const {
  const int m = layer.n_vars();
  const int r = face_stencil_.radius();
  const int p = face_stencil_.order();
  const int first = layer.first_row() + r - 1;
  const int last = layer.last_row() - r + 1;
  if (last < first) throw InvalidArgument("mesh too small for the global flux reconstruction");
  layer.set_face_range(first, last);
  for_each_index(exec, first, last + 1, [&](int row) {
    std::array<double, 5> window{};
    std::array<double, 2> faces{};
    for (int v = 0; v < m; ++v) {
      for (int j = 0; j < p; ++j) window[j] = layer.G_bar(row - r + 1 + j)[v];
      face_stencil_.reconstruct(window.data(), faces.data());
      layer.G_face(row, 0)[v] = faces[0];
      layer.G_face(row, 1)[v] = faces[1];
    }
  });
}

void GlobalFluxAssembler::assemble(const CellReconstruction& recon, GlobalFluxLayer& layer, Execution exec) const {
  accumulate_R(recon, layer, exec);
  cell_average_G(recon, layer, exec);
  reconstruct_G_interfaces(layer, exec);
}

}  // namespace gfswme
