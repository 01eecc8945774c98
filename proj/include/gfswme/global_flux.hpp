#pragma once

#include <span>
#include <vector>

#include "gfswme/linalg.hpp"
#include "gfswme/models.hpp"
#include "gfswme/parallel.hpp"
#include "gfswme/quadrature.hpp"
#include "gfswme/reconstruction.hpp"
#include "gfswme/weno.hpp"

namespace gfswme {

/// One-sided state at an interface.
struct InterfaceTrace {
  Vec U;  ///< conserved variables
  double eta = 0.0;
  double b = 0.0;
};

/// Builds a trace from reconstruction slots (U..., eta, b).
InterfaceTrace make_trace(int n_vars, std::span<const double> slots);

/// Integral of B(U) dU along the straight segment from `left` to `right`,
/// evaluated with the mean of B at the two ends.
Vec noncons_path_integral(ModelId model, const InterfaceTrace& left, const InterfaceTrace& right);

/// Jump [[R]] = R^R - R^L of the integral term across an interface: the
/// bathymetry part in the momentum row minus the non-conservative path integral.
Vec interface_jump(ModelId model, const InterfaceTrace& left, const InterfaceTrace& right, const PhysicalParams& p);

/// Integral term R, cell averages of G = F + R and reconstructed interface
/// values of G on the storage rows of one mesh.
///
/// R_left(s) is R^R at the left face of row s, R_right(s) is R^L at its right
/// face and jump(s) is [[R]] at the left face of s. G_face(s, 0) is the value
/// of G reconstructed from row s at its left face, G_face(s, 1) at its right face.
class GlobalFluxLayer {
 public:
  GlobalFluxLayer() = default;
  GlobalFluxLayer(int rows, int n_vars, int n_nodes);

  int rows() const noexcept { return rows_; }
  int n_vars() const noexcept { return vars_; }
  int n_nodes() const noexcept { return nodes_; }

  int first_row() const noexcept { return first_; }
  int last_row() const noexcept { return last_; }
  int first_face_row() const noexcept { return face_first_; }
  int last_face_row() const noexcept { return face_last_; }

  double* R_node(int row, int q) noexcept { return &R_nodes_[(static_cast<std::size_t>(row) * nodes_ + q) * vars_]; }
  const double* R_node(int row, int q) const noexcept {
    return &R_nodes_[(static_cast<std::size_t>(row) * nodes_ + q) * vars_];
  }
  double* R_left(int row) noexcept { return &R_left_[static_cast<std::size_t>(row) * vars_]; }
  const double* R_left(int row) const noexcept { return &R_left_[static_cast<std::size_t>(row) * vars_]; }
  double* R_right(int row) noexcept { return &R_right_[static_cast<std::size_t>(row) * vars_]; }
  const double* R_right(int row) const noexcept { return &R_right_[static_cast<std::size_t>(row) * vars_]; }
  double* jump(int row) noexcept { return &jump_[static_cast<std::size_t>(row) * vars_]; }
  const double* jump(int row) const noexcept { return &jump_[static_cast<std::size_t>(row) * vars_]; }
  double* G_bar(int row) noexcept { return &G_bar_[static_cast<std::size_t>(row) * vars_]; }
  const double* G_bar(int row) const noexcept { return &G_bar_[static_cast<std::size_t>(row) * vars_]; }
  double* G_face(int row, int side) noexcept { return &G_face_[(static_cast<std::size_t>(row) * 2 + side) * vars_]; }
  const double* G_face(int row, int side) const noexcept {
    return &G_face_[(static_cast<std::size_t>(row) * 2 + side) * vars_];
  }
  /// R at the right face relative to R at the left face (before the scan).
  double* increment(int row) noexcept { return &increment_[static_cast<std::size_t>(row) * vars_]; }
  const double* increment(int row) const noexcept { return &increment_[static_cast<std::size_t>(row) * vars_]; }

  void set_range(int first, int last) noexcept {
    first_ = first;
    last_ = last;
  }
  void set_face_range(int first, int last) noexcept {
    face_first_ = first;
    face_last_ = last;
  }

 private:
  int rows_ = 0, vars_ = 0, nodes_ = 0;
  int first_ = 0, last_ = -1, face_first_ = 0, face_last_ = -1;
  std::vector<double> R_nodes_, R_left_, R_right_, jump_, G_bar_, G_face_, increment_;
};

/// Builds the global flux layer from a reconstruction.
class GlobalFluxAssembler {
 public:
  GlobalFluxAssembler(ModelId model, const PhysicalParams& params, const WenoConfig& config,
                      const QuadratureTable& table);

  ModelId model() const noexcept { return model_; }
  const PhysicalParams& params() const noexcept { return params_; }

  /// Local increments of R inside each cell (parallel), interface jumps
  /// (parallel), then a left-to-right scan seeded with R = 0 at the left face
  /// of the first reconstructed row.
  void accumulate_R(const CellReconstruction& recon, GlobalFluxLayer& layer, Execution exec = Execution::Serial) const;

  /// G_bar = sum_q w_q (F(U_q) + R_q) on every reconstructed row.
  void cell_average_G(const CellReconstruction& recon, GlobalFluxLayer& layer,
                      Execution exec = Execution::Serial) const;

  /// Componentwise WENO values of G_bar at both faces of every row whose
  /// stencil lies inside the reconstructed range.
  void reconstruct_G_interfaces(GlobalFluxLayer& layer, Execution exec = Execution::Serial) const;

  /// All three phases.
  void assemble(const CellReconstruction& recon, GlobalFluxLayer& layer, Execution exec = Execution::Serial) const;

  /// Source-and-non-conservative integrand Q = -H at node theta of a row, as
  /// used by accumulate_R (momentum bathymetry part without the b^2/2 term).
  Vec node_integrand(const CellReconstruction& recon, int row, int theta) const;

 private:
  void local_increments(const CellReconstruction& recon, GlobalFluxLayer& layer, int row) const;

  ModelId model_;
  PhysicalParams params_;
  QuadratureTable table_;
  WenoStencil face_stencil_;
};

}  // namespace gfswme
