#pragma once

#include <span>
#include <vector>

#include "gfswme/bathymetry.hpp"
#include "gfswme/mesh_state.hpp"
#include "gfswme/parallel.hpp"
#include "gfswme/quadrature.hpp"
#include "gfswme/weno.hpp"

namespace gfswme {

/// Point values of every reconstructed quantity on a range of storage cells.
///
/// Slots 0..m-1 hold the conserved variables (slot 0 is h = eta - b), slot m
/// the free surface eta and slot m+1 the bottom b. Points 0..n_q-1 are the
/// Gauss nodes, point n_q the left face and n_q+1 the right face (WENO
/// values). Traces are the nodal Lagrange interpolant extrapolated to the faces.
class CellReconstruction {
 public:
  CellReconstruction() = default;
  CellReconstruction(int rows, int n_vars, int n_nodes, int radius);

  int rows() const noexcept { return rows_; }
  int n_vars() const noexcept { return vars_; }
  int n_nodes() const noexcept { return nodes_; }
  int n_points() const noexcept { return nodes_ + 2; }
  int slots() const noexcept { return vars_ + 2; }
  int eta_slot() const noexcept { return vars_; }
  int b_slot() const noexcept { return vars_ + 1; }
  int left_face() const noexcept { return nodes_; }
  int right_face() const noexcept { return nodes_ + 1; }
  /// First and last storage rows that carry a reconstruction.
  int first_row() const noexcept { return first_; }
  int last_row() const noexcept { return last_; }

  double& value(int row, int point, int slot) noexcept { return values_[index(row, point, slot)]; }
  double value(int row, int point, int slot) const noexcept { return values_[index(row, point, slot)]; }
  /// All slots at one point, contiguous.
  std::span<const double> point(int row, int pt) const noexcept {
    return {values_.data() + index(row, pt, 0), static_cast<std::size_t>(slots())};
  }

  double& trace(int row, int side, int slot) noexcept { return traces_[trace_index(row, side, slot)]; }
  double trace(int row, int side, int slot) const noexcept { return traces_[trace_index(row, side, slot)]; }
  /// side 0 = left face, 1 = right face.
  std::span<const double> traces(int row, int side) const noexcept {
    return {traces_.data() + trace_index(row, side, 0), static_cast<std::size_t>(slots())};
  }

  /// Effective WENO weights used for eta (and therefore for b), n_points x r.
  std::span<double> eta_weights(int row) noexcept {
    return {eta_weights_.data() + static_cast<std::size_t>(row) * weight_stride_, static_cast<std::size_t>(weight_stride_)};
  }
  std::span<const double> eta_weights(int row) const noexcept {
    return {eta_weights_.data() + static_cast<std::size_t>(row) * weight_stride_, static_cast<std::size_t>(weight_stride_)};
  }

  void set_range(int first, int last) noexcept {
    first_ = first;
    last_ = last;
  }

 private:
  std::size_t index(int row, int pt, int slot) const noexcept {
    return (static_cast<std::size_t>(row) * (nodes_ + 2) + pt) * (vars_ + 2) + slot;
  }
  std::size_t trace_index(int row, int side, int slot) const noexcept {
    return (static_cast<std::size_t>(row) * 2 + side) * (vars_ + 2) + slot;
  }

  int rows_ = 0, vars_ = 0, nodes_ = 0, weight_stride_ = 0;
  int first_ = 0, last_ = -1;
  std::vector<double> values_, traces_, eta_weights_;
};

/// Well-balanced componentwise WENO reconstruction: eta = h + b and the
/// remaining conserved variables from their averages, b from its averages with
/// eta's weights, and h = eta - b.
class Reconstructor {
 public:
  Reconstructor(int n_vars, const WenoConfig& config, const QuadratureTable& table);

  const WenoStencil& stencil() const noexcept { return stencil_; }
  const QuadratureTable& table() const noexcept { return table_; }
  int n_vars() const noexcept { return vars_; }

  /// Reconstructs every storage row whose stencil fits inside the state.
  /// Throws PositivityError (interior cell index, may be negative for ghosts)
  /// when h <= 0 at any point.
  void operator()(const StateField& state, const BathymetryField& bathymetry, CellReconstruction& out,
                  Execution exec = Execution::Serial) const;

  CellReconstruction operator()(const StateField& state, const BathymetryField& bathymetry,
                                Execution exec = Execution::Serial) const;

 private:
  void reconstruct_row(const StateField& state, const BathymetryField& bathymetry, int row,
                       CellReconstruction& out) const;

  int vars_;
  QuadratureTable table_;
  WenoStencil stencil_;
};

/// Convenience wrapper building a Reconstructor for one call.
CellReconstruction reconstruct_field(const StateField& state, const BathymetryField& bathymetry,
                                     const WenoConfig& config, const QuadratureTable& table,
                                     Execution exec = Execution::Serial);

}  // namespace gfswme
