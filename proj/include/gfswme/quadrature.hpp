#pragma once

#include <span>
#include <utility>
#include <vector>

namespace gfswme {

/// Gauss-Legendre rule on one cell plus the Lagrange machinery on its nodes.
///
/// Nodes live in reference coordinates xi in [-1/2, 1/2]; physical position is
/// x_i + xi * dx. Derivative and integral entries are already scaled by dx.
class QuadratureTable {
 public:
  /// Builds the table for reconstruction order p in {1, 3, 5}: (p+1)/2 nodes.
  static QuadratureTable build(int order, double dx);

  int order() const noexcept { return order_; }
  int n_nodes() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }

  /// Reference node coordinates in [-1/2, 1/2].
  std::span<const double> nodes() const noexcept { return nodes_; }
  /// Unit-cell weights (sum to one).
  std::span<const double> weights() const noexcept { return weights_; }

  /// d/dx L_s evaluated at node theta.
  double derivative(int theta, int s) const noexcept { return deriv_[theta * n_ + s]; }
  /// Integral of L_theta from the left interface to node q.
  double partial_integral(int q, int theta) const noexcept { return partial_[q * n_ + theta]; }
  /// Integral of L_theta over the whole cell (= dx * w_theta).
  double full_integral(int theta) const noexcept { return full_[theta]; }
  /// L_theta at the left / right interface.
  double left_basis(int theta) const noexcept { return left_[theta]; }
  double right_basis(int theta) const noexcept { return right_[theta]; }

  /// Interpolant of nodal samples evaluated at (left, right) interfaces.
  std::pair<double, double> lagrange_eval_at_interfaces(std::span<const double> samples) const;
  /// Derivative of the nodal interpolant at every node.
  std::vector<double> derivative_at_nodes(std::span<const double> samples) const;
  /// Gauss rule applied to nodal samples: cell average.
  double average(std::span<const double> samples) const;

 private:
  int order_ = 1;
  int n_ = 1;
  double dx_ = 1.0;
  std::vector<double> nodes_, weights_, deriv_, partial_, full_, left_, right_;
};

/// Gauss-Legendre nodes and weights on [-1/2, 1/2] with n points, n in 1..3.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int n);

}  // namespace gfswme
