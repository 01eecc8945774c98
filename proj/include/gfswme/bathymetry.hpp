#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfswme/mesh_state.hpp"
#include "gfswme/quadrature.hpp"

namespace gfswme {

/// Named analytic bottom elevation b(x).
struct BathymetryProfile {
  std::string name;
  std::function<double(double)> elevation;
};

/// 0.05 sin(x - x0) exp(1 - (x - x0)^2), centred at x0 = 12.5 by default.
BathymetryProfile bump_bathymetry(double x0 = 12.5);
BathymetryProfile flat_bathymetry();
/// "bump" or "flat".
BathymetryProfile bathymetry_by_name(std::string_view name);

/// A profile sampled on a mesh: Gauss-node values and Gauss cell averages on
/// every storage cell, ghosts included.
class BathymetryField {
 public:
  BathymetryField() = default;
  BathymetryField(const Mesh& mesh, const QuadratureTable& table, const BathymetryProfile& profile);

  const Mesh& mesh() const noexcept { return mesh_; }
  int n_nodes() const noexcept { return n_nodes_; }
  double operator()(double x) const { return profile_.elevation(x); }
  const BathymetryProfile& profile() const noexcept { return profile_; }

  /// b at the Gauss nodes of storage cell s.
  std::span<const double> nodes(int s) const noexcept {
    return {samples_.data() + static_cast<std::size_t>(s) * n_nodes_, static_cast<std::size_t>(n_nodes_)};
  }
  /// Gauss cell average of b on storage cell s.
  double average(int s) const noexcept { return averages_[s]; }
  std::span<const double> averages() const noexcept { return averages_; }

  /// Largest interior node or center value.
  double max_interior() const;

 private:
  Mesh mesh_;
  BathymetryProfile profile_;
  int n_nodes_ = 0;
  std::vector<double> samples_;
  std::vector<double> averages_;
};

}  // namespace gfswme
