#include "gfswme/bathymetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gfswme/errors.hpp"

namespace gfswme {

BathymetryProfile bump_bathymetry(double x0) {
  return {"bump", [x0](double x) {
            const double d = x - x0;
            return 0.05 * std::sin(d) * std::exp(1.0 - d * d);
          }};
}

BathymetryProfile flat_bathymetry() {
  return {"flat", [](double) { return 0.0; }};
}

BathymetryProfile bathymetry_by_name(std::string_view name) {
  if (name == "bump") return bump_bathymetry();
  if (name == "flat") return flat_bathymetry();
  throw InvalidArgument("unknown bathymetry '" + std::string(name) + "'");
}

BathymetryField::BathymetryField(const Mesh& mesh, const QuadratureTable& table, const BathymetryProfile& profile)
    : mesh_(mesh), profile_(profile), n_nodes_(table.n_nodes()) {
  if (!profile_.elevation) throw InvalidArgument("bathymetry profile has no elevation function");
  const int total = mesh.total();
  const double dx = mesh.dx();
  samples_.resize(static_cast<std::size_t>(total) * n_nodes_);
  averages_.resize(total);
  for (int s = 0; s < total; ++s) {
    double* b = samples_.data() + static_cast<std::size_t>(s) * n_nodes_;
    for (int q = 0; q < n_nodes_; ++q) b[q] = profile_.elevation(mesh.center(s) + table.nodes()[q] * dx);
    averages_[s] = table.average({b, static_cast<std::size_t>(n_nodes_)});
  }
}

double BathymetryField::max_interior() const {
  double m = -std::numeric_limits<double>::infinity();
  for (int s = mesh_.first_interior(); s <= mesh_.last_interior(); ++s) {
    m = std::max(m, profile_.elevation(mesh_.center(s)));
    for (double b : nodes(s)) m = std::max(m, b);
  }
  return m;
}

}  // namespace gfswme
