#include "gfswme/steady_reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gfswme/errors.hpp"

namespace gfswme {

namespace {

constexpr double kMinHeight = 1e-6;
constexpr int kScanSamples = 4000;

double quartic_derivative(double h, double b, const EquilibriumConstants& c, double g) {
  const double a4 = c.C[0] * c.C[0] / (2.0 * g);
  return 4.0 * a4 * h * h * h + 3.0 * h * h + 2.0 * (b - c.E) * h;
}

// Newton steps kept inside [lo, hi], bisection whenever Newton leaves it.
double refine_root(double lo, double hi, double b, const EquilibriumConstants& c, double g) {
  double flo = swme1_quartic(lo, b, c, g);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = swme1_quartic(x, b, c, g);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = quartic_derivative(x, b, c, g);
    double next = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) return next;
    x = next;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) return x;
  }
  return x;
}

}  // namespace

EquilibriumConstants swme1_constants(const PrimitiveState& anchor, double b_anchor, double g) {
  if (!(anchor.h > 0.0)) throw InvalidArgument("anchor height must be positive");
  EquilibriumConstants c;
  c.C0 = anchor.h * anchor.u;
  c.C[0] = anchor.alpha[0] / anchor.h;
  c.E = c.C0 * c.C0 / (2.0 * g * anchor.h * anchor.h) + anchor.h + b_anchor +
        c.C[0] * c.C[0] * anchor.h * anchor.h / (2.0 * g);
  return c;
}

double swme1_quartic(double h, double b, const EquilibriumConstants& c, double g) {
  const double a4 = c.C[0] * c.C[0] / (2.0 * g);
  const double a0 = c.C0 * c.C0 / (2.0 * g);
  return ((a4 * h + 1.0) * h + (b - c.E)) * h * h + a0;
}

std::vector<double> swme1_positive_roots(double b, const EquilibriumConstants& c, double g, double h_max) {
  if (!(h_max > kMinHeight)) throw InvalidArgument("root search interval is empty");
  std::vector<double> roots;
  double x0 = kMinHeight;
  double f0 = swme1_quartic(x0, b, c, g);
  for (int k = 1; k <= kScanSamples; ++k) {
    const double x1 = kMinHeight + (h_max - kMinHeight) * k / kScanSamples;
    const double f1 = swme1_quartic(x1, b, c, g);
    if (f1 == 0.0) {
      roots.push_back(x1);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f0 != 0.0) {
      roots.push_back(refine_root(x0, x1, b, c, g));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

double swme1_exact_height(double b, const EquilibriumConstants& c, double g, double branch_guess, double h_max) {
  const auto roots = swme1_positive_roots(b, c, g, h_max);
  if (roots.empty()) {
    std::ostringstream os;
    os << "no positive equilibrium height for bottom b=" << b << " (transcritical or unreachable state)";
    throw RootFindError(os.str(), std::numeric_limits<double>::quiet_NaN());
  }
  double best = roots.front();
  for (double r : roots)
    if (std::abs(r - branch_guess) < std::abs(best - branch_guess)) best = r;
  return best;
}

StateField lake_at_rest(const Mesh& mesh, const BathymetryField& bathymetry, double eta0, ModelId model) {
  if (!(eta0 > bathymetry.max_interior())) {
    throw InvalidArgument("free surface must lie above the bottom everywhere");
  }
  StateField s(mesh, variable_count(model));
  for (int r = 0; r < mesh.total(); ++r) s(r, 0) = eta0 - bathymetry.average(r);
  return s;
}

StateField swme1_exact_profile(const Mesh& mesh, const BathymetryField& bathymetry, const QuadratureTable& table,
                               const PrimitiveState& anchor, double x_anchor, double g, FlowRegime regime,
                               Sampling sampling) {
  const double b_anchor = bathymetry(x_anchor);
  const double froude2 = (anchor.u * anchor.u) / (g * anchor.h + anchor.alpha[0] * anchor.alpha[0]);
  if ((regime == FlowRegime::Supercritical) != (froude2 > 1.0)) {
    throw InvalidArgument("anchor state does not match the requested flow regime");
  }
  const EquilibriumConstants c = swme1_constants(anchor, b_anchor, g);
  const double h_max = 4.0 * anchor.h;
  const int nq = table.n_nodes();
  const int total = mesh.total();
  const double dx = mesh.dx();

  // Sample positions ordered away from the anchor.
  struct Sample {
    int row, node;
    double x;
  };
  std::vector<Sample> samples;
  for (int r = 0; r < total; ++r) {
    if (sampling == Sampling::CellCenter) {
      samples.push_back({r, 0, mesh.center(r)});
    } else {
      for (int q = 0; q < nq; ++q) samples.push_back({r, q, mesh.center(r) + table.nodes()[q] * dx});
    }
  }
  const bool from_right = x_anchor > 0.5 * (mesh.x_left + mesh.x_right);
  if (from_right) std::reverse(samples.begin(), samples.end());

  std::vector<double> heights(samples.size());
  double guess = anchor.h;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    try {
      guess = swme1_exact_height(bathymetry(samples[k].x), c, g, guess, h_max);
    } catch (const RootFindError& e) {
      throw RootFindError(e.what(), samples[k].x);
    }
    heights[k] = guess;
  }

  StateField s(mesh, 3);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double h = heights[k];
    const double w = sampling == Sampling::CellCenter ? 1.0 : table.weights()[samples[k].node];
    s(samples[k].row, 0) += w * h;
    s(samples[k].row, 1) += w * c.C0;
    s(samples[k].row, 2) += w * c.C[0] * h * h;
  }
  return s;
}

std::vector<std::vector<double>> equilibrium_invariants(ModelId model, std::span<const PrimitiveState> states,
                                                        std::span<const double> bottom, double g) {
  if (model == ModelId::SWME2 || model == ModelId::HSWME2) {
    throw CapabilityError("no closed-form equilibrium invariants for " + std::string(to_string(model)));
  }
  if (states.size() != bottom.size()) throw InvalidArgument("states and bottom samples differ in length");
  const int n_moments = moment_count(model);
  std::vector<std::vector<double>> out(2 + n_moments, std::vector<double>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i) {
    const PrimitiveState& w = states[i];
    double head = 0.5 * w.u * w.u + g * (w.h + bottom[i]);
    if (n_moments >= 1) head += 0.5 * w.alpha[0] * w.alpha[0];
    if (n_moments >= 2) head += 0.3 * w.alpha[1] * w.alpha[1];
    out[0][i] = w.h * w.u;
    out[1][i] = head;
    for (int k = 0; k < n_moments; ++k) out[2 + k][i] = w.alpha[k] / w.h;
  }
  return out;
}

std::vector<std::vector<double>> equilibrium_invariants(const StateField& state, ModelId model,
                                                        const BathymetryField& bathymetry, double g) {
  const Mesh& mesh = bathymetry.mesh();
  std::vector<PrimitiveState> w;
  std::vector<double> b;
  for (int r = mesh.first_interior(); r <= mesh.last_interior(); ++r) {
    w.push_back(to_primitive(model, state.row(r)));
    b.push_back(bathymetry(mesh.center(r)));
  }
  return equilibrium_invariants(model, w, b, g);
}

}  // namespace gfswme
