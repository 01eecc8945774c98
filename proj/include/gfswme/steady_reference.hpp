#pragma once

#include <array>
#include <span>
#include <vector>

#include "gfswme/bathymetry.hpp"
#include "gfswme/mesh_state.hpp"
#include "gfswme/models.hpp"
#include "gfswme/quadrature.hpp"

namespace gfswme {

/// Constants of a moving equilibrium: discharge C0 = h u_m, C_k = alpha_k / h
/// and the total head E anchored at a reference station.
struct EquilibriumConstants {
  double C0 = 0.0;
  std::array<double, 2> C{0.0, 0.0};
  double E = 0.0;
};

/// Constants of the SWME1 equilibrium through the state `anchor` over bottom `b_anchor`.
EquilibriumConstants swme1_constants(const PrimitiveState& anchor, double b_anchor, double g);

/// (C1^2/2g) h^4 + h^3 + (b - E) h^2 + C0^2/2g.
double swme1_quartic(double h, double b, const EquilibriumConstants& c, double g);

/// Every positive root of the quartic in (1e-6, h_max), ascending.
std::vector<double> swme1_positive_roots(double b, const EquilibriumConstants& c, double g, double h_max);

/// Positive root of the quartic nearest `branch_guess`, searched on (1e-6, h_max).
/// Throws RootFindError when none exists.
double swme1_exact_height(double b, const EquilibriumConstants& c, double g, double branch_guess, double h_max);

enum class FlowRegime { Supercritical, Subcritical };

/// How reference values are attached to cells.
enum class Sampling {
  CellAverage,  ///< Gauss average of the node values (the scheme's own rule)
  CellCenter,   ///< point value at the cell center
};

/// h = eta0 - b with zero velocity and moments on every storage cell, cell
/// averages taken with the field's Gauss rule. Throws InvalidArgument when
/// eta0 does not exceed the bottom.
StateField lake_at_rest(const Mesh& mesh, const BathymetryField& bathymetry, double eta0, ModelId model);

/// SWME1 moving equilibrium through `anchor` located at `x_anchor`. Heights are
/// continued node by node away from the anchor. The regime is checked at the
/// anchor. Ghost rows are filled with the same construction.
StateField swme1_exact_profile(const Mesh& mesh, const BathymetryField& bathymetry, const QuadratureTable& table,
                               const PrimitiveState& anchor, double x_anchor, double g, FlowRegime regime,
                               Sampling sampling = Sampling::CellAverage);

/// Invariants of the model's moving equilibria, one row per invariant:
/// SWE (h u, u^2/2 + g(h + b)); SWME1 adds alpha_1^2/2 to the head and
/// alpha_1/h; SWLME2 adds alpha_1^2/2 + 3/10 alpha_2^2 and alpha_1/h, alpha_2/h.
/// Throws CapabilityError for SWME2 and HSWME2.
std::vector<std::vector<double>> equilibrium_invariants(ModelId model, std::span<const PrimitiveState> states,
                                                        std::span<const double> bottom, double g);

/// Same on the interior cells of a state, primitives from cell averages and b at centers.
std::vector<std::vector<double>> equilibrium_invariants(const StateField& state, ModelId model,
                                                        const BathymetryField& bathymetry, double g);

}  // namespace gfswme
