#pragma once

#include <array>
#include <span>
#include <string_view>

#include "gfswme/linalg.hpp"

namespace gfswme {

/// The five shipped balance-law systems.
enum class ModelId { SWE, SWME1, SWME2, HSWME2, SWLME2 };

ModelId parse_model(std::string_view name);
std::string_view to_string(ModelId id) noexcept;

/// Conserved variable count m: 2 for SWE, 3 for SWME1, 4 for the second-order models.
constexpr int variable_count(ModelId id) noexcept {
  switch (id) {
    case ModelId::SWE: return 2;
    case ModelId::SWME1: return 3;
    default: return 4;
  }
}

constexpr int moment_count(ModelId id) noexcept { return variable_count(id) - 2; }

/// True for the models whose spectrum is available in closed form.
constexpr bool has_analytic_eigenvalues(ModelId id) noexcept { return id != ModelId::SWME2; }

/// True for the models with a closed-form left eigensystem (upwind flux support).
constexpr bool has_left_eigensystem(ModelId id) noexcept { return id == ModelId::SWE || id == ModelId::SWME1; }

struct PhysicalParams {
  double g = 9.81;
  double nu = 0.0;           ///< kinematic viscosity
  double lambda_slip = 1.0;  ///< slip length
  bool friction_enabled = false;

  void validate() const;
};

/// Height, mean velocity and up to two Legendre moments of the vertical profile.
struct PrimitiveState {
  double h = 1.0;
  double u = 0.0;
  std::array<double, 2> alpha{0.0, 0.0};
};

/// Conserved (h, hu, h alpha_1, ...) -> primitive. Throws PositivityError for h <= 0.
PrimitiveState to_primitive(ModelId id, std::span<const double> conserved);
PrimitiveState to_primitive(ModelId id, const Vec& conserved);
Vec to_conserved(ModelId id, const PrimitiveState& w);

/// Conservative flux F(U).
Vec flux(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// Matrix B(U) of the non-conservative products B(U) dU/dx on the right-hand side.
Mat noncons_matrix(ModelId id, const PrimitiveState& w);

/// (nu/lambda) P(U); zero when friction is disabled.
Vec friction(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// S = -g h db/dx e_2 - (nu/lambda) P(U).
Vec source(ModelId id, const PrimitiveState& w, double db_dx, const PhysicalParams& p);

/// Closed-form quasi-linear matrix A = dF/dU - B (HSWME2: the regularised matrix).
Mat system_matrix(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// Flux Jacobian dF/dU in closed form.
Mat flux_jacobian(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// Eigenvalues of A sorted in descending order. Analytic for every model but
/// SWME2, whose spectrum is computed numerically; a complex pair throws
/// HyperbolicityError.
Vec eigenvalues(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// Max |lambda| of A.
double spectral_radius(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// Real eigenvalues of a general small matrix, descending. Throws
/// HyperbolicityError (carrying `w`) when a complex pair appears.
Vec numeric_eigenvalues(const Mat& a, const PrimitiveState& w);

struct LeftEigensystem {
  Mat left;    ///< rows are left eigenvectors: left * A = diag(lambda) * left
  Vec lambda;  ///< matching eigenvalues, descending
};

/// Closed-form eigensystem; SWE and SWME1 only (CapabilityError otherwise).
LeftEigensystem left_eigensystem(ModelId id, const PrimitiveState& w, const PhysicalParams& p);

/// u(zeta) = u_m + alpha_1 (1 - 2 zeta) + alpha_2 (6 zeta^2 - 6 zeta + 1).
double velocity_profile(const PrimitiveState& w, double zeta);

}  // namespace gfswme
