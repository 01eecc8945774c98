#pragma once

#include <string_view>

#include "gfswme/linalg.hpp"
#include "gfswme/models.hpp"

namespace gfswme {

enum class FluxKind { Upwind, Central };

FluxKind parse_flux_kind(std::string_view name);
std::string_view to_string(FluxKind kind) noexcept;

/// Arithmetic mean of two primitive states.
PrimitiveState mean_state(const PrimitiveState& a, const PrimitiveState& b);

/// Characteristic upwinding of the global flux at U* = mean(wL, wR):
/// L^-1 Pi+ L GL + L^-1 Pi- L GR with Pi+- the projectors onto the positive
/// and negative characteristic fields. SWE and SWME1 only.
Vec numerical_flux_upwind(const Vec& GL, const Vec& GR, const PrimitiveState& wL, const PrimitiveState& wR,
                          ModelId model, const PhysicalParams& p);

/// (GL + GR)/2 - A(U*) (GR - GL) / |lambda_max(U*)|. Throws
/// DegenerateStateError when the spectral radius vanishes.
Vec numerical_flux_central(const Vec& GL, const Vec& GR, const PrimitiveState& wL, const PrimitiveState& wR,
                           ModelId model, const PhysicalParams& p);

Vec numerical_flux(FluxKind kind, const Vec& GL, const Vec& GR, const PrimitiveState& wL, const PrimitiveState& wR,
                   ModelId model, const PhysicalParams& p);

}  // namespace gfswme
