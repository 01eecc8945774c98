#include "gfswme/numerical_flux.hpp"

#include <cmath>
#include <string>

#include "gfswme/errors.hpp"

namespace gfswme {

FluxKind parse_flux_kind(std::string_view name) {
  if (name == "upwind") return FluxKind::Upwind;
  if (name == "central") return FluxKind::Central;
  throw InvalidArgument("unknown numerical flux '" + std::string(name) + "'");
}

std::string_view to_string(FluxKind kind) noexcept { return kind == FluxKind::Upwind ? "upwind" : "central"; }

PrimitiveState mean_state(const PrimitiveState& a, const PrimitiveState& b) {
  PrimitiveState w;
  w.h = 0.5 * (a.h + b.h);
  w.u = 0.5 * (a.u + b.u);
  w.alpha = {0.5 * (a.alpha[0] + b.alpha[0]), 0.5 * (a.alpha[1] + b.alpha[1])};
  return w;
}

Vec numerical_flux_upwind(const Vec& GL, const Vec& GR, const PrimitiveState& wL, const PrimitiveState& wR,
                          ModelId model, const PhysicalParams& p) {
  const LeftEigensystem es = left_eigensystem(model, mean_state(wL, wR), p);
  const Vec cl = es.left * GL;
  const Vec cr = es.left * GR;
  Vec c(cl.size());
  for (int k = 0; k < c.size(); ++k) {
    const double lam = es.lambda(k);
    c(k) = lam > 0.0 ? cl(k) : lam < 0.0 ? cr(k) : 0.5 * (cl(k) + cr(k));
  }
  return es.left.inverse() * c;
}

Vec numerical_flux_central(const Vec& GL, const Vec& GR, const PrimitiveState& wL, const PrimitiveState& wR,
                           ModelId model, const PhysicalParams& p) {
  const PrimitiveState star = mean_state(wL, wR);
  const double lmax = spectral_radius(model, star, p);
  if (!(lmax > 0.0)) throw DegenerateStateError("spectral radius vanishes at the interface state");
  return 0.5 * (GL + GR) - system_matrix(model, star, p) * (GR - GL) / lmax;
}

Vec numerical_flux(FluxKind kind, const Vec& GL, const Vec& GR, const PrimitiveState& wL, const PrimitiveState& wR,
                   ModelId model, const PhysicalParams& p) {
  return kind == FluxKind::Upwind ? numerical_flux_upwind(GL, GR, wL, wR, model, p)
                                  : numerical_flux_central(GL, GR, wL, wR, model, p);
}

}  // namespace gfswme
