#include "gfswme/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "gfswme/errors.hpp"

namespace gfswme {

namespace {

void require_positive_height(double h) {
  if (!(h > 0.0)) {
    std::ostringstream os;
    os << "non-positive water height h=" << h;
    throw PositivityError(os.str(), -1);
  }
}

Vec sorted_descending(Vec v) {
  std::sort(v.data(), v.data() + v.size(), [](double a, double b) { return a > b; });
  return v;
}

}  // namespace

ModelId parse_model(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "swe") return ModelId::SWE;
  if (s == "swme1") return ModelId::SWME1;
  if (s == "swme2") return ModelId::SWME2;
  if (s == "hswme2") return ModelId::HSWME2;
  if (s == "swlme2") return ModelId::SWLME2;
  throw InvalidArgument("unknown model '" + std::string(name) + "'");
}

std::string_view to_string(ModelId id) noexcept {
  switch (id) {
    case ModelId::SWE: return "SWE";
    case ModelId::SWME1: return "SWME1";
    case ModelId::SWME2: return "SWME2";
    case ModelId::HSWME2: return "HSWME2";
    case ModelId::SWLME2: return "SWLME2";
  }
  return "?";
}

void PhysicalParams::validate() const {
  if (!(g > 0.0)) throw InvalidArgument("gravitational acceleration must be positive");
  if (friction_enabled) {
    if (!(nu >= 0.0)) throw InvalidArgument("viscosity must be non-negative");
    if (!(lambda_slip > 0.0)) throw InvalidArgument("slip length must be positive");
  }
}

PrimitiveState to_primitive(ModelId id, std::span<const double> c) {
  const double h = c[0];
  require_positive_height(h);
  PrimitiveState w;
  w.h = h;
  w.u = c[1] / h;
  for (int k = 0; k < moment_count(id); ++k) w.alpha[k] = c[2 + k] / h;
  return w;
}

PrimitiveState to_primitive(ModelId id, const Vec& c) {
  return to_primitive(id, std::span<const double>(c.data(), static_cast<std::size_t>(c.size())));
}

Vec to_conserved(ModelId id, const PrimitiveState& w) {
  Vec c(variable_count(id));
  c(0) = w.h;
  c(1) = w.h * w.u;
  for (int k = 0; k < moment_count(id); ++k) c(2 + k) = w.h * w.alpha[k];
  return c;
}

Vec flux(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  require_positive_height(w.h);
  const double h = w.h, u = w.u, a1 = w.alpha[0], a2 = w.alpha[1], g = p.g;
  Vec f(variable_count(id));
  f(0) = h * u;
  f(1) = h * u * u + 0.5 * g * h * h;
  switch (id) {
    case ModelId::SWE:
      break;
    case ModelId::SWME1:
      f(1) += h * a1 * a1 / 3.0;
      f(2) = 2.0 * h * u * a1;
      break;
    case ModelId::SWME2:
      f(1) += h * a1 * a1 / 3.0 + h * a2 * a2 / 5.0;
      f(2) = 2.0 * h * u * a1 + 0.8 * h * a1 * a2;
      f(3) = 2.0 * h * u * a2 + 2.0 / 3.0 * h * a1 * a1 + 2.0 / 7.0 * h * a2 * a2;
      break;
    case ModelId::HSWME2:
      f(1) += h * a1 * a1 / 3.0;
      f(2) = 2.0 * h * u * a1;
      f(3) = 2.0 / 3.0 * h * a1 * a1;
      break;
    case ModelId::SWLME2:
      f(1) += h * a1 * a1 / 3.0 + h * a2 * a2 / 5.0;
      f(2) = 2.0 * h * u * a1;
      f(3) = 2.0 * h * u * a2;
      break;
  }
  return f;
}

Mat noncons_matrix(ModelId id, const PrimitiveState& w) {
  const int m = variable_count(id);
  Mat b = Mat::Zero(m, m);
  const double u = w.u, a1 = w.alpha[0], a2 = w.alpha[1];
  switch (id) {
    case ModelId::SWE:
      break;
    case ModelId::SWME1:
      b(2, 2) = u;
      break;
    case ModelId::SWME2:
      b(2, 2) = u - a2 / 5.0;
      b(2, 3) = a1 / 5.0;
      b(3, 2) = a1;
      b(3, 3) = u + a2 / 7.0;
      break;
    case ModelId::HSWME2:
      b(2, 2) = u;
      b(2, 3) = -0.6 * a1;
      b(3, 2) = a1;
      b(3, 3) = -u;
      break;
    case ModelId::SWLME2:
      b(2, 2) = u;
      b(3, 3) = u;
      break;
  }
  return b;
}

Vec friction(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  const int m = variable_count(id);
  Vec f = Vec::Zero(m);
  if (!p.friction_enabled) return f;
  require_positive_height(w.h);
  const double lam = p.lambda_slip;
  const double coeff = p.nu / lam;
  double slip = w.u;
  for (int k = 0; k < moment_count(id); ++k) slip += w.alpha[k];
  f(1) = slip;
  // Moment rows: (2k+1)(u + sum alpha + c_k lambda/h alpha_k), c_1 = 4, c_2 = 12.
  if (m > 2) f(2) = 3.0 * (slip + 4.0 * lam / w.h * w.alpha[0]);
  if (m > 3) f(3) = 5.0 * (slip + 12.0 * lam / w.h * w.alpha[1]);
  return coeff * f;
}

Vec source(ModelId id, const PrimitiveState& w, double db_dx, const PhysicalParams& p) {
  Vec s = -friction(id, w, p);
  s(1) -= p.g * w.h * db_dx;
  return s;
}

Mat flux_jacobian(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  require_positive_height(w.h);
  const int m = variable_count(id);
  const double h = w.h, u = w.u, a1 = w.alpha[0], a2 = w.alpha[1], g = p.g;
  Mat j = Mat::Zero(m, m);
  j(0, 1) = 1.0;
  j(1, 0) = -u * u + g * h;
  j(1, 1) = 2.0 * u;
  switch (id) {
    case ModelId::SWE:
      break;
    case ModelId::SWME1:
    case ModelId::HSWME2:
      j(1, 0) -= a1 * a1 / 3.0;
      j(1, 2) = 2.0 * a1 / 3.0;
      j(2, 0) = -2.0 * u * a1;
      j(2, 1) = 2.0 * a1;
      j(2, 2) = 2.0 * u;
      if (id == ModelId::HSWME2) {
        j(3, 0) = -2.0 / 3.0 * a1 * a1;
        j(3, 2) = 4.0 / 3.0 * a1;
      }
      break;
    case ModelId::SWME2:
      j(1, 0) -= a1 * a1 / 3.0 + a2 * a2 / 5.0;
      j(1, 2) = 2.0 * a1 / 3.0;
      j(1, 3) = 2.0 * a2 / 5.0;
      j(2, 0) = -2.0 * u * a1 - 0.8 * a1 * a2;
      j(2, 1) = 2.0 * a1;
      j(2, 2) = 2.0 * u + 0.8 * a2;
      j(2, 3) = 0.8 * a1;
      j(3, 0) = -2.0 * u * a2 - 2.0 / 3.0 * a1 * a1 - 2.0 / 7.0 * a2 * a2;
      j(3, 1) = 2.0 * a2;
      j(3, 2) = 4.0 / 3.0 * a1;
      j(3, 3) = 2.0 * u + 4.0 / 7.0 * a2;
      break;
    case ModelId::SWLME2:
      j(1, 0) -= a1 * a1 / 3.0 + a2 * a2 / 5.0;
      j(1, 2) = 2.0 * a1 / 3.0;
      j(1, 3) = 2.0 * a2 / 5.0;
      j(2, 0) = -2.0 * u * a1;
      j(2, 1) = 2.0 * a1;
      j(2, 2) = 2.0 * u;
      j(3, 0) = -2.0 * u * a2;
      j(3, 1) = 2.0 * a2;
      j(3, 3) = 2.0 * u;
      break;
  }
  return j;
}

Mat system_matrix(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  require_positive_height(w.h);
  const int m = variable_count(id);
  const double h = w.h, u = w.u, a1 = w.alpha[0], a2 = w.alpha[1], g = p.g;
  Mat a = Mat::Zero(m, m);
  a(0, 1) = 1.0;
  a(1, 0) = -u * u + g * h;
  a(1, 1) = 2.0 * u;
  switch (id) {
    case ModelId::SWE:
      break;
    case ModelId::SWME1:
      a(1, 0) -= a1 * a1 / 3.0;
      a(1, 2) = 2.0 * a1 / 3.0;
      a(2, 0) = -2.0 * u * a1;
      a(2, 1) = 2.0 * a1;
      a(2, 2) = u;
      break;
    case ModelId::SWME2:
      a(1, 0) -= a1 * a1 / 3.0 + a2 * a2 / 5.0;
      a(1, 2) = 2.0 * a1 / 3.0;
      a(1, 3) = 2.0 * a2 / 5.0;
      a(2, 0) = -2.0 * u * a1 - 0.8 * a1 * a2;
      a(2, 1) = 2.0 * a1;
      a(2, 2) = u + a2;
      a(2, 3) = 0.6 * a1;
      a(3, 0) = -2.0 * u * a2 - 2.0 / 3.0 * a1 * a1 - 2.0 / 7.0 * a2 * a2;
      a(3, 1) = 2.0 * a2;
      a(3, 2) = a1 / 3.0;
      a(3, 3) = u + 3.0 * a2 / 7.0;
      break;
    case ModelId::HSWME2:
      a(1, 0) -= a1 * a1 / 3.0;
      a(1, 2) = 2.0 * a1 / 3.0;
      a(2, 0) = -2.0 * u * a1;
      a(2, 1) = 2.0 * a1;
      a(2, 2) = u;
      a(2, 3) = 0.6 * a1;
      a(3, 0) = -2.0 / 3.0 * a1 * a1;
      a(3, 2) = a1 / 3.0;
      a(3, 3) = u;
      break;
    case ModelId::SWLME2:
      a(1, 0) -= a1 * a1 / 3.0 + a2 * a2 / 5.0;
      a(1, 2) = 2.0 * a1 / 3.0;
      a(1, 3) = 2.0 * a2 / 5.0;
      a(2, 0) = -2.0 * u * a1;
      a(2, 1) = 2.0 * a1;
      a(2, 2) = u;
      a(3, 0) = -2.0 * u * a2;
      a(3, 1) = 2.0 * a2;
      a(3, 3) = u;
      break;
  }
  return a;
}

Vec numeric_eigenvalues(const Mat& a, const PrimitiveState& w) {
  Eigen::EigenSolver<Mat> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw HyperbolicityError("eigenvalue iteration did not converge", w.h, w.u, w.alpha[0], w.alpha[1]);
  }
  const auto& ev = solver.eigenvalues();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  Vec out(a.rows());
  for (int k = 0; k < a.rows(); ++k) {
    if (std::abs(ev(k).imag()) > 1e-9 * scale) {
      std::ostringstream os;
      os << "loss of hyperbolicity: complex eigenvalue " << ev(k).real() << (ev(k).imag() >= 0 ? "+" : "")
         << ev(k).imag() << "i at h=" << w.h << " u=" << w.u << " alpha=(" << w.alpha[0] << "," << w.alpha[1] << ")";
      throw HyperbolicityError(os.str(), w.h, w.u, w.alpha[0], w.alpha[1]);
    }
    out(k) = ev(k).real();
  }
  return sorted_descending(out);
}

Vec eigenvalues(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  require_positive_height(w.h);
  const double u = w.u, a1 = w.alpha[0], a2 = w.alpha[1];
  const double gh = p.g * w.h;
  Vec ev(variable_count(id));
  switch (id) {
    case ModelId::SWE: {
      const double c = std::sqrt(gh);
      ev << u + c, u - c;
      return ev;
    }
    case ModelId::SWME1: {
      const double c = std::sqrt(gh + a1 * a1);
      ev << u + c, u, u - c;
      return ev;
    }
    case ModelId::HSWME2: {
      const double c = std::sqrt(gh + a1 * a1);
      const double s = std::sqrt(a1 * a1 / 5.0);
      ev << u + c, u + s, u - s, u - c;
      return sorted_descending(ev);
    }
    case ModelId::SWLME2: {
      const double c = std::sqrt(gh + a1 * a1 + 0.6 * a2 * a2);
      ev << u + c, u, u, u - c;
      return ev;
    }
    case ModelId::SWME2:
      return numeric_eigenvalues(system_matrix(id, w, p), w);
  }
  return ev;
}

double spectral_radius(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  const Vec ev = eigenvalues(id, w, p);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

LeftEigensystem left_eigensystem(ModelId id, const PrimitiveState& w, const PhysicalParams& p) {
  if (!has_left_eigensystem(id)) {
    throw CapabilityError(std::string("no closed-form eigensystem for ") + std::string(to_string(id)) +
                          "; use the central global flux");
  }
  require_positive_height(w.h);
  const Vec lambda = eigenvalues(id, w, p);
  const int m = variable_count(id);
  Mat right(m, m);
  if (id == ModelId::SWE) {
    right << 1.0, 1.0, lambda(0), lambda(1);
  } else {
    // Acoustic pair: (1, lambda, 2 alpha_1). Shear wave at lambda = u:
    // (2 alpha_1, 2 alpha_1 u, alpha_1^2 - 3 g h), non-zero for h > 0.
    const double a1 = w.alpha[0];
    const double gh = p.g * w.h;
    right.col(0) << 1.0, lambda(0), 2.0 * a1;
    right.col(1) << 2.0 * a1, 2.0 * a1 * w.u, a1 * a1 - 3.0 * gh;
    right.col(2) << 1.0, lambda(2), 2.0 * a1;
  }
  return {right.inverse(), lambda};
}

double velocity_profile(const PrimitiveState& w, double zeta) {
  return w.u + w.alpha[0] * (1.0 - 2.0 * zeta) + w.alpha[1] * (6.0 * zeta * zeta - 6.0 * zeta + 1.0);
}

}  // namespace gfswme
