#include "gfswme/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "gfswme/errors.hpp"

namespace gfswme {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre rule needs at least one node");
  std::vector<double> x(n), w(n);
  // Newton on P_n over [-1, 1], then map to [-1/2, 1/2].
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute derivative at the converged node for the weight.
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (t * p1 - p0) / (t * t - 1.0);
    // Ascending order on output.
    x[n - 1 - i] = 0.5 * t;
    w[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);  // weights on [-1,1] are 2/(...); halved for the unit cell
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return {x, w};
}

QuadratureTable QuadratureTable::build(int order, double dx) {
  if (order != 1 && order != 3 && order != 5) throw InvalidArgument("quadrature order must be 1, 3 or 5");
  if (!(dx > 0.0)) throw InvalidArgument("cell width must be positive");
  QuadratureTable t;
  t.order_ = order;
  t.n_ = (order + 1) / 2;
  t.dx_ = dx;
  const int n = t.n_;
  std::tie(t.nodes_, t.weights_) = gauss_legendre_unit(n);

  // Monomial coefficients of each Lagrange basis polynomial: V c = I.
  Eigen::MatrixXd v(n, n);
  for (int q = 0; q < n; ++q)
    for (int k = 0; k < n; ++k) v(q, k) = std::pow(t.nodes_[q], k);
  const Eigen::MatrixXd coeff = v.inverse();  // column theta holds L_theta's coefficients

  auto eval = [&](int theta, double xi) {
    double s = 0.0;
    for (int k = n - 1; k >= 0; --k) s = s * xi + coeff(k, theta);
    return s;
  };
  auto deval = [&](int theta, double xi) {
    double s = 0.0;
    for (int k = n - 1; k >= 1; --k) s = s * xi + k * coeff(k, theta);
    return s;
  };
  auto antiderivative = [&](int theta, double xi) {
    double s = 0.0;
    for (int k = n - 1; k >= 0; --k) s = s * xi + coeff(k, theta) / (k + 1);
    return s * xi;
  };

  t.deriv_.assign(n * n, 0.0);
  t.partial_.assign(n * n, 0.0);
  t.full_.assign(n, 0.0);
  t.left_.assign(n, 0.0);
  t.right_.assign(n, 0.0);
  for (int theta = 0; theta < n; ++theta) {
    t.left_[theta] = eval(theta, -0.5);
    t.right_[theta] = eval(theta, 0.5);
    t.full_[theta] = dx * (antiderivative(theta, 0.5) - antiderivative(theta, -0.5));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t.deriv_[a * n + b] = deval(b, t.nodes_[a]) / dx;
      t.partial_[a * n + b] = dx * (antiderivative(b, t.nodes_[a]) - antiderivative(b, -0.5));
    }
  }
  return t;
}

std::pair<double, double> QuadratureTable::lagrange_eval_at_interfaces(std::span<const double> samples) const {
  double l = 0.0, r = 0.0;
  for (int q = 0; q < n_; ++q) {
    l += left_[q] * samples[q];
    r += right_[q] * samples[q];
  }
  return {l, r};
}

std::vector<double> QuadratureTable::derivative_at_nodes(std::span<const double> samples) const {
  std::vector<double> out(n_, 0.0);
  for (int a = 0; a < n_; ++a)
    for (int s = 0; s < n_; ++s) out[a] += deriv_[a * n_ + s] * samples[s];
  return out;
}

double QuadratureTable::average(std::span<const double> samples) const {
  double s = 0.0;
  for (int q = 0; q < n_; ++q) s += weights_[q] * samples[q];
  return s;
}

}  // namespace gfswme
