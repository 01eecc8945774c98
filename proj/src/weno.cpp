#include "gfswme/weno.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "gfswme/errors.hpp"

namespace gfswme {

namespace {

// Splitting parameter for negative linear weights.
constexpr double kSplitTheta = 3.0;

double monomial_integral(int k, double a, double b) { return (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1); }

// Monomial coefficients (rows) of the polynomial of degree n-1 whose averages
// over the unit cells centred at offsets first, ..., first+n-1 match the data.
Eigen::MatrixXd averaging_inverse(int first, int n) {
  Eigen::MatrixXd avg(n, n);
  for (int j = 0; j < n; ++j) {
    const double c = first + j;
    for (int k = 0; k < n; ++k) avg(j, k) = monomial_integral(k, c - 0.5, c + 0.5);
  }
  return avg.inverse();  // coefficients = inverse * data
}

Eigen::RowVectorXd monomials(double x, int n) {
  Eigen::RowVectorXd v(n);
  double t = 1.0;
  for (int k = 0; k < n; ++k, t *= x) v(k) = t;
  return v;
}

// Sum over derivative orders j = 1..n-1 of the integral over [-1/2, 1/2] of
// (d^j x^k)(d^j x^l).
Eigen::MatrixXd smoothness_form(int n) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  auto falling = [](int k, int j) {
    double f = 1.0;
    for (int i = 0; i < j; ++i) f *= (k - i);
    return f;
  };
  for (int j = 1; j < n; ++j)
    for (int k = j; k < n; ++k)
      for (int l = j; l < n; ++l)
        q(k, l) += falling(k, j) * falling(l, j) * monomial_integral(k - j + l - j, -0.5, 0.5);
  return q;
}

}  // namespace

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "nonlinear") return WeightMode::Nonlinear;
  if (name == "linear") return WeightMode::Linear;
  if (name == "face_only") return WeightMode::FaceOnly;
  throw InvalidArgument("unknown WENO weight mode '" + std::string(name) + "'");
}

std::string_view to_string(WeightMode mode) noexcept {
  switch (mode) {
    case WeightMode::Nonlinear: return "nonlinear";
    case WeightMode::Linear: return "linear";
    case WeightMode::FaceOnly: return "face_only";
  }
  return "?";
}

void WenoConfig::validate() const {
  if (order != 1 && order != 3 && order != 5) throw InvalidArgument("WENO order must be 1, 3 or 5");
  if (!(epsilon > 0.0)) throw InvalidArgument("WENO epsilon must be positive");
}

WenoStencil::WenoStencil(const WenoConfig& config, std::span<const double> points)
    : config_(config), p_(config.order), r_(config.radius()), n_points_(static_cast<int>(points.size())) {
  config_.validate();
  const int r = r_, p = p_, np = n_points_;
  cand_.assign(static_cast<std::size_t>(np * r * r), 0.0);
  high_.assign(static_cast<std::size_t>(np * p), 0.0);
  beta_form_.assign(static_cast<std::size_t>(r * r * r), 0.0);
  linear_.assign(static_cast<std::size_t>(np * r), 0.0);
  gamma_pos_.assign(linear_.size(), 0.0);
  gamma_neg_.assign(linear_.size(), 0.0);
  sigma_pos_.assign(np, 1.0);
  sigma_neg_.assign(np, 0.0);
  split_.assign(np, 0);
  face_.assign(np, 0);
  for (int pt = 0; pt < np; ++pt) face_[pt] = std::abs(std::abs(points[pt]) - 0.5) < 1e-14 ? 1 : 0;

  const Eigen::MatrixXd q = smoothness_form(r);
  std::vector<Eigen::MatrixXd> cand_inv(r);
  for (int m = 0; m < r; ++m) {
    cand_inv[m] = averaging_inverse(m - (r - 1), r);
    const Eigen::MatrixXd s = cand_inv[m].transpose() * q * cand_inv[m];
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) beta_form_[(m * r + j) * r + k] = s(j, k);
  }
  const Eigen::MatrixXd high_inv = averaging_inverse(-(r - 1), p);

  for (int pt = 0; pt < np; ++pt) {
    const double x = points[pt];
    const Eigen::RowVectorXd hv = monomials(x, p) * high_inv;
    for (int j = 0; j < p; ++j) high_[pt * p + j] = hv(j);

    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(p, r);
    for (int m = 0; m < r; ++m) {
      const Eigen::RowVectorXd cv = monomials(x, r) * cand_inv[m];
      for (int j = 0; j < r; ++j) {
        cand_[(pt * r + m) * r + j] = cv(j);
        c(m + j, m) = cv(j);
      }
    }

    // Linear weights: sum_m d_m c_m(x) = c_high(x) as functionals on the window.
    Eigen::VectorXd d = c.colPivHouseholderQr().solve(hv.transpose());
    const double residual = (c * d - hv.transpose()).cwiseAbs().maxCoeff();
    if (residual > 1e-11) {
      std::ostringstream os;
      os << "no linear WENO" << p << " weights at reference point " << x;
      throw InvalidArgument(os.str());
    }
    bool negative = false;
    for (int m = 0; m < r; ++m) {
      linear_[pt * r + m] = d(m);
      if (d(m) < 0.0) negative = true;
    }
    split_[pt] = negative ? 1 : 0;
    if (negative) {
      double sp = 0.0, sn = 0.0;
      for (int m = 0; m < r; ++m) {
        const double gp = 0.5 * (d(m) + kSplitTheta * std::abs(d(m)));
        const double gn = gp - d(m);
        gamma_pos_[pt * r + m] = gp;
        gamma_neg_[pt * r + m] = gn;
        sp += gp;
        sn += gn;
      }
      for (int m = 0; m < r; ++m) {
        gamma_pos_[pt * r + m] /= sp;
        gamma_neg_[pt * r + m] /= sn;
      }
      sigma_pos_[pt] = sp;
      sigma_neg_[pt] = sn;
    } else {
      for (int m = 0; m < r; ++m) gamma_pos_[pt * r + m] = d(m);
    }
  }
}

void WenoStencil::smoothness(const double* window, double* beta) const {
  const int r = r_;
  // The forms vanish on constants; shifting by the central value keeps the
  // quadratic form free of cancellation for data with a large offset.
  double shifted[5];
  for (int j = 0; j < p_; ++j) shifted[j] = window[j] - window[r - 1];
  for (int m = 0; m < r; ++m) {
    const double* v = shifted + m;
    const double* s = beta_form_.data() + m * r * r;
    double b = 0.0;
    for (int j = 0; j < r; ++j) {
      double row = 0.0;
      for (int k = 0; k < r; ++k) row += s[j * r + k] * v[k];
      b += v[j] * row;
    }
    beta[m] = b;
  }
}

void WenoStencil::weights(const double* window, double* omega) const {
  const int r = r_;
  if (r == 1) {
    for (int pt = 0; pt < n_points_; ++pt) omega[pt] = 1.0;
    return;
  }
  if (config_.mode == WeightMode::Linear) {
    for (int i = 0; i < n_points_ * r; ++i) omega[i] = linear_[i];
    return;
  }
  double beta[3];
  double inv[3];
  smoothness(window, beta);
  for (int m = 0; m < r; ++m) {
    const double t = beta[m] + config_.epsilon;
    inv[m] = 1.0 / (t * t);
  }
  for (int pt = 0; pt < n_points_; ++pt) {
    double* w = omega + pt * r;
    if (config_.mode == WeightMode::FaceOnly && !face_[pt]) {
      for (int m = 0; m < r; ++m) w[m] = linear_[pt * r + m];
      continue;
    }
    const double* gp = gamma_pos_.data() + pt * r;
    double sum = 0.0;
    for (int m = 0; m < r; ++m) {
      w[m] = gp[m] * inv[m];
      sum += w[m];
    }
    if (!split_[pt]) {
      for (int m = 0; m < r; ++m) w[m] /= sum;
      continue;
    }
    const double* gn = gamma_neg_.data() + pt * r;
    double an[3];
    double sum_n = 0.0;
    for (int m = 0; m < r; ++m) {
      an[m] = gn[m] * inv[m];
      sum_n += an[m];
    }
    const double sp = sigma_pos_[pt] / sum, sn = sigma_neg_[pt] / sum_n;
    for (int m = 0; m < r; ++m) w[m] = sp * w[m] - sn * an[m];
  }
}

double WenoStencil::evaluate(const double* window, int point, const double* omega_point) const {
  const int r = r_;
  const double* c = cand_.data() + point * r * r;
  double value = 0.0;
  for (int m = 0; m < r; ++m) {
    double pm = 0.0;
    for (int j = 0; j < r; ++j) pm += c[m * r + j] * window[m + j];
    value += omega_point[m] * pm;
  }
  return value;
}

void WenoStencil::reconstruct(const double* window, double* values) const {
  double omega[64];
  std::vector<double> heap;
  double* w = omega;
  if (n_points_ * r_ > 64) {
    heap.resize(static_cast<std::size_t>(n_points_ * r_));
    w = heap.data();
  }
  weights(window, w);
  for (int pt = 0; pt < n_points_; ++pt) values[pt] = evaluate(window, pt, w + pt * r_);
}

double WenoStencil::high_order_value(const double* window, int point) const {
  double v = 0.0;
  for (int j = 0; j < p_; ++j) v += high_[point * p_ + j] * window[j];
  return v;
}

double WenoStencil::candidate_value(const double* window, int point, int m) const {
  const double* c = cand_.data() + (point * r_ + m) * r_;
  double v = 0.0;
  for (int j = 0; j < r_; ++j) v += c[j] * window[m + j];
  return v;
}

std::vector<double> reconstruct_scalar(std::span<const double> window, const WenoConfig& config,
                                       std::span<const double> points) {
  if (static_cast<int>(window.size()) != config.order) throw InvalidArgument("window length must equal the WENO order");
  WenoStencil stencil(config, points);
  std::vector<double> out(points.size());
  stencil.reconstruct(window.data(), out.data());
  return out;
}

}  // namespace gfswme
