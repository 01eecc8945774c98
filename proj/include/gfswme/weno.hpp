#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace gfswme {

enum class WeightMode {
  Nonlinear,  ///< smoothness-based weights (positive/negative splitting where needed)
  Linear,     ///< optimal linear weights everywhere
  FaceOnly,   ///< nonlinear weights at the cell faces, linear weights at interior points
};

/// "nonlinear", "linear" or "face_only".
WeightMode parse_weight_mode(std::string_view name);
std::string_view to_string(WeightMode mode) noexcept;

struct WenoConfig {
  int order = 5;          ///< p in {1, 3, 5}
  double epsilon = 1e-6;  ///< regulariser in alpha_m = d_m / (beta_m + epsilon)^2
  WeightMode mode = WeightMode::Nonlinear;

  int radius() const noexcept { return (order + 1) / 2; }
  void validate() const;
};

/// WENO tables for one order and a fixed list of evaluation points.
///
/// Points are reference coordinates in the target cell, [-1/2, 1/2]. A window
/// holds the p cell averages u_{i-r+1}, ..., u_{i+r-1}; candidate m uses
/// window entries m, ..., m+r-1.
class WenoStencil {
 public:
  WenoStencil(const WenoConfig& config, std::span<const double> points);

  int order() const noexcept { return p_; }
  int radius() const noexcept { return r_; }
  int n_points() const noexcept { return n_points_; }
  const WenoConfig& config() const noexcept { return config_; }

  /// Smoothness indicators beta_m of the r candidates.
  void smoothness(const double* window, double* beta) const;

  /// Effective blend weights, n_points x r, row-major. They sum to one per
  /// point; entries may be negative only where linear weights are negative.
  void weights(const double* window, double* omega) const;

  /// Blend of the candidates at `point` with weights `omega_point` (r entries).
  double evaluate(const double* window, int point, const double* omega_point) const;

  /// weights() followed by evaluate() at every point.
  void reconstruct(const double* window, double* values) const;

  /// Optimal linear weights d_m(x) at a point.
  std::span<const double> linear_weights(int point) const {
    return {linear_.data() + point * r_, static_cast<std::size_t>(r_)};
  }
  bool split(int point) const noexcept { return split_[point] != 0; }

  /// Value of the full-stencil polynomial at a point (reference route for tests).
  double high_order_value(const double* window, int point) const;
  /// Value of candidate m at a point.
  double candidate_value(const double* window, int point, int m) const;

 private:
  WenoConfig config_;
  int p_ = 1;
  int r_ = 1;
  int n_points_ = 0;
  std::vector<double> cand_;      // (point, m, j): value coefficients of candidate m on its r cells
  std::vector<double> high_;      // (point, j): full-stencil value coefficients
  std::vector<double> beta_form_; // (m, j, k): beta_m = v^T S_m v over the candidate's cells
  std::vector<double> linear_;    // (point, m)
  std::vector<double> gamma_pos_, gamma_neg_;  // (point, m), normalised split weights
  std::vector<double> sigma_pos_, sigma_neg_;  // (point)
  std::vector<char> split_;
  std::vector<char> face_;         // (point): reference coordinate is +-1/2
};

/// One-off reconstruction of a scalar from a window of p averages.
std::vector<double> reconstruct_scalar(std::span<const double> window, const WenoConfig& config,
                                       std::span<const double> points);

}  // namespace gfswme
