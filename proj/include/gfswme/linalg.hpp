#pragma once

#include <Eigen/Dense>

namespace gfswme {

/// Largest number of conserved variables among the shipped models.
inline constexpr int kMaxVars = 4;

// Small dynamic vectors/matrices with a compile-time capacity: no heap traffic.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVars, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxVars, kMaxVars>;

}  // namespace gfswme
