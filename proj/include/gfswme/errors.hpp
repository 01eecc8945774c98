#pragma once

#include <stdexcept>
#include <string>

namespace gfswme {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: bad configuration, malformed boundary data, bad order.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operation requested from a model that does not provide it.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A reconstructed or evolved water height became non-positive.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, int cell) : Error(what), cell_(cell) {}
  int cell() const noexcept { return cell_; }

 private:
  int cell_;
};

/// The system matrix has complex eigenvalues at the offending state.
class HyperbolicityError : public Error {
 public:
  HyperbolicityError(const std::string& what, double h, double u, double alpha1, double alpha2)
      : Error(what), h_(h), u_(u), alpha1_(alpha1), alpha2_(alpha2) {}
  double h() const noexcept { return h_; }
  double u() const noexcept { return u_; }
  double alpha1() const noexcept { return alpha1_; }
  double alpha2() const noexcept { return alpha2_; }
  int cell() const noexcept { return cell_; }
  void set_cell(int cell) noexcept { cell_ = cell; }

 private:
  double h_, u_, alpha1_, alpha2_;
  int cell_ = -1;
};

/// Spectral radius vanished in the central global flux.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// No admissible root of the steady-state height equation.
class RootFindError : public Error {
 public:
  RootFindError(const std::string& what, double x) : Error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Time integration failed (NaN, step budget exhausted).
class SolverError : public Error {
 public:
  SolverError(const std::string& what, long step) : Error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

}  // namespace gfswme
