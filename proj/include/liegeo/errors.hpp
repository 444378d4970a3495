#ifndef LIEGEO_ERRORS_HPP
#define LIEGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liegeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coordinate lengths do not match the owning algebra's dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Gram matrix not invertible (float-mode guard; cannot occur for SPD input).
struct SingularMetric : Error {
  using Error::Error;
};

/// Flag plane span{pole, transverse} is degenerate.
struct DegenerateFlag : Error {
  using Error::Error;
};

/// g(drift,drift) >= 1: the Randers form would not be a Finsler metric.
struct DriftTooLarge : Error {
  explicit DriftTooLarge(double norm_value)
      : Error("drift g-norm " + std::to_string(norm_value) + " >= 1"),
        norm(norm_value) {}
  double norm;
};

/// Fundamental tensor requested at y = 0, where F is not differentiable.
struct ZeroPole : Error {
  using Error::Error;
};

/// Flag curvature requested for a non-parallel drift field.
struct NotBerwald : Error {
  using Error::Error;
};

struct UnknownCase : Error {
  using Error::Error;
};

struct DegenerateDenominator : Error {
  using Error::Error;
};

/// Exact mode needs sqrt of a rational that is not a perfect square.
struct NonPerfectSquare : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace liegeo

#endif
