#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gafzeros {

using cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Thrown when an iterative scheme fails to reach its documented tolerance.
// `detail` carries the achieved residual or off-norm.
class NumericFailure : public std::runtime_error {
public:
  NumericFailure(const std::string& what, double detail)
      : std::runtime_error(what), detail_(detail) {}
  double detail() const { return detail_; }

private:
  double detail_ = 0.0;
};

// Thrown by the PSD square root when an eigenvalue sits below the clamp floor.
class NotPsdError : public std::runtime_error {
public:
  NotPsdError(const std::string& what, double eigenvalue)
      : std::runtime_error(what), eigenvalue_(eigenvalue) {}
  double offending_eigenvalue() const { return eigenvalue_; }

private:
  double eigenvalue_ = 0.0;
};

// Thrown when a Gram matrix is too close to singular for a determinant ratio.
class IllConditionedError : public std::runtime_error {
public:
  IllConditionedError(const std::string& what, cx det)
      : std::runtime_error(what), det_(det) {}
  cx gram_determinant() const { return det_; }

private:
  cx det_;
};

// Thrown when an input exceeds a documented hard size cap.
class SizeLimitError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gafzeros
