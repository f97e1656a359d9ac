#pragma once

#include <string>
#include <vector>

namespace gafzeros::verify {

// One named residual check. `pass` is residual <= tolerance.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Determinant, permanent, and contour identities at fixed point sets:
// Cauchy, Borchardt, Vandermonde reflection and inversion, both reproducing
// variants, the volume formula, and Ryser against brute force.
std::vector<Check> identity_suite();

// Correlation-function routes: Edelman-Kostlan against the spectral form,
// truncated closed forms, the arc constant, two-point route agreement with
// the Bergman determinant, mass bridges, and the CUE trace identity.
std::vector<Check> correlation_suite();

// Kernel-level checks: closed forms against quadrature, Hermitian symmetry,
// the Poisson mass, and positive-semidefiniteness of Toeplitz sections.
std::vector<Check> kernel_suite();

bool all_pass(const std::vector<Check>& checks);

}  // namespace gafzeros::verify
