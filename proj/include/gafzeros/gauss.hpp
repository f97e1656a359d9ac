#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gafzeros/matrix.hpp"
#include "gafzeros/spectral.hpp"

namespace gafzeros::gauss {

/*
 * Sampling of the stationary complex Gaussian coefficient process. A draw
 * zeta satisfies E[zeta] = 0, E[|zeta|^2] = 1, E[zeta^2] = 0. Coefficient
 * sequences with covariance gamma(j-k) come from xi = A zeta where A is the
 * positive-semidefinite square root of the Toeplitz matrix (gamma(j-k)).
 */

// Deterministic stream of standard complex normals. Box-Muller over exactly
// two raw 64-bit draws per complex sample, so the stream position is a pure
// function of the number of draws: identical seed, identical sequence.
class ComplexNormalSource {
public:
  explicit ComplexNormalSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  cx next() {
    // (raw >> 11) has 53 uniform bits; +1 keeps the log argument in (0, 1].
    const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-std::log(u1));
    return std::polar(radius, kTwoPi * u2);
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

struct HermitianEigResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // unitary, columns match eigenvalues
};

// Cyclic Jacobi iteration; every off-diagonal pair is annihilated once per
// sweep. Input is symmetrized internally and must be Hermitian within 1e-10.
// Converges when the off-diagonal Frobenius norm drops below 1e-12 times the
// matrix norm; throws NumericFailure after 64 sweeps otherwise.
HermitianEigResult hermitian_eig(const Matrix& h);

// A = V diag(sqrt(lambda)) V*. Eigenvalues in [-1e-8, 0) are clamped to 0;
// anything lower throws NotPsdError naming the offending eigenvalue.
Matrix psd_sqrt(const Matrix& h);

// Toeplitz section (gamma(j-k)) of the given size.
Matrix toeplitz_covariance(const spectral::CovarianceEvaluator& ev, int size);

struct Provenance {
  std::string measure_json;
  std::string sampler;
  std::uint64_t seed = 0;
};

struct GafPolynomial {
  std::vector<cx> coefficients;  // xi_0 .. xi_N
  long n = 0;                    // degree bound, coefficients.size() == n + 1
  Provenance provenance;
};

class CoefficientSampler {
public:
  enum class Kind { Iid, Periodic, ToeplitzSqrt };

  static CoefficientSampler iid();
  static CoefficientSampler periodic(int period);
  // Builds A = psd_sqrt(Toeplitz(gamma)) at the given size; the sampler can
  // then serve any degree N with N + 1 <= size.
  static CoefficientSampler toeplitz_sqrt(const spectral::CovarianceEvaluator& ev,
                                          int size);

  Kind kind() const { return kind_; }
  int period() const { return period_; }
  const Matrix& sqrt_matrix() const { return a_; }
  const std::string& tag() const { return tag_; }
  const std::string& measure_json() const { return measure_json_; }

private:
  CoefficientSampler() = default;
  Kind kind_ = Kind::Iid;
  int period_ = 0;
  Matrix a_;
  std::string tag_;
  std::string measure_json_;
};

// IID: xi_k = zeta_k. Periodic(n): draws the base block zeta_0..zeta_{n-1} in
// stream order and tiles it exactly. ToeplitzSqrt: draws `size` variates and
// returns the first N+1 entries of A zeta. Resamples on the probability-zero
// all-zero event.
GafPolynomial sample_coefficients(const CoefficientSampler& sampler, long N,
                                  ComplexNormalSource& src);

struct CovarianceEstimate {
  cx value;
  double se_re = 0.0;  // standard error of the real part over samples
  double se_im = 0.0;
  std::size_t samples = 0;
};

// Average of xi_{j+lag} conj(xi_j) over samples and admissible positions.
// The standard error is taken across per-sample means, since positions
// within one sample are correlated.
CovarianceEstimate empirical_covariance(const std::vector<GafPolynomial>& samples,
                                        long lag);

}  // namespace gafzeros::gauss
