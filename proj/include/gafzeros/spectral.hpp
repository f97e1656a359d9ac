#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "gafzeros/common.hpp"

namespace gafzeros::spectral {

/*
 * Spectral measures F on the unit circle T = (-pi, pi] with total mass 1.
 * Everything downstream derives from two integrals against F:
 *
 *   gamma(k)  = integral of e^{-ikt} F(dt)              (autocovariance)
 *   K(z, w)   = integral of s(z,t) conj(s(w,t)) F(dt)   (covariance kernel)
 *
 * where s(z,t) = 1/(1 - z e^{-it}) for |z| < 1.
 */

class SpectralMeasure {
public:
  enum class Kind { Lebesgue, Atoms, ArcUniform, TabulatedDensity };

  static SpectralMeasure lebesgue();
  // Point masses at `angles` with positive `weights` summing to 1. Angles are
  // normalized into (-pi, pi] and must be pairwise distinct after
  // normalization (tolerance 1e-12).
  static SpectralMeasure atoms(std::vector<double> angles,
                               std::vector<double> weights);
  // Uniform measure on the arc [lo, hi], density 1/(hi - lo); requires
  // hi > lo and hi - lo <= 2*pi.
  static SpectralMeasure arc_uniform(double lo, double hi);
  // Piecewise-linear density on strictly increasing nodes covering (-pi, pi];
  // total mass must be 1 within 1e-8.
  static SpectralMeasure tabulated_density(std::vector<double> nodes,
                                           std::vector<double> values);

  Kind kind() const { return kind_; }
  const std::vector<double>& angles() const { return angles_; }
  const std::vector<double>& weights() const { return weights_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& density_nodes() const { return nodes_; }
  const std::vector<double>& density_values() const { return values_; }

  bool is_continuous() const { return kind_ != Kind::Atoms; }

  // Atoms placed uniformly on the n-th roots of unity, the measure whose
  // coefficient process is periodic with period n.
  static SpectralMeasure roots_of_unity(int n);

private:
  SpectralMeasure() = default;
  Kind kind_ = Kind::Lebesgue;
  std::vector<double> angles_, weights_;  // Atoms
  double lo_ = 0.0, hi_ = 0.0;            // ArcUniform
  std::vector<double> nodes_, values_;    // TabulatedDensity
};

// Nodes and weights realizing integration against F; weights sum to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

// Lebesgue: M-point periodic midpoint rule. ArcUniform: M-node Gauss-Legendre
// mapped to [lo, hi] (the density jump at the arc ends never enters the
// integrand domain). Atoms: the exact rule regardless of M. TabulatedDensity:
// composite midpoint refined to at least M cells, renormalized.
QuadratureRule build_rule(const SpectralMeasure& measure, int M);

// Szego kernel s(z,t) = 1/(1 - z e^{-it}); requires |z| < 1.
cx szego(cx z, double t);

// Poisson kernel P(r,theta) = (1-r^2)/(1 - 2r cos(theta) + r^2); 0 <= r < 1.
double poisson(double r, double theta);

// K, dK/dz, dK/d(conj w), d2K/(dz d conj w) evaluated in one quadrature pass;
// uses ds/dz = e^{-it} s^2 under the integral sign.
struct KernelJet {
  cx k;
  cx dz;
  cx dwbar;
  cx dzdwbar;
};

class CovarianceEvaluator {
public:
  enum class ClosedForm { None, Hyperbolic, Periodic, ArcHalf };

  // `M` is the quadrature order for continuous measures. When
  // `use_closed_forms` is false every quantity is computed by quadrature,
  // which the closed-form tests exploit as an independent route.
  explicit CovarianceEvaluator(SpectralMeasure measure, int M = 256,
                               bool use_closed_forms = true);

  const SpectralMeasure& measure() const { return measure_; }
  const QuadratureRule& rule() const { return rule_; }
  ClosedForm closed_form() const { return closed_; }
  int periodic_order() const { return period_; }
  bool uses_closed_forms() const { return use_closed_; }

  // gamma(k) = integral of e^{-ikt} F(dt); cached, gamma(-k) = conj(gamma(k)).
  // Safe for concurrent calls.
  cx gamma(long k) const;

  // K(z,w) for |z|,|w| < 1. Closed forms when tagged: Lebesgue 1/(1 - z conj(w));
  // roots-of-unity atoms (1-(z conj(w))^n) / ((1-z^n)(1-conj(w)^n)(1-z conj(w)));
  // half-circle arc on the exact diagonal z == w (see arc_half_diagonal).
  cx kernel(cx z, cx w) const;

  KernelJet kernel_derivatives(cx z, cx w) const;

  // Sum over 0 <= j,k <= N of gamma(j-k) z^j conj(w)^k. Entire in (z, w), so
  // arguments outside the disk are accepted.
  cx truncated_kernel(long N, cx z, cx w) const;

  // Jet of the truncated kernel in the same (z, conj w) slots as
  // kernel_derivatives; feeds the truncated zero-intensity formula.
  KernelJet truncated_kernel_derivatives(long N, cx z, cx w) const;

private:
  cx gamma_quadrature(long k) const;
  cx gamma_closed(long k) const;
  cx kernel_quadrature(cx z, cx w) const;

  SpectralMeasure measure_;
  QuadratureRule rule_;
  ClosedForm closed_ = ClosedForm::None;
  int period_ = 0;
  bool use_closed_ = true;
  mutable std::mutex cache_mutex_;
  mutable std::map<long, cx> gamma_cache_;
};

// Diagonal covariance of the uniform measure on [-pi/2, pi/2] at z = r e^{i theta}:
//   K(z,z) = (1 + (2/pi) arctan(2 r cos(theta) / (1 - r^2))) / (1 - r^2).
// Normalization check: the value at r = 0 is 1, matching gamma(0) = 1.
double arc_half_diagonal(double r, double theta);

// Zero intensity of the degree-N truncation of the hyperbolic (Lebesgue) GAF:
//   rho_1^{(N)}(z) = (1/pi) { (1-|z|^2)^{-2} - (N+1)^2 |z|^{2N} / (1-|z|^{2(N+1)})^2 }.
double truncated_hyperbolic_intensity(long N, cx z);

}  // namespace gafzeros::spectral
