#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gafzeros/matrix.hpp"
#include "gafzeros/spectral.hpp"

namespace gafzeros::corr {

/*
 * Correlation functions of the zero point process by several independent
 * routes, plus numerical checks of the determinant, permanent, and contour
 * identities those routes rest on. Notation: V(a) is the Vandermonde product
 * prod_{j<k} (a_k - a_j), S(a, t) = prod_p prod_l s(a_p, t_l).
 */

// Pairwise-distinct points in the open unit disk. Nearly coincident points
// make every Gram matrix downstream numerically singular, so the separation
// floor is enforced at construction.
class PointConfig {
public:
  explicit PointConfig(std::vector<cx> points, double min_separation = 1e-8);

  const std::vector<cx>& points() const { return points_; }
  double min_separation() const { return min_separation_; }
  int n() const { return static_cast<int>(points_.size()); }

private:
  std::vector<cx> points_;
  double min_separation_ = 1e-8;
};

enum class Method { EdelmanKostlan, SpectralRho1, DirectPermanent, Theorem4 };

std::string method_name(Method m);

struct CorrelationResult {
  long n = 0;
  std::vector<cx> points;
  Method method = Method::DirectPermanent;
  double value = 0.0;
  // Quadrature-refinement delta where applicable, otherwise a rounding-scale
  // floor; intensities satisfy value >= -error_estimate.
  double error_estimate = 0.0;
  std::map<std::string, double> diagnostics;
};

// One-point intensity rho_1(z) = (K d2K - dK conj(dK)) / (pi K^2) with all
// derivatives taken at w = z; equals (1/pi) dz dwbar log K. Throws
// std::domain_error when K(z,z) is not strictly positive.
double rho1_ek(const spectral::CovarianceEvaluator& ev, cx z);

// Same formula on the degree-N truncated kernel.
double rho1_ek_truncated(const spectral::CovarianceEvaluator& ev, long N, cx z);

// Symmetrized spectral form
//   rho_1(z) = (2 pi K(z,z)^2)^{-1} double-integral of
//              |e^{-it} - e^{-iu}|^2 |s(z,t) s(z,u)|^4 F(dt) F(du)
// by M^2 tensor quadrature, with K evaluated on the same rule. M = 0 starts
// at 128 and doubles (cap 1024) until the value moves by less than
// 1e-10 * max(1, |value|).
double rho1_spectral(const spectral::CovarianceEvaluator& ev, cx z, int M = 0);

// Conditional kernel K^a(z,w) given zeros at the points of `a`, as the ratio
// of the bordered determinant to det(K(a_p, a_q)). Vanishes whenever z or w
// hits a conditioned point; n = 1 reduces to K(z,w) - K(z,a)K(a,w)/K(a,a).
// Throws IllConditionedError when |det Gram| <= 1e-12.
cx conditional_kernel(const spectral::CovarianceEvaluator& ev,
                      const PointConfig& a, cx z, cx w);

// Ryser's formula with Gray-code subset updates, O(2^n n). Throws
// SizeLimitError for n > 20.
cx permanent(const Matrix& a);

// rho_n(a) = per(dz dwbar K^a(a_j, a_k)) / (pi^n det(K(a_j, a_k))). The mixed
// derivative of the bordered-determinant ratio collapses to
//   dz dwbar K^a(a_j, a_k) = d2K(a_j, a_k)
//       - sum_{q,p} dzK(a_j, a_q) (G^{-1})_{qp} dwbarK(a_p, a_k),
// since only the bordering row and column depend on z and wbar. n <= 4.
CorrelationResult rho_n_direct(const spectral::CovarianceEvaluator& ev,
                               const PointConfig& a);

// mu_a(T^n) for mu_a(dt) = (1/n!) |V(e^{-it_1},..,e^{-it_n})|^2 |S(a,t)|^2
// F^{(x)n}(dt) by M^n tensor quadrature; n <= 3. M = 0 picks 128/64/48 for
// n = 1/2/3. When `bridge_residual` is given it receives the relative defect
// of det(K(a_j,a_k)) = |V(a)|^2 mu_a(T^n).
double mu_mass(const spectral::CovarianceEvaluator& ev, const PointConfig& a,
               int M = 0, double* bridge_residual = nullptr);

// rho_n(a) = (1/pi^n) |V(a)|^2 (mu_tilde^n / mu^{n+1})
//            per(K_a^{(n+1)}(a_p, a_q)),
// with mu over T^n, mu_tilde over T^{n+1} (same construction with n+1
// angles and 1/(n+1)!), and K_a^{(n+1)}(z,w) the mu_tilde-expectation of
// S(z, t) conj(S(w, t)). One grid serves all three; n <= 3 (M^{n+1} nodes).
// M = 0 picks 128/64/48 for n = 1/2/3; error_estimate = |value(M) -
// value(M/2)|, with diagnostics["accuracy_warning"] = 1 when it exceeds
// 1e-3 * |value|.
CorrelationResult rho_n_spectral(const spectral::CovarianceEvaluator& ev,
                                 const PointConfig& a, int M = 0);

// CUE projection kernel k_n(theta, phi) = sin(n(theta-phi)/2) /
// sin((theta-phi)/2) with the removable singularity filled by its limit.
double cue_kernel(int n, double theta, double phi);

// Max relative residual over three identities: the Cauchy determinant
//   det(1/(1 - a_j b_k)) = V(a) V(b) prod_{j,k} (1 - a_j b_k)^{-1},
// prod_j prod_{k != j} (a_k - a_j) = (-1)^{n(n-1)/2} V(a)^2, and
// V(1/a_1,..,1/a_n) = (-1)^{n(n-1)/2} V(a) / (a_1..a_n)^{n-1} (skipped when
// some a_j = 0). Requires pairwise-distinct a and b with |a_j b_k| < 1.
double verify_cauchy(const std::vector<cx>& a, const std::vector<cx>& b);

// Relative residual of det(C) per(C) = det(C o C) for C = (1/(1 - a_p b_q)),
// o the entrywise product; n <= 10.
double verify_borchardt(const std::vector<cx>& a, const std::vector<cx>& b);

enum class ReproducingVariant { Plain, OverZ };

// Contour reproducing formula for a symmetric analytic Q, by M-node periodic
// midpoint quadrature per dimension on the unit circle (n <= 3):
//   Plain:  (2 pi i)^{-n} contour-int V(z)^2 prod_{k,j} (z_k - a_j)^{-1} Q(z)
//           prod dz_k = (-1)^{n(n-1)/2} n! Q(a)
//   OverZ:  same integrand with prod dz_k / z_k; right side gains the factor
//           prod 1/a_j and the Q(0, a^{(p)}) correction terms. Throws
//           std::invalid_argument when some a_j = 0 in the OverZ variant.
double verify_reproducing(const std::function<cx(const std::vector<cx>&)>& q,
                          const PointConfig& a, ReproducingVariant variant,
                          int M = 256);

struct VolumeFormulaResiduals {
  double mass = 0.0;    // worst relative defect of mu and mu_tilde vs S(a,a)
  double kernel = 0.0;  // worst defect of K_a^{(n+1)}(z,w) vs the closed form
};

// Lebesgue-only closed forms: mu_a(T^n) = mu_tilde_a(T^{n+1}) = S(a,a) with
// S(a,a) = prod_{j,k} (1 - a_j conj(a_k))^{-1}, and K_a^{(n+1)}(z,w) =
// (1 - z conj(w))^{-1} S(z,a) conj(S(w,a)), checked at five fixed probe
// pairs; n <= 2. Throws std::invalid_argument for other measures.
VolumeFormulaResiduals verify_volume_formula(const spectral::CovarianceEvaluator& ev,
                                             const PointConfig& a, int M = 0);

}  // namespace gafzeros::corr
