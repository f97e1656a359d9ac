// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Every oracle here is computed independently of the code path under test
// (closed forms, brute-force expansions, Monte Carlo with seeded draws).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "gafzeros/corr.hpp"
#include "gafzeros/gauss.hpp"
#include "gafzeros/matrix.hpp"
#include "gafzeros/spectral.hpp"
#include "gafzeros/verify.hpp"
#include "gafzeros/zeros.hpp"

using gafzeros::cx;
using gafzeros::kPi;
using gafzeros::kTwoPi;
using gafzeros::Matrix;
namespace corr = gafzeros::corr;
namespace gauss = gafzeros::gauss;
namespace spectral = gafzeros::spectral;
namespace verify = gafzeros::verify;
namespace zeros = gafzeros::zeros;

namespace {

constexpr std::uint64_t kEnsembleSeed = 424242;
constexpr long kEnsembleRuns = 10000;
constexpr long kEnsembleDegree = 100;

int failures = 0;

void report(int index, const char* title, bool pass, const char* fmt, ...) {
  std::printf("[%s] %02d %-38s ", pass ? "PASS" : "FAIL", index, title);
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  if (!pass) ++failures;
}

spectral::SpectralMeasure half_arc() {
  return spectral::SpectralMeasure::arc_uniform(-kPi / 2, kPi / 2);
}

// 1. Half-arc autocovariance by quadrature against (2/pi) sin(k pi/2) / k.
void criterion_arc_gamma() {
  spectral::CovarianceEvaluator quad(half_arc(), 256, false);
  double worst = 0.0;
  for (long k = 1; k <= 50; ++k) {
    const double closed = (2.0 / kPi) * std::sin(0.5 * k * kPi) / double(k);
    worst = std::max(worst, std::abs(quad.gamma(k) - cx(closed, 0.0)));
  }
  report(1, "arc autocovariance closed form", worst <= 1e-12,
         "max residual %.2e (tol 1e-12), k = 1..50", worst);
}

// 2. Hyperbolic kernel by quadrature against 1/(1 - z conj w) on a 5x5 grid.
void criterion_hyperbolic_kernel() {
  spectral::CovarianceEvaluator quad(spectral::SpectralMeasure::lebesgue(), 256,
                                     false);
  std::vector<cx> pts;
  for (int i = 0; i < 5; ++i)
    pts.push_back(std::polar(0.9 * (i + 1) / 5.0, -kPi + kTwoPi * (i + 0.5) / 5.0));
  double worst = 0.0;
  for (cx z : pts)
    for (cx w : pts)
      worst = std::max(worst,
                       std::abs(quad.kernel(z, w) - 1.0 / (1.0 - z * std::conj(w))));
  report(2, "hyperbolic kernel quadrature", worst <= 1e-10,
         "max residual %.2e (tol 1e-10), 25 pairs, |z| <= 0.9", worst);
}

// 3. Truncated intensity via kernel jets against the closed form.
void criterion_truncated_intensity() {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  double worst = 0.0;
  for (long n : {1L, 7L, 100L})
    for (int i = 0; i < 10; ++i) {
      const cx z = std::polar(0.86 * (i + 0.5) / 10.0, -kPi + kTwoPi * i / 10.0);
      worst = std::max(worst,
                       std::abs(corr::rho1_ek_truncated(leb, n, z) -
                                spectral::truncated_hyperbolic_intensity(n, z)));
    }
  report(3, "truncated intensity closed form", worst <= 1e-10,
         "max residual %.2e (tol 1e-10), N in {1,7,100}", worst);
}

// 4. Expected count in a disk against a 2-D tensor quadrature of the
//    truncated intensity, plus the exact value N/2 at r = 1.
void criterion_expected_count() {
  const long n = 10;
  const double r = 0.9;
  const auto radial = spectral::build_rule(
      spectral::SpectralMeasure::arc_uniform(0.0, r), 200);
  const int sectors = 64;
  double integral = 0.0;
  for (std::size_t j = 0; j < radial.nodes.size(); ++j) {
    const double s = radial.nodes[j];
    double angular = 0.0;
    for (int q = 0; q < sectors; ++q) {
      const double t = -kPi + kTwoPi * (q + 0.5) / sectors;
      angular += spectral::truncated_hyperbolic_intensity(n, std::polar(s, t));
    }
    integral += radial.weights[j] * (angular / sectors) * s;
  }
  integral *= kTwoPi * r;  // GL weights are normalized to unit mass on [0, r]
  const double closed = zeros::expected_count_in_disk(n, r);
  const double residual = std::abs(integral - closed);
  const bool at_one = zeros::expected_count_in_disk(n, 1.0) == 5.0;
  report(4, "expected count in disk", residual <= 1e-6 && at_one,
         "2-D integral residual %.2e (tol 1e-6), E(1) = N/2 %s", residual,
         at_one ? "exact" : "violated");
}

// 5 and 10 share one seeded ensemble.
struct EnsembleChecks {
  double mean_seconds = 0.0;
  std::vector<zeros::McZeroRun> runs;
};

void criterion_ensemble_mean(const EnsembleChecks& e) {
  const auto h = zeros::histogram_from_runs(e.runs, zeros::CountRegion::Disk);
  const bool pass = h.failed_runs == 0 && std::abs(h.mean - 50.0) <= 3.0 * h.se;
  report(5, "ensemble mean zero count", pass,
         "mean %.4f, se %.4f, |mean-50| = %.4f <= 3 se (%ld runs, %.1fs)",
         h.mean, h.se, std::abs(h.mean - 50.0), h.runs, e.mean_seconds);
}

// 6. Dead-zone constant of the half-arc GAF at theta = +-pi/2.
void criterion_arc_constant() {
  spectral::CovarianceEvaluator arc(half_arc(), 512);
  const double target = 1.0 - (2.0 / kPi) * (2.0 / kPi);
  double worst = 0.0;
  for (double r : {0.25, 0.5, 0.75})
    for (double sign : {1.0, -1.0}) {
      const double v = kPi * std::pow(1.0 - r * r, 2.0) *
                       corr::rho1_ek(arc, std::polar(r, sign * kPi / 2));
      worst = std::max(worst, std::abs(v - target));
    }
  report(6, "half-arc dead-zone constant", worst <= 1e-8,
         "max residual %.2e (tol 1e-8) against 1 - (2/pi)^2", worst);
}

// 7. Two-point intensity of the hyperbolic GAF: permanent route and
//    moment-measure route against the determinantal closed form.
void criterion_two_point() {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  std::mt19937_64 gen(1234321);
  std::uniform_real_distribution<double> ur(0.1, 0.7), ut(-kPi, kPi);
  double worst_direct = 0.0, worst_spectral = 0.0;
  int pairs = 0;
  while (pairs < 10) {
    const cx a1 = std::polar(ur(gen), ut(gen));
    const cx a2 = std::polar(ur(gen), ut(gen));
    if (std::abs(a1 - a2) < 0.15) continue;
    ++pairs;
    const cx s11 = 1.0 / (1.0 - a1 * std::conj(a1));
    const cx s22 = 1.0 / (1.0 - a2 * std::conj(a2));
    const cx s12 = 1.0 / (1.0 - a1 * std::conj(a2));
    const cx s21 = 1.0 / (1.0 - a2 * std::conj(a1));
    const double det_form =
        ((s11 * s11) * (s22 * s22) - (s12 * s12) * (s21 * s21)).real() /
        (kPi * kPi);
    const corr::PointConfig cfg({a1, a2});
    worst_direct = std::max(
        worst_direct, std::abs(corr::rho_n_direct(leb, cfg).value - det_form));
    worst_spectral = std::max(
        worst_spectral,
        std::abs(corr::rho_n_spectral(leb, cfg).value - det_form));
  }
  const double spot =
      corr::rho_n_direct(leb, corr::PointConfig({cx(0, 0), cx(0.5, 0)})).value;
  const double spot_residual = std::abs(spot - 7.0 / (9.0 * kPi * kPi));
  const bool pass =
      worst_direct <= 1e-4 && worst_spectral <= 1e-4 && spot_residual <= 1e-10;
  report(7, "two-point intensity, both routes", pass,
         "direct %.2e, moment %.2e (tol 1e-4), spot 7/(9 pi^2) %.2e", worst_direct,
         worst_spectral, spot_residual);
}

// 8. Identity suite residuals plus an independent Ryser cross-check.
void criterion_identities() {
  double worst = 0.0;
  bool all_pass = true;
  for (const auto& c : verify::identity_suite()) {
    worst = std::max(worst, c.residual);
    all_pass = all_pass && c.pass;
  }
  // Permanent against first-row cofactor expansion.
  std::mt19937_64 gen(55555);
  std::normal_distribution<double> nd(0.0, 1.0);
  double ryser_worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = cx(nd(gen), nd(gen));
    std::vector<std::vector<cx>> memo(1u << n);
    // Iterative subset DP for the permanent: per(A) over columns chosen.
    std::vector<cx> dp(1u << n, cx(0, 0));
    dp[0] = cx(1, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      const int row = __builtin_popcount(mask) - 1;
      cx acc(0, 0);
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) acc += a(row, j) * dp[mask & ~(1u << j)];
      dp[mask] = acc;
    }
    const cx brute = dp[(1u << n) - 1];
    ryser_worst = std::max(ryser_worst,
                           std::abs(corr::permanent(a) - brute) /
                               std::max(1.0, std::abs(brute)));
  }
  const bool pass = all_pass && worst <= 1e-9 && ryser_worst <= 1e-12;
  report(8, "determinant/permanent/contour suite", pass,
         "suite max residual %.2e (tol 1e-9), ryser vs expansion %.2e", worst,
         ryser_worst);
}

// 9. Toeplitz square-root sampler: empirical covariance against the arc
//    gamma at 10k samples, and A^2 = T at size 129.
void criterion_toeplitz_sampler() {
  spectral::CovarianceEvaluator ev(half_arc());
  const Matrix t = gauss::toeplitz_covariance(ev, 129);
  const Matrix a = gauss::psd_sqrt(t);
  double frob = 0.0;
  for (std::size_t i = 0; i < 129; ++i)
    for (std::size_t j = 0; j < 129; ++j) {
      cx acc(0, 0);
      for (std::size_t k = 0; k < 129; ++k) acc += a(i, k) * a(k, j);
      frob += std::norm(acc - t(i, j));
    }
  frob = std::sqrt(frob) / gafzeros::frobenius_norm(t);

  const auto sampler = gauss::CoefficientSampler::toeplitz_sqrt(ev, 17);
  gauss::ComplexNormalSource src(987654);
  std::vector<gauss::GafPolynomial> samples;
  samples.reserve(10000);
  for (int i = 0; i < 10000; ++i)
    samples.push_back(gauss::sample_coefficients(sampler, 16, src));
  bool lags_ok = true;
  double worst_sigma = 0.0;
  for (long k = 0; k <= 3; ++k) {
    const auto est = gauss::empirical_covariance(samples, k);
    const cx target = ev.gamma(k);
    const double sig_re =
        std::abs(est.value.real() - target.real()) / std::max(est.se_re, 1e-15);
    const double sig_im =
        std::abs(est.value.imag() - target.imag()) / std::max(est.se_im, 1e-15);
    worst_sigma = std::max({worst_sigma, sig_re, sig_im});
    lags_ok = lags_ok && sig_re <= 3.0 && sig_im <= 3.0;
  }
  const bool pass = frob <= 1e-8 && lags_ok;
  report(9, "toeplitz sampler covariance", pass,
         "relative frobenius |A^2 - T| = %.2e (tol 1e-8), worst lag %.2f se",
         frob, worst_sigma);
}

// 10. Radial annulus counts from the shared ensemble against the integrated
//     truncated intensity.
void criterion_radial_profile(const EnsembleChecks& e) {
  const int annuli = 8;
  const double rmax = 0.95;
  const auto st = zeros::radial_annulus_means(e.runs, annuli, rmax);
  bool pass = true;
  double worst_sigma = 0.0;
  for (int i = 0; i < annuli; ++i) {
    // 2 pi int_{r_i}^{r_{i+1}} rho_1^{(N)}(s) s ds by Gauss-Legendre.
    const auto rule = spectral::build_rule(
        spectral::SpectralMeasure::arc_uniform(st.edges[i], st.edges[i + 1]), 64);
    double expected = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double s = rule.nodes[j];
      expected += rule.weights[j] *
                  spectral::truncated_hyperbolic_intensity(kEnsembleDegree,
                                                           cx(s, 0.0)) *
                  s;
    }
    expected *= kTwoPi * (st.edges[i + 1] - st.edges[i]);
    const double sigma = std::abs(st.mean[i] - expected) / st.se[i];
    worst_sigma = std::max(worst_sigma, sigma);
    pass = pass && sigma <= 3.0;
  }
  report(10, "radial zero density profile", pass,
         "worst annulus deviation %.2f se (tol 3 se, %d annuli, r <= %.2f)",
         worst_sigma, annuli, rmax);
}

}  // namespace

int main() {
  std::printf("acceptance criteria for the GAF zero laboratory\n");
  std::printf("-----------------------------------------------\n");
  criterion_arc_gamma();
  criterion_hyperbolic_kernel();
  criterion_truncated_intensity();
  criterion_expected_count();

  EnsembleChecks ensemble;
  const auto t0 = std::chrono::steady_clock::now();
  ensemble.runs = zeros::mc_zero_runs(gauss::CoefficientSampler::iid(),
                                      kEnsembleDegree, kEnsembleRuns,
                                      kEnsembleSeed);
  ensemble.mean_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  criterion_ensemble_mean(ensemble);

  criterion_arc_constant();
  criterion_two_point();
  criterion_identities();
  criterion_toeplitz_sampler();
  criterion_radial_profile(ensemble);

  std::printf("-----------------------------------------------\n");
  if (failures == 0) {
    std::printf("all 10 criteria satisfied\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
