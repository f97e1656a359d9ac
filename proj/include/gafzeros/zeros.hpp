#pragma once

#include <cstdint>
#include <vector>

#include "gafzeros/gauss.hpp"

namespace gafzeros::zeros {

/*
 * Roots of coefficient polynomials and Monte Carlo statistics of the zero
 * point process. Root counts always refer to the effective degree: trailing
 * zero coefficients are stripped, vanishing low-order coefficients contribute
 * exact roots at the origin.
 */

struct ZeroSet {
  std::vector<cx> roots;  // length = effective degree
  double boundary_tol = 1e-9;
  gauss::Provenance provenance;
  // Largest |p(root)| / (max_k |xi_k| * max(1,|root|)^deg) over the set.
  double worst_residual = 0.0;
};

struct CountSummary {
  long inside_disk = 0;
  long outside_disk = 0;
  long on_boundary = 0;
  long inside_left_half = 0;   // inside points with Re z < 0
  long inside_right_half = 0;  // inside points with Re z >= 0
  double radius = 1.0;
};

// All roots of p via Aberth-Ehrlich simultaneous iteration on the monic
// scaling, companion-matrix QR as fallback, one Newton polish pass, and a
// backward-error gate |p(root)| <= 1e-8 * max_k |xi_k| * max(1,|root|)^deg.
// Requires effective degree >= 1; throws NumericFailure with the worst
// relative residual when the gate fails after the fallback.
ZeroSet find_roots(const gauss::GafPolynomial& p);

// inside if |z| < r - tol, boundary if ||z| - r| <= tol, else outside.
// Inside points split by sign of Re z; Re z = 0 counts as right half.
CountSummary classify(const ZeroSet& zs, double r = 1.0);

// Expected number of zeros of the degree-N truncation of the Lebesgue GAF in
// the disk of radius r:
//   r^2/(1-r^2) - (N+1) r^{2(N+1)} / (1 - r^{2(N+1)}),   0 < r < 1,
// and exactly N/2 at r = 1. Throws std::invalid_argument outside (0, 1].
double expected_count_in_disk(long N, double r);

enum class CountRegion { Disk, LeftHalfInside, RightHalfInside };

struct McZeroRun {
  long run_id = 0;
  std::uint64_t seed = 0;
  std::vector<cx> roots;
  bool failed = false;  // root finder missed its backward-error gate
};

// One run per index: seed = seed_base + run_id, sample, root-find. Runs are
// independent and execute in parallel; a NumericFailure marks the run failed
// instead of propagating. Output order is by run_id regardless of schedule.
std::vector<McZeroRun> mc_zero_runs(const gauss::CoefficientSampler& sampler,
                                    long N, long runs, std::uint64_t seed_base);

struct HistogramSummary {
  std::vector<std::pair<long, long>> tally;  // count -> frequency, ascending
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance across runs
  double se = 0.0;        // standard error of the mean
  long runs = 0;
  long failed_runs = 0;  // reported and excluded from the tally
};

HistogramSummary histogram_from_runs(const std::vector<McZeroRun>& runs,
                                     CountRegion region, double radius = 1.0,
                                     double boundary_tol = 1e-9);

HistogramSummary mc_count_histogram(const gauss::CoefficientSampler& sampler,
                                    long N, long runs, std::uint64_t seed_base,
                                    CountRegion region, double radius = 1.0);

struct AnnulusStats {
  std::vector<double> edges;  // annuli + 1 radii, ascending from 0
  std::vector<double> mean;   // mean root count per annulus across runs
  std::vector<double> se;     // standard error of each mean
};

// Bins |root| into `annuli` equal-width radial annuli of [0, rmax); failed
// runs are excluded.
AnnulusStats radial_annulus_means(const std::vector<McZeroRun>& runs, int annuli,
                                  double rmax);

namespace detail {

// Eigenvalues of the companion matrix of the monic polynomial with low-order
// coefficients c[0..deg-1] (leading 1 implied), by shifted Hessenberg QR.
// Exposed for direct coverage of the fallback path.
std::vector<cx> companion_eigenvalues(const std::vector<cx>& c);

}  // namespace detail

}  // namespace gafzeros::zeros
