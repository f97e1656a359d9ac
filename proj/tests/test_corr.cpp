#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "gafzeros/corr.hpp"
#include "gafzeros/gauss.hpp"
#include "gafzeros/matrix.hpp"
#include "gafzeros/spectral.hpp"

using gafzeros::cx;
using gafzeros::kPi;
using gafzeros::kTwoPi;
using gafzeros::Matrix;
namespace corr = gafzeros::corr;
namespace gauss = gafzeros::gauss;
namespace spectral = gafzeros::spectral;

namespace {

spectral::SpectralMeasure half_arc() {
  return spectral::SpectralMeasure::arc_uniform(-kPi / 2, kPi / 2);
}

// Expansion along the first row; exponential, for cross-checking Ryser.
cx permanent_brute(const Matrix& m, std::vector<int> cols = {}) {
  const int n = static_cast<int>(m.rows());
  if (cols.empty())
    for (int j = 0; j < n; ++j) cols.push_back(j);
  const int row = n - static_cast<int>(cols.size());
  if (cols.size() == 1) return m(row, cols[0]);
  cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    auto rest = cols;
    rest.erase(rest.begin() + static_cast<long>(i));
    acc += m(row, cols[i]) * permanent_brute(m, rest);
  }
  return acc;
}

// Two-point intensity of the hyperbolic GAF via the determinantal form with
// the Bergman-type kernel entries s_{jk} = 1/(1 - a_j conj(a_k)).
double bergman_rho2(cx a1, cx a2) {
  const cx s11 = 1.0 / (1.0 - a1 * std::conj(a1));
  const cx s22 = 1.0 / (1.0 - a2 * std::conj(a2));
  const cx s12 = 1.0 / (1.0 - a1 * std::conj(a2));
  const cx s21 = 1.0 / (1.0 - a2 * std::conj(a1));
  return ((s11 * s11) * (s22 * s22) - (s12 * s12) * (s21 * s21)).real() /
         (kPi * kPi);
}

std::vector<cx> random_disk_points(int n, std::uint64_t seed, double rmax,
                                   double min_sep) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> ur(0.05, rmax), ut(-kPi, kPi);
  std::vector<cx> pts;
  while (static_cast<int>(pts.size()) < n) {
    const cx cand = std::polar(ur(gen), ut(gen));
    bool ok = true;
    for (cx p : pts) ok = ok && std::abs(p - cand) >= min_sep;
    if (ok) pts.push_back(cand);
  }
  return pts;
}

}  // namespace

TEST_CASE("point configurations validate their inputs") {
  CHECK_THROWS_AS(corr::PointConfig({}), std::invalid_argument);
  CHECK_THROWS_AS(corr::PointConfig({cx(1.0, 0.0)}), std::invalid_argument);
  CHECK_THROWS_AS(corr::PointConfig({cx(0.8, 0.7)}), std::invalid_argument);
  CHECK_THROWS_AS(corr::PointConfig({cx(0.5, 0.0), cx(0.5, 1e-9)}),
                  std::invalid_argument);
  const corr::PointConfig ok({cx(0.5, 0.0), cx(0.5, 1e-6)}, 1e-7);
  CHECK(ok.n() == 2);
  CHECK(ok.min_separation() == 1e-7);
}

TEST_CASE("one-point intensity, derivative route") {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  SUBCASE("hyperbolic closed form 1/(pi (1-|z|^2)^2)") {
    CHECK(std::abs(corr::rho1_ek(leb, cx(0, 0)) - 1.0 / kPi) <= 1e-12);
    for (double r : {0.2, 0.5, 0.8})
      for (double th : {0.0, 1.0, -2.2}) {
        const cx z = std::polar(r, th);
        const double expected = 1.0 / (kPi * std::pow(1.0 - r * r, 2.0));
        CHECK(std::abs(corr::rho1_ek(leb, z) - expected) <= 1e-9 * expected);
      }
  }
  SUBCASE("truncated intensity matches its closed form") {
    for (long n : {1L, 7L, 100L})
      for (double r : {0.0, 0.3, 0.5, 0.77}) {
        const cx z = std::polar(r, 0.4);
        CHECK(std::abs(corr::rho1_ek_truncated(leb, n, z) -
                       spectral::truncated_hyperbolic_intensity(n, z)) <= 1e-10);
      }
    // A degree-0 polynomial has no zeros.
    CHECK(corr::rho1_ek_truncated(leb, 0, cx(0.3, 0.1)) == doctest::Approx(0.0));
  }
  SUBCASE("half-arc dead-zone constant at theta = +-pi/2") {
    spectral::CovarianceEvaluator arc(half_arc(), 512);
    const double target = 1.0 - (2.0 / kPi) * (2.0 / kPi);
    for (double r : {0.25, 0.5, 0.75})
      for (double sign : {1.0, -1.0}) {
        const cx z = std::polar(r, sign * kPi / 2);
        const double scaled =
            kPi * std::pow(1.0 - r * r, 2.0) * corr::rho1_ek(arc, z);
        CHECK(std::abs(scaled - target) <= 1e-8);
      }
  }
  SUBCASE("points outside the disk are rejected") {
    CHECK_THROWS_AS(corr::rho1_ek(leb, cx(1.2, 0.0)), std::domain_error);
  }
}

TEST_CASE("one-point intensity, spectral route") {
  SUBCASE("lebesgue at the origin") {
    spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
    CHECK(std::abs(corr::rho1_spectral(leb, cx(0, 0)) - 1.0 / kPi) <= 1e-10);
  }
  SUBCASE("atomic measures use the exact rule") {
    spectral::CovarianceEvaluator per(spectral::SpectralMeasure::roots_of_unity(3));
    for (cx z : {cx(0.2, 0.3), cx(-0.5, 0.1), cx(0.0, -0.6)})
      CHECK(std::abs(corr::rho1_spectral(per, z) - corr::rho1_ek(per, z)) <=
            1e-12);
  }
  SUBCASE("route agreement on the half-arc, including the dead zone") {
    spectral::CovarianceEvaluator arc(half_arc(), 512);
    for (cx z : {cx(0.3, 0.0), std::polar(0.3, 2.5), std::polar(0.6, -kPi / 2),
                 std::polar(0.8, 3.0)})
      CHECK(std::abs(corr::rho1_spectral(arc, z) - corr::rho1_ek(arc, z)) <=
            1e-8);
  }
  SUBCASE("explicit quadrature order is honored") {
    spectral::CovarianceEvaluator arc(half_arc(), 512);
    const cx z(0.4, 0.2);
    const double refined = corr::rho1_spectral(arc, z);
    const double fixed = corr::rho1_spectral(arc, z, 1024);
    CHECK(std::abs(refined - fixed) <= 1e-9);
  }
}

TEST_CASE("conditional kernel") {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  SUBCASE("vanishes at conditioned points") {
    const corr::PointConfig a({cx(0.4, 0.1), cx(-0.3, 0.2)});
    for (cx w : {cx(0.1, 0.5), cx(-0.6, 0.0)}) {
      CHECK(std::abs(corr::conditional_kernel(leb, a, a.points()[0], w)) <= 1e-12);
      CHECK(std::abs(corr::conditional_kernel(leb, a, w, a.points()[1])) <= 1e-12);
    }
  }
  SUBCASE("conditioning the hyperbolic kernel at the origin") {
    const corr::PointConfig origin({cx(0.0, 0.0)});
    const cx z(0.4, 0.0), w(0.0, 0.2);
    const cx q = z * std::conj(w);
    CHECK(std::abs(corr::conditional_kernel(leb, origin, z, w) -
                   q / (1.0 - q)) <= 1e-12);
  }
  SUBCASE("iterated single-point conditioning equals joint conditioning") {
    spectral::CovarianceEvaluator arc(half_arc(), 256);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
      const auto pts = random_disk_points(2, 900 + seed, 0.7, 0.2);
      const auto zw = random_disk_points(2, 7700 + seed, 0.8, 0.05);
      const corr::PointConfig both(pts);
      const corr::PointConfig first({pts[0]});
      const cx z = zw[0], w = zw[1];
      const cx joint = corr::conditional_kernel(arc, both, z, w);
      const cx k_zw = corr::conditional_kernel(arc, first, z, w);
      const cx k_za = corr::conditional_kernel(arc, first, z, pts[1]);
      const cx k_aw = corr::conditional_kernel(arc, first, pts[1], w);
      const cx k_aa = corr::conditional_kernel(arc, first, pts[1], pts[1]);
      CHECK(std::abs(joint - (k_zw - k_za * k_aw / k_aa)) <= 1e-10);
      // Conditional variances stay nonnegative.
      CHECK(corr::conditional_kernel(arc, both, z, z).real() >= -1e-12);
    }
  }
  SUBCASE("nearly coincident conditioning is rejected as ill-conditioned") {
    const corr::PointConfig tight({cx(0.5, 0.0), cx(0.5 + 1e-12, 0.0)}, 1e-13);
    CHECK_THROWS_AS(corr::conditional_kernel(leb, tight, cx(0.1, 0.1), cx(0.2, 0.0)),
                    gafzeros::IllConditionedError);
  }
}

TEST_CASE("permanent by ryser") {
  SUBCASE("known values") {
    Matrix ones2(2, 2), ones3(3, 3), m(2, 2), diag(3, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) ones2(i, j) = cx(1, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) ones3(i, j) = cx(1, 0);
    m(0, 0) = cx(1, 0);
    m(0, 1) = cx(2, 0);
    m(1, 0) = cx(3, 0);
    m(1, 1) = cx(4, 0);
    diag(0, 0) = cx(2, 0);
    diag(1, 1) = cx(3, 0);
    diag(2, 2) = cx(4, 0);
    CHECK(std::abs(corr::permanent(ones2) - cx(2, 0)) <= 1e-14);
    CHECK(std::abs(corr::permanent(ones3) - cx(6, 0)) <= 1e-13);
    CHECK(std::abs(corr::permanent(m) - cx(10, 0)) <= 1e-13);
    CHECK(std::abs(corr::permanent(diag) - cx(24, 0)) <= 1e-13);
  }
  SUBCASE("agreement with cofactor expansion on random matrices") {
    std::mt19937_64 gen(20240817);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int n = 1; n <= 6; ++n) {
      Matrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cx(nd(gen), nd(gen));
      const cx ryser = corr::permanent(a);
      const cx brute = permanent_brute(a);
      CHECK(std::abs(ryser - brute) <= 1e-12 * std::max(1.0, std::abs(brute)));
    }
  }
  SUBCASE("gaussian fourth-moment identity E prod |Y_p|^2 = per(C)") {
    // Y = A zeta with C = A A*; the permanent of C is the mixed moment.
    Matrix c(2, 2);
    c(0, 0) = cx(1, 0);
    c(0, 1) = cx(0.6, 0);
    c(1, 0) = cx(0.6, 0);
    c(1, 1) = cx(1, 0);
    const Matrix a = gauss::psd_sqrt(c);
    gauss::ComplexNormalSource src(606060);
    const int draws = 200000;
    double acc = 0.0, acc2 = 0.0;
    for (int i = 0; i < draws; ++i) {
      const cx z0 = src.next(), z1 = src.next();
      const cx y0 = a(0, 0) * z0 + a(0, 1) * z1;
      const cx y1 = a(1, 0) * z0 + a(1, 1) * z1;
      const double v = std::norm(y0) * std::norm(y1);
      acc += v;
      acc2 += v * v;
    }
    const double mean = acc / draws;
    const double se =
        std::sqrt((acc2 / draws - mean * mean) / (draws - 1.0));
    const double target = corr::permanent(c).real();  // 1 + 0.36
    CHECK(target == doctest::Approx(1.36));
    CHECK(std::abs(mean - target) <= 4.0 * se);
  }
  SUBCASE("size limits") {
    CHECK_THROWS_AS(corr::permanent(Matrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(corr::permanent(Matrix(21, 21)), gafzeros::SizeLimitError);
  }
}

TEST_CASE("n-point intensity, direct permanent route") {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  SUBCASE("reduces to the one-point intensity at n = 1") {
    for (cx z : {cx(0, 0), cx(0.3, -0.4), cx(-0.62, 0.1)}) {
      const auto r = corr::rho_n_direct(leb, corr::PointConfig({z}));
      CHECK(r.n == 1);
      CHECK(r.method == corr::Method::DirectPermanent);
      CHECK(std::abs(r.value - corr::rho1_ek(leb, z)) <= 1e-12);
    }
  }
  SUBCASE("hyperbolic pair value 7/(9 pi^2) at (0, 1/2)") {
    const auto r =
        corr::rho_n_direct(leb, corr::PointConfig({cx(0, 0), cx(0.5, 0)}));
    CHECK(std::abs(r.value - 7.0 / (9.0 * kPi * kPi)) <= 1e-10);
    CHECK(r.diagnostics.count("det_gram_re") == 1);
    CHECK(r.diagnostics.count("permanent_re") == 1);
  }
  SUBCASE("agreement with the determinantal two-point form") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
      const auto pts = random_disk_points(2, seed, 0.75, 0.15);
      const auto r = corr::rho_n_direct(leb, corr::PointConfig(pts));
      const double det_form = bergman_rho2(pts[0], pts[1]);
      CHECK(std::abs(r.value - det_form) <= 1e-8 * std::max(1.0, det_form));
    }
  }
  SUBCASE("symmetry and rotation invariance") {
    const cx a1(0.31, 0.2), a2(-0.4, 0.12);
    const auto fwd = corr::rho_n_direct(leb, corr::PointConfig({a1, a2}));
    const auto rev = corr::rho_n_direct(leb, corr::PointConfig({a2, a1}));
    CHECK(std::abs(fwd.value - rev.value) <= 1e-12 * std::abs(fwd.value));
    const cx rot = std::polar(1.0, 1.23);
    const auto turned =
        corr::rho_n_direct(leb, corr::PointConfig({rot * a1, rot * a2}));
    CHECK(std::abs(fwd.value - turned.value) <= 1e-9 * std::abs(fwd.value));
  }
  SUBCASE("pair intensity vanishes quadratically at coinciding points") {
    double prev = 0.0;
    for (double d : {0.1, 0.05, 0.025}) {
      const auto r =
          corr::rho_n_direct(leb, corr::PointConfig({cx(0, 0), cx(d, 0)}));
      if (prev > 0.0) {
        const double ratio = prev / r.value;
        CHECK(ratio >= 3.8);
        CHECK(ratio <= 4.3);
      }
      prev = r.value;
    }
  }
  SUBCASE("three-point evaluation stays finite and symmetric") {
    const auto pts = random_disk_points(3, 40, 0.7, 0.25);
    const auto abc = corr::rho_n_direct(leb, corr::PointConfig(pts));
    const auto bca = corr::rho_n_direct(
        leb, corr::PointConfig({pts[1], pts[2], pts[0]}));
    CHECK(abc.value > 0.0);
    CHECK(std::abs(abc.value - bca.value) <= 1e-10 * abc.value);
  }
  SUBCASE("size limit") {
    const auto pts = random_disk_points(5, 41, 0.7, 0.2);
    CHECK_THROWS_AS(corr::rho_n_direct(leb, corr::PointConfig(pts)),
                    gafzeros::SizeLimitError);
  }
}

TEST_CASE("moment measure masses") {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  SUBCASE("lebesgue closed form S(a, a)") {
    CHECK(std::abs(corr::mu_mass(leb, corr::PointConfig({cx(0, 0)})) - 1.0) <=
          1e-12);
    CHECK(std::abs(corr::mu_mass(leb, corr::PointConfig({cx(0.5, 0)})) -
                   4.0 / 3.0) <= 1e-10);
    const cx a1(0.3, 0.0), a2(0.0, -0.45);
    // The product over pairs is real by conjugate symmetry.
    cx prod(1.0, 0.0);
    for (cx aj : {a1, a2})
      for (cx ak : {a1, a2}) prod *= 1.0 - aj * std::conj(ak);
    const double mass = corr::mu_mass(leb, corr::PointConfig({a1, a2}));
    CHECK(std::abs(mass - 1.0 / prod.real()) <= 1e-8 / prod.real());
  }
  SUBCASE("vandermonde bridge to the gram determinant") {
    spectral::CovarianceEvaluator arc(half_arc(), 256);
    double bridge = 1.0;
    corr::mu_mass(arc, corr::PointConfig({cx(0.3, 0.0), cx(0.0, -0.4)}), 0,
                  &bridge);
    CHECK(bridge <= 1e-8);
  }
  SUBCASE("size limit") {
    const auto pts = random_disk_points(4, 42, 0.6, 0.2);
    CHECK_THROWS_AS(corr::mu_mass(leb, corr::PointConfig(pts)),
                    gafzeros::SizeLimitError);
  }
}

TEST_CASE("n-point intensity, moment-measure route") {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  SUBCASE("matches closed values for the hyperbolic GAF") {
    const auto r1 = corr::rho_n_spectral(leb, corr::PointConfig({cx(0, 0)}));
    CHECK(r1.method == corr::Method::Theorem4);
    CHECK(std::abs(r1.value - 1.0 / kPi) <= 1e-6);
    const auto r2 =
        corr::rho_n_spectral(leb, corr::PointConfig({cx(0, 0), cx(0.5, 0)}));
    CHECK(std::abs(r2.value - 7.0 / (9.0 * kPi * kPi)) <= 1e-4);
    CHECK(r2.diagnostics.count("mu_mass") == 1);
    CHECK(r2.diagnostics.count("quadrature_m") == 1);
    CHECK(r2.error_estimate >= 0.0);
  }
  SUBCASE("route agreement against the direct permanent") {
    spectral::CovarianceEvaluator arc(half_arc(), 256);
    for (std::uint64_t seed : {21u, 22u}) {
      const auto pts = random_disk_points(2, seed, 0.6, 0.2);
      const corr::PointConfig cfg(pts);
      const auto spec_route = corr::rho_n_spectral(arc, cfg);
      const auto direct = corr::rho_n_direct(arc, cfg);
      const double tol = std::max(1e-4, 3.0 * spec_route.error_estimate);
      CHECK(std::abs(spec_route.value - direct.value) <=
            tol * std::max(1.0, std::abs(direct.value)));
    }
  }
  SUBCASE("atomic measures are integrated exactly") {
    spectral::CovarianceEvaluator per(spectral::SpectralMeasure::roots_of_unity(4));
    const corr::PointConfig cfg({cx(0.25, 0.1), cx(-0.2, 0.3)});
    const auto spec_route = corr::rho_n_spectral(per, cfg);
    const auto direct = corr::rho_n_direct(per, cfg);
    CHECK(spec_route.error_estimate <= 1e-12);
    CHECK(std::abs(spec_route.value - direct.value) <=
          1e-9 * std::max(1.0, std::abs(direct.value)));
  }
  SUBCASE("size limit") {
    const auto pts = random_disk_points(4, 43, 0.6, 0.2);
    CHECK_THROWS_AS(corr::rho_n_spectral(leb, corr::PointConfig(pts)),
                    gafzeros::SizeLimitError);
  }
}

TEST_CASE("cue projection kernel") {
  CHECK(corr::cue_kernel(5, 0.7, 0.7) == doctest::Approx(5.0));
  CHECK(std::abs(corr::cue_kernel(2, 0.0, kPi)) <= 1e-12);
  // 2 pi periodicity in the difference, including the removable points:
  // k_n(theta + 2 pi, theta) = n (-1)^{n-1}.
  CHECK(corr::cue_kernel(3, 1.0 + kTwoPi, 1.0) == doctest::Approx(3.0));
  CHECK(corr::cue_kernel(4, 1.0 + kTwoPi, 1.0) == doctest::Approx(-4.0));
  CHECK(corr::cue_kernel(4, 0.3, 1.4) ==
        doctest::Approx(corr::cue_kernel(4, 1.4, 0.3)));
  CHECK_THROWS_AS(corr::cue_kernel(0, 0.0, 1.0), std::invalid_argument);

  SUBCASE("reproducing trace identity (1/2pi) int k_n^2 = n") {
    for (int n : {1, 3, 6}) {
      const int m = 512;
      double acc = 0.0;
      for (int j = 0; j < m; ++j) {
        const double t = -kPi + kTwoPi * (j + 0.5) / m;
        const double k = corr::cue_kernel(n, t, 0.0);
        acc += k * k / m;
      }
      CHECK(std::abs(acc - n) <= 1e-10);
    }
  }
  SUBCASE("determinantal correlations are nonnegative") {
    const std::vector<double> th = {0.1, 0.9, 2.0};
    Matrix k(3, 3);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) k(p, q) = cx(corr::cue_kernel(5, th[p], th[q]), 0);
    CHECK(gafzeros::determinant(k).real() >= -1e-9);
  }
}

TEST_CASE("determinant and permanent identities") {
  SUBCASE("cauchy determinant and vandermonde relations") {
    CHECK(corr::verify_cauchy({cx(0.3, 0)}, {cx(0.2, 0.1)}) <= 1e-14);
    CHECK(corr::verify_cauchy({cx(0.3, 0.0), cx(0.0, -0.2)},
                              {cx(0.1, 0.1), cx(-0.4, 0.0)}) <= 1e-13);
    // A zero entry skips only the inverse-Vandermonde relation.
    CHECK(corr::verify_cauchy({cx(0.0, 0.0), cx(0.5, 0.0)},
                              {cx(0.2, 0.0), cx(-0.3, 0.1)}) <= 1e-13);
    std::mt19937_64 gen(314159);
    std::uniform_real_distribution<double> ur(0.1, 0.9), ut(-kPi, kPi);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<cx> a, b;
      for (int i = 0; i < 6; ++i) {
        a.push_back(std::polar(ur(gen), ut(gen)));
        b.push_back(std::polar(ur(gen), ut(gen)));
      }
      CHECK(corr::verify_cauchy(a, b) <= 1e-9);
    }
    CHECK_THROWS_AS(corr::verify_cauchy({cx(0.1, 0)}, {}),
                    std::invalid_argument);
  }
  SUBCASE("borchardt identity") {
    CHECK(corr::verify_borchardt({cx(0.4, 0.1), cx(-0.2, 0.3)},
                                 {cx(0.1, -0.2), cx(0.5, 0.0)}) <= 1e-12);
    std::mt19937_64 gen(271828);
    std::uniform_real_distribution<double> ur(0.1, 0.85), ut(-kPi, kPi);
    std::vector<cx> a, b;
    for (int i = 0; i < 6; ++i) {
      a.push_back(std::polar(ur(gen), ut(gen)));
      b.push_back(std::polar(ur(gen), ut(gen)));
    }
    CHECK(corr::verify_borchardt(a, b) <= 1e-9);
    std::vector<cx> big_a(11), big_b(11);
    for (int i = 0; i < 11; ++i) {
      big_a[i] = std::polar(0.3, -kPi + kTwoPi * (i + 0.5) / 11);
      big_b[i] = std::polar(0.4, -kPi + kTwoPi * (i + 0.25) / 11);
    }
    CHECK_THROWS_AS(corr::verify_borchardt(big_a, big_b),
                    gafzeros::SizeLimitError);
  }
}

TEST_CASE("contour reproducing formulas") {
  const auto one = [](const std::vector<cx>&) { return cx(1.0, 0.0); };
  const auto sum = [](const std::vector<cx>& z) {
    cx acc(0.0, 0.0);
    for (cx v : z) acc += v;
    return acc;
  };
  const auto szego_product = [](const std::vector<cx>& z) {
    const cx c(0.35, -0.2);
    cx acc(1.0, 0.0);
    for (cx v : z) acc *= 1.0 / (1.0 - v * c);
    return acc;
  };
  SUBCASE("plain variant") {
    CHECK(corr::verify_reproducing(one, corr::PointConfig({cx(0.4, 0.0)}),
                                   corr::ReproducingVariant::Plain) <= 1e-12);
    const corr::PointConfig pair({cx(0.3, 0.0), cx(0.0, -0.2)});
    CHECK(corr::verify_reproducing(sum, pair,
                                   corr::ReproducingVariant::Plain) <= 1e-10);
    CHECK(corr::verify_reproducing(szego_product, pair,
                                   corr::ReproducingVariant::Plain) <= 1e-10);
    const auto triple = corr::PointConfig({cx(0.3, 0.0), cx(-0.1, 0.25),
                                           cx(0.05, -0.4)});
    CHECK(corr::verify_reproducing(szego_product, triple,
                                   corr::ReproducingVariant::Plain) <= 1e-9);
  }
  SUBCASE("variant with the extra 1/z factor") {
    CHECK(corr::verify_reproducing(one, corr::PointConfig({cx(0.5, 0.0)}),
                                   corr::ReproducingVariant::OverZ) <= 1e-10);
    const corr::PointConfig pair({cx(0.5, 0.0), cx(0.25, 0.0)});
    CHECK(corr::verify_reproducing(one, pair,
                                   corr::ReproducingVariant::OverZ) <= 1e-10);
    CHECK(corr::verify_reproducing(szego_product, pair,
                                   corr::ReproducingVariant::OverZ) <= 1e-10);
    CHECK_THROWS_AS(
        corr::verify_reproducing(one, corr::PointConfig({cx(0.0, 0.0)}),
                                 corr::ReproducingVariant::OverZ),
        std::invalid_argument);
  }
  SUBCASE("limits") {
    const auto quad = corr::PointConfig(
        {cx(0.3, 0.0), cx(-0.3, 0.0), cx(0.0, 0.3), cx(0.0, -0.3)});
    CHECK_THROWS_AS(corr::verify_reproducing(one, quad,
                                             corr::ReproducingVariant::Plain),
                    gafzeros::SizeLimitError);
    CHECK_THROWS_AS(corr::verify_reproducing(one, corr::PointConfig({cx(0.4, 0)}),
                                             corr::ReproducingVariant::Plain, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("volume formula for the lebesgue measure") {
  spectral::CovarianceEvaluator leb(spectral::SpectralMeasure::lebesgue());
  const auto single = corr::verify_volume_formula(
      leb, corr::PointConfig({cx(0.5, 0.0)}));
  CHECK(single.mass <= 1e-10);
  CHECK(single.kernel <= 1e-10);
  const auto pair = corr::verify_volume_formula(
      leb, corr::PointConfig({cx(0.3, 0.0), cx(0.0, 0.4)}));
  CHECK(pair.mass <= 1e-9);
  CHECK(pair.kernel <= 1e-9);
  spectral::CovarianceEvaluator arc(half_arc());
  CHECK_THROWS_AS(
      corr::verify_volume_formula(arc, corr::PointConfig({cx(0.3, 0.0)})),
      std::invalid_argument);
  const auto triple =
      corr::PointConfig({cx(0.3, 0.0), cx(-0.2, 0.2), cx(0.0, -0.35)});
  CHECK_THROWS_AS(corr::verify_volume_formula(leb, triple),
                  gafzeros::SizeLimitError);
}
