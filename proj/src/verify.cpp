#include "gafzeros/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gafzeros/corr.hpp"
#include "gafzeros/gauss.hpp"
#include "gafzeros/spectral.hpp"

namespace gafzeros::verify {

namespace {

using spectral::CovarianceEvaluator;
using spectral::SpectralMeasure;

Check make_check(std::string name, double residual, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

const std::vector<cx>& points6() {
  static const std::vector<cx> pts = {cx(0.31, 0.12),  cx(-0.24, 0.33),
                                      cx(0.05, -0.41), cx(-0.38, -0.17),
                                      cx(0.44, 0.02),  cx(0.11, 0.27)};
  return pts;
}

const std::vector<cx>& points6b() {
  static const std::vector<cx> pts = {cx(-0.15, 0.29), cx(0.42, -0.08),
                                      cx(0.03, 0.37),  cx(-0.33, -0.26),
                                      cx(0.21, -0.19), cx(-0.45, 0.06)};
  return pts;
}

std::vector<cx> take(const std::vector<cx>& pts, std::size_t n) {
  return std::vector<cx>(pts.begin(), pts.begin() + n);
}

// Brute-force permanent over all n! permutations.
cx permanent_brute(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  cx total = 0.0;
  do {
    cx prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// |S(a_p, a_q)|^2-style Bergman determinant oracle for the Lebesgue two-point
// function: rho_2(a) = det(S(a_p,a_q)^2) / pi^2 with S(z,w) = 1/(1-z conj(w)).
double bergman_rho2(cx a1, cx a2) {
  const cx s11 = 1.0 / (1.0 - a1 * std::conj(a1));
  const cx s12 = 1.0 / (1.0 - a1 * std::conj(a2));
  const cx s21 = 1.0 / (1.0 - a2 * std::conj(a1));
  const cx s22 = 1.0 / (1.0 - a2 * std::conj(a2));
  const cx det = s11 * s11 * s22 * s22 - s12 * s12 * s21 * s21;
  return det.real() / (kPi * kPi);
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<Check> identity_suite() {
  std::vector<Check> out;

  out.push_back(make_check(
      "cauchy_n1", corr::verify_cauchy({cx(0.3, 0.2)}, {cx(-0.4, 0.1)}), 1e-14));
  out.push_back(make_check(
      "cauchy_n3", corr::verify_cauchy(take(points6(), 3), take(points6b(), 3)),
      1e-12));
  out.push_back(
      make_check("cauchy_n6", corr::verify_cauchy(points6(), points6b()), 1e-10));

  out.push_back(make_check(
      "borchardt_n2",
      corr::verify_borchardt(take(points6(), 2), take(points6b(), 2)), 1e-12));
  out.push_back(
      make_check("borchardt_n6", corr::verify_borchardt(points6(), points6b()), 1e-9));

  // Ryser against the brute-force permutation sum, 100 seeded matrices.
  {
    std::mt19937_64 gen(20240817);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
      Matrix a(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cx(unif(gen), unif(gen));
      }
      const cx fast = corr::permanent(a);
      const cx brute = permanent_brute(a);
      worst = std::max(worst,
                       std::abs(fast - brute) / std::max(1.0, std::abs(brute)));
    }
    out.push_back(make_check("ryser_vs_brute_force", worst, 1e-12));
  }

  const auto q_one = [](const std::vector<cx>&) { return cx(1.0); };
  const auto q_e1 = [](const std::vector<cx>& z) {
    cx s = 0.0;
    for (const cx& zk : z) s += zk;
    return s;
  };
  const auto q_szego = [](const std::vector<cx>& z) {
    cx s = 1.0;
    for (const cx& zk : z) s *= 1.0 / (1.0 - zk * cx(0.35, -0.2));
    return s;
  };

  out.push_back(make_check(
      "reproducing_plain_n1",
      corr::verify_reproducing(q_one, corr::PointConfig({cx(0.3, 0.0)}),
                               corr::ReproducingVariant::Plain),
      1e-12));
  out.push_back(make_check(
      "reproducing_plain_n2",
      corr::verify_reproducing(q_e1, corr::PointConfig({cx(0.3, 0.0), cx(0.0, -0.2)}),
                               corr::ReproducingVariant::Plain),
      1e-10));
  out.push_back(make_check(
      "reproducing_plain_n2_szego",
      corr::verify_reproducing(q_szego,
                               corr::PointConfig({cx(0.25, 0.15), cx(-0.3, 0.1)}),
                               corr::ReproducingVariant::Plain),
      1e-10));
  out.push_back(make_check(
      "reproducing_overz_n1",
      corr::verify_reproducing(q_szego, corr::PointConfig({cx(0.4, 0.1)}),
                               corr::ReproducingVariant::OverZ),
      1e-10));
  out.push_back(make_check(
      "reproducing_overz_n2",
      corr::verify_reproducing(q_one, corr::PointConfig({cx(0.5, 0.0), cx(0.25, 0.0)}),
                               corr::ReproducingVariant::OverZ),
      1e-10));

  {
    const CovarianceEvaluator lebesgue(SpectralMeasure::lebesgue());
    const corr::VolumeFormulaResiduals v1 =
        corr::verify_volume_formula(lebesgue, corr::PointConfig({cx(0.5, 0.0)}));
    out.push_back(make_check("volume_formula_mass_n1", v1.mass, 1e-10));
    out.push_back(make_check("volume_formula_kernel_n1", v1.kernel, 1e-10));
    const corr::VolumeFormulaResiduals v2 = corr::verify_volume_formula(
        lebesgue, corr::PointConfig({cx(0.3, 0.0), cx(0.0, 0.4)}));
    out.push_back(make_check("volume_formula_mass_n2", v2.mass, 1e-9));
    out.push_back(make_check("volume_formula_kernel_n2", v2.kernel, 1e-9));
  }

  return out;
}

std::vector<Check> correlation_suite() {
  std::vector<Check> out;

  const CovarianceEvaluator lebesgue(SpectralMeasure::lebesgue());
  const CovarianceEvaluator arc(SpectralMeasure::arc_uniform(-kPi / 2.0, kPi / 2.0));
  const CovarianceEvaluator atoms(SpectralMeasure::roots_of_unity(3));

  out.push_back(make_check(
      "rho1_lebesgue_origin",
      std::abs(corr::rho1_ek(lebesgue, cx(0.0)) - 1.0 / kPi), 1e-12));

  {
    double worst = 0.0;
    for (const long n : {1L, 7L, 100L}) {
      for (int i = 0; i < 10; ++i) {
        const cx z = std::polar(0.08 * static_cast<double>(i + 1),
                                0.7 * static_cast<double>(i));
        worst = std::max(worst,
                         std::abs(corr::rho1_ek_truncated(lebesgue, n, z) -
                                  spectral::truncated_hyperbolic_intensity(n, z)));
      }
    }
    out.push_back(make_check("rho1_truncated_closed_form", worst, 1e-10));
  }

  {
    const double target = 1.0 - 4.0 / (kPi * kPi);
    double worst = 0.0;
    for (const double r : {0.25, 0.5, 0.75}) {
      for (const double sgn : {1.0, -1.0}) {
        const cx z = std::polar(r, sgn * kPi / 2.0);
        const double g = kPi * (1.0 - r * r) * (1.0 - r * r) * corr::rho1_ek(arc, z);
        worst = std::max(worst, std::abs(g - target));
      }
    }
    out.push_back(make_check("arc_halfpi_constant", worst, 1e-8));
  }

  {
    double worst = 0.0;
    for (const CovarianceEvaluator* ev : {&lebesgue, &arc, &atoms}) {
      for (int ir = 0; ir < 5; ++ir) {
        const double r = 0.1 + 0.2 * static_cast<double>(ir);
        for (int it = 0; it < 8; ++it) {
          const cx z = std::polar(r, -kPi + kTwoPi * (static_cast<double>(it) + 0.5) / 8.0);
          worst = std::max(worst, std::abs(corr::rho1_ek(*ev, z) -
                                           corr::rho1_spectral(*ev, z)));
        }
      }
    }
    out.push_back(make_check("rho1_route_agreement", worst, 1e-8));
  }

  {
    // maximality of the Lebesgue intensity among unit-mass spectral measures
    double excess = 0.0;
    for (const CovarianceEvaluator* ev : {&arc, &atoms}) {
      for (int ir = 0; ir < 5; ++ir) {
        const double r = 0.1 + 0.2 * static_cast<double>(ir);
        for (int it = 0; it < 8; ++it) {
          const cx z = std::polar(r, -kPi + kTwoPi * (static_cast<double>(it) + 0.5) / 8.0);
          excess = std::max(excess, corr::rho1_ek(*ev, z) - corr::rho1_ek(lebesgue, z));
        }
      }
    }
    out.push_back(make_check("hyperbolic_maximality", std::max(0.0, excess), 1e-10));
  }

  {
    const corr::PointConfig pair({cx(0.0), cx(0.5, 0.0)});
    const corr::CorrelationResult direct = corr::rho_n_direct(lebesgue, pair);
    const double oracle = 7.0 / (9.0 * kPi * kPi);
    out.push_back(
        make_check("peres_virag_spot_direct", std::abs(direct.value - oracle), 1e-10));
    const corr::CorrelationResult spectral_route = corr::rho_n_spectral(lebesgue, pair);
    out.push_back(make_check("peres_virag_spot_spectral",
                             std::abs(spectral_route.value - oracle), 1e-4));
  }

  {
    static const std::vector<std::pair<cx, cx>> pairs = {
        {cx(0.2, 0.0), cx(-0.3, 0.0)},
        {cx(0.1, 0.25), cx(-0.15, -0.2)},
        {cx(0.35, -0.1), cx(0.05, 0.3)},
    };
    double worst = 0.0;
    for (const CovarianceEvaluator* ev : {&lebesgue, &arc}) {
      for (const auto& [a1, a2] : pairs) {
        const corr::PointConfig cfg({a1, a2});
        const corr::CorrelationResult d = corr::rho_n_direct(*ev, cfg);
        const corr::CorrelationResult s = corr::rho_n_spectral(*ev, cfg);
        const double tol_scale = std::max(1e-4, 3.0 * s.error_estimate);
        worst = std::max(worst, std::abs(d.value - s.value) / tol_scale);
      }
    }
    // normalized so 1.0 marks the documented agreement threshold
    out.push_back(make_check("rho2_route_agreement", worst, 1.0));

    double worst_oracle = 0.0;
    for (const auto& [a1, a2] : pairs) {
      const corr::CorrelationResult d = corr::rho_n_direct(lebesgue, corr::PointConfig({a1, a2}));
      worst_oracle = std::max(worst_oracle, std::abs(d.value - bergman_rho2(a1, a2)));
    }
    out.push_back(make_check("rho2_bergman_determinant", worst_oracle, 1e-8));
  }

  {
    double worst = 0.0;
    for (const CovarianceEvaluator* ev : {&lebesgue, &arc}) {
      for (int n = 1; n <= 3; ++n) {
        std::vector<cx> pts = {cx(0.3, 0.1), cx(-0.2, 0.25), cx(0.15, -0.3)};
        pts.resize(static_cast<std::size_t>(n));
        double bridge = 0.0;
        corr::mu_mass(*ev, corr::PointConfig(pts), 0, &bridge);
        worst = std::max(worst, bridge);
      }
    }
    out.push_back(make_check("det_vandermonde_bridge", worst, 1e-8));
  }

  {
    // (1/2pi) integral of k_3(theta, phi)^2 dphi = 3
    const int m = 512;
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      const double phi = -kPi + kTwoPi * (static_cast<double>(j) + 0.5) / m;
      const double k = corr::cue_kernel(3, 0.7, phi);
      sum += k * k / static_cast<double>(m);
    }
    out.push_back(make_check("cue_trace_identity", std::abs(sum - 3.0), 1e-10));
  }

  return out;
}

std::vector<Check> kernel_suite() {
  std::vector<Check> out;

  const CovarianceEvaluator arc_quad(
      SpectralMeasure::arc_uniform(-kPi / 2.0, kPi / 2.0), 256, false);
  const CovarianceEvaluator leb_quad(SpectralMeasure::lebesgue(), 256, false);
  const CovarianceEvaluator leb(SpectralMeasure::lebesgue());
  const CovarianceEvaluator per_quad(SpectralMeasure::roots_of_unity(4), 256, false);
  const CovarianceEvaluator per(SpectralMeasure::roots_of_unity(4));

  {
    // gamma(k) of the half-circle arc vs (2/pi) sin(k pi/2) / k
    double worst = 0.0;
    for (long k = 1; k <= 50; ++k) {
      const double closed = 2.0 / kPi * std::sin(static_cast<double>(k) * kPi / 2.0) /
                            static_cast<double>(k);
      worst = std::max(worst, std::abs(arc_quad.gamma(k) - cx(closed)));
    }
    out.push_back(make_check("arc_gamma_closed_form", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const cx z = std::polar(0.18 * static_cast<double>(i + 1), 0.9 * i);
        const cx w = std::polar(0.18 * static_cast<double>(j + 1), -0.7 * j + 0.3);
        worst = std::max(worst, std::abs(leb_quad.kernel(z, w) -
                                         1.0 / (1.0 - z * std::conj(w))));
      }
    }
    out.push_back(make_check("hyperbolic_kernel_quadrature", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const cx z = std::polar(0.2 * static_cast<double>(i + 1), 1.1 * i - 0.4);
        const cx w = std::polar(0.2 * static_cast<double>(j + 1), 0.6 * j + 0.2);
        worst = std::max(worst, std::abs(per_quad.kernel(z, w) - per.kernel(z, w)));
        worst = std::max(worst, std::abs(leb_quad.kernel(z, w) - leb.kernel(z, w)));
      }
    }
    out.push_back(make_check("closed_forms_vs_quadrature", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const cx z = std::polar(0.22 * static_cast<double>(i + 1), 0.8 * i + 0.1);
        const cx w = std::polar(0.22 * static_cast<double>(j + 1), -0.5 * j - 0.2);
        worst = std::max(worst, std::abs(arc_quad.kernel(z, w) -
                                         std::conj(arc_quad.kernel(w, z))));
      }
    }
    out.push_back(make_check("kernel_hermitian_symmetry", worst, 1e-15));
  }

  {
    // Poisson kernel has unit mass against the Lebesgue measure
    const spectral::QuadratureRule rule =
        spectral::build_rule(SpectralMeasure::lebesgue(), 256);
    double worst = 0.0;
    for (const double r : {0.2, 0.5, 0.8}) {
      double mass = 0.0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        mass += rule.weights[j] * spectral::poisson(r, 0.4 - rule.nodes[j]);
      }
      worst = std::max(worst, std::abs(mass - 1.0));
    }
    out.push_back(make_check("poisson_unit_mass", worst, 1e-12));
  }

  {
    // corrected arc diagonal closed form vs quadrature
    double worst = 0.0;
    for (int ir = 1; ir <= 9; ++ir) {
      const double r = 0.1 * static_cast<double>(ir);
      for (int it = 0; it < 8; ++it) {
        const double theta = -kPi + kTwoPi * (static_cast<double>(it) + 0.5) / 8.0;
        const cx z = std::polar(r, theta);
        worst = std::max(worst, std::abs(arc_quad.kernel(z, z) -
                                         cx(spectral::arc_half_diagonal(r, theta))));
      }
    }
    out.push_back(make_check("arc_diagonal_closed_form", worst, 1e-9));
  }

  {
    double worst_eig = 0.0;
    double worst_sqrt = 0.0;
    for (const CovarianceEvaluator* ev : {&leb, &arc_quad, &per}) {
      const Matrix t = gauss::toeplitz_covariance(*ev, 64);
      const gauss::HermitianEigResult eig = gauss::hermitian_eig(t);
      worst_eig = std::max(worst_eig, -eig.eigenvalues.front());
      const Matrix a = gauss::psd_sqrt(t);
      const Matrix diff = subtract(multiply(a, a), t);
      worst_sqrt =
          std::max(worst_sqrt, frobenius_norm(diff) / frobenius_norm(t));
    }
    out.push_back(make_check("toeplitz_psd", std::max(0.0, worst_eig), 1e-10));
    out.push_back(make_check("toeplitz_sqrt_frobenius", worst_sqrt, 1e-10));
  }

  {
    // truncated kernel: gamma-sum route vs closed form
    double worst = 0.0;
    for (const long n : {5L, 20L}) {
      for (int i = 0; i < 4; ++i) {
        const cx z = std::polar(0.2 * static_cast<double>(i + 1), 0.5 * i);
        const cx w = std::polar(0.15 * static_cast<double>(i + 1), -0.3 * i + 0.9);
        worst = std::max(worst,
                         std::abs(leb_quad.truncated_kernel(n, z, w) -
                                  leb.truncated_kernel(n, z, w)));
      }
    }
    out.push_back(make_check("truncated_kernel_routes", worst, 1e-12));
  }

  return out;
}

}  // namespace gafzeros::verify
