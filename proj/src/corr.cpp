#include "gafzeros/corr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>

namespace gafzeros::corr {

namespace {

cx vandermonde(const std::vector<cx>& a) {
  cx v = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = j + 1; k < a.size(); ++k) v *= a[k] - a[j];
  }
  return v;
}

cx cpow_int(cx base, int e) {
  cx out = 1.0;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

double factorial(int m) {
  double f = 1.0;
  for (int k = 2; k <= m; ++k) f *= static_cast<double>(k);
  return f;
}

double half_pair_sign(int n) {
  // (-1)^{n(n-1)/2}
  return (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
}

Matrix gram(const spectral::CovarianceEvaluator& ev, const std::vector<cx>& a) {
  const std::size_t n = a.size();
  Matrix g(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) g(p, q) = ev.kernel(a[p], a[q]);
  }
  return g;
}

// Tensor quadrature over m angle variables of the Vandermonde-weighted
// measure (1/m!) |V(e^{-it_1},..,e^{-it_m})|^2 |S(a,t)|^2 F^{(x)m}(dt).
// `k` and `pairs` come back as expectations against that (normalized)
// measure; `total` carries the 1/m! mass. Single-threaded fixed-order loop,
// so results are bit-stable.
struct TensorMassResult {
  double total = 0.0;
  Matrix k;               // E[S(a_p,t) conj(S(a_q,t))], when requested
  std::vector<cx> pairs;  // E[S(z_i,t) conj(S(w_i,t))] per probe pair
};

TensorMassResult tensor_mass(const spectral::CovarianceEvaluator& ev,
                             const std::vector<cx>& a, int m, int M, bool want_k,
                             const std::vector<std::pair<cx, cx>>& probes) {
  const spectral::QuadratureRule rule = spectral::build_rule(ev.measure(), M);
  const int nodes = static_cast<int>(rule.nodes.size());
  const int n = static_cast<int>(a.size());
  const int np = static_cast<int>(probes.size());

  std::vector<cx> unit(static_cast<std::size_t>(nodes));
  std::vector<std::vector<cx>> s_tab(static_cast<std::size_t>(n));
  std::vector<std::vector<cx>> z_tab(static_cast<std::size_t>(np));
  std::vector<std::vector<cx>> w_tab(static_cast<std::size_t>(np));
  for (int j = 0; j < nodes; ++j) {
    unit[static_cast<std::size_t>(j)] = std::polar(1.0, -rule.nodes[static_cast<std::size_t>(j)]);
  }
  for (int p = 0; p < n; ++p) {
    s_tab[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
      s_tab[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] =
          spectral::szego(a[static_cast<std::size_t>(p)], rule.nodes[static_cast<std::size_t>(j)]);
    }
  }
  for (int i = 0; i < np; ++i) {
    z_tab[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(nodes));
    w_tab[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
      z_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          spectral::szego(probes[static_cast<std::size_t>(i)].first,
                          rule.nodes[static_cast<std::size_t>(j)]);
      w_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          spectral::szego(probes[static_cast<std::size_t>(i)].second,
                          rule.nodes[static_cast<std::size_t>(j)]);
    }
  }

  double raw_total = 0.0;
  Matrix raw_k;
  if (want_k) raw_k = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::vector<cx> raw_pairs(static_cast<std::size_t>(np), cx(0.0));

  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  std::vector<cx> sz(static_cast<std::size_t>(n));
  for (;;) {
    double w = 1.0;
    double v2 = 1.0;
    for (int l = 0; l < m; ++l) {
      w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
      for (int l2 = l + 1; l2 < m; ++l2) {
        v2 *= std::norm(unit[static_cast<std::size_t>(idx[static_cast<std::size_t>(l2)])] -
                        unit[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])]);
      }
    }
    double s2 = 1.0;
    for (int p = 0; p < n; ++p) {
      cx prod = 1.0;
      for (int l = 0; l < m; ++l) {
        prod *= s_tab[static_cast<std::size_t>(p)][static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
      }
      sz[static_cast<std::size_t>(p)] = prod;
      s2 *= std::norm(prod);
    }
    const double base = w * v2 * s2;
    raw_total += base;
    if (want_k) {
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          raw_k(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) +=
              base * sz[static_cast<std::size_t>(p)] * std::conj(sz[static_cast<std::size_t>(q)]);
        }
      }
    }
    for (int i = 0; i < np; ++i) {
      cx pz = 1.0;
      cx pw = 1.0;
      for (int l = 0; l < m; ++l) {
        pz *= z_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
        pw *= w_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
      }
      raw_pairs[static_cast<std::size_t>(i)] += base * pz * std::conj(pw);
    }

    int l = 0;
    while (l < m) {
      if (++idx[static_cast<std::size_t>(l)] < nodes) break;
      idx[static_cast<std::size_t>(l)] = 0;
      ++l;
    }
    if (l == m) break;
  }

  TensorMassResult out;
  out.total = raw_total / factorial(m);
  if (want_k) {
    out.k = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        out.k(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) =
            raw_k(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) / raw_total;
      }
    }
  }
  out.pairs.resize(static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) {
    out.pairs[static_cast<std::size_t>(i)] = raw_pairs[static_cast<std::size_t>(i)] / raw_total;
  }
  return out;
}

int default_order(int n) { return n == 1 ? 128 : n == 2 ? 64 : 48; }

double rho1_spectral_at(const spectral::CovarianceEvaluator& ev, cx z, int M) {
  const spectral::QuadratureRule rule = spectral::build_rule(ev.measure(), M);
  const std::size_t nodes = rule.nodes.size();
  double k = 0.0;
  double qsum = 0.0;
  cx esum = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double s2 = std::norm(spectral::szego(z, rule.nodes[j]));
    const double wj = rule.weights[j];
    k += wj * s2;
    const double qj = wj * s2 * s2;
    qsum += qj;
    esum += qj * std::polar(1.0, -rule.nodes[j]);
  }
  if (!(k > 0.0)) throw std::domain_error("kernel is degenerate at this point");
  // sum_{j,u} q_j q_u |e_j - e_u|^2 = 2 (sum q)^2 - 2 |sum q e|^2
  const double num = qsum * qsum - std::norm(esum);
  return num / (kPi * k * k);
}

}  // namespace

PointConfig::PointConfig(std::vector<cx> points, double min_separation)
    : points_(std::move(points)), min_separation_(min_separation) {
  if (points_.empty()) {
    throw std::invalid_argument("point configuration must be non-empty");
  }
  for (const cx& z : points_) {
    if (!(std::abs(z) < 1.0)) {
      throw std::invalid_argument("points must lie in the open unit disk");
    }
  }
  for (std::size_t j = 0; j < points_.size(); ++j) {
    for (std::size_t k = j + 1; k < points_.size(); ++k) {
      if (std::abs(points_[j] - points_[k]) < min_separation_) {
        throw std::invalid_argument("points must be pairwise separated");
      }
    }
  }
}

std::string method_name(Method m) {
  switch (m) {
    case Method::EdelmanKostlan:
      return "EdelmanKostlan";
    case Method::SpectralRho1:
      return "SpectralRho1";
    case Method::DirectPermanent:
      return "DirectPermanent";
    case Method::Theorem4:
      return "Theorem4";
  }
  return "unknown";
}

double rho1_ek(const spectral::CovarianceEvaluator& ev, cx z) {
  const spectral::KernelJet jet = ev.kernel_derivatives(z, z);
  const double k = jet.k.real();
  if (!(k > 0.0)) throw std::domain_error("kernel is degenerate at this point");
  const double num = k * jet.dzdwbar.real() - std::norm(jet.dz);
  return num / (kPi * k * k);
}

double rho1_ek_truncated(const spectral::CovarianceEvaluator& ev, long N, cx z) {
  const spectral::KernelJet jet = ev.truncated_kernel_derivatives(N, z, z);
  const double k = jet.k.real();
  if (!(k > 0.0)) throw std::domain_error("truncated kernel is degenerate at this point");
  const double num = k * jet.dzdwbar.real() - std::norm(jet.dz);
  return num / (kPi * k * k);
}

double rho1_spectral(const spectral::CovarianceEvaluator& ev, cx z, int M) {
  if (M > 0) return rho1_spectral_at(ev, z, M);
  double prev = rho1_spectral_at(ev, z, 128);
  for (int mm = 256; mm <= 1024; mm *= 2) {
    const double v = rho1_spectral_at(ev, z, mm);
    if (std::abs(v - prev) <= 1e-10 * std::max(1.0, std::abs(v))) return v;
    prev = v;
  }
  return prev;
}

cx conditional_kernel(const spectral::CovarianceEvaluator& ev,
                      const PointConfig& a, cx z, cx w) {
  const std::vector<cx>& pts = a.points();
  const std::size_t n = pts.size();
  const Matrix g = gram(ev, pts);
  const cx detg = determinant(g);
  if (std::abs(detg) <= 1e-12) {
    throw IllConditionedError("gram matrix of conditioned points is numerically singular",
                              detg);
  }
  Matrix b(n + 1, n + 1);
  b(0, 0) = ev.kernel(z, w);
  for (std::size_t q = 0; q < n; ++q) b(0, q + 1) = ev.kernel(z, pts[q]);
  for (std::size_t p = 0; p < n; ++p) b(p + 1, 0) = ev.kernel(pts[p], w);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) b(p + 1, q + 1) = g(p, q);
  }
  return determinant(b) / detg;
}

cx permanent(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("permanent requires a square matrix");
  }
  const int n = static_cast<int>(a.rows());
  if (n > 20) throw SizeLimitError("permanent limited to n <= 20");
  if (n == 0) return cx(1.0);

  // Ryser: per(A) = (-1)^n sum over nonempty column subsets S of
  // (-1)^{|S|} prod_i (sum_{j in S} A_ij), with Gray-code subset updates.
  std::vector<cx> row_sum(static_cast<std::size_t>(n), cx(0.0));
  cx total = 0.0;
  std::uint32_t prev = 0;
  const std::uint32_t limit = (1u << n) - 1u;
  for (std::uint32_t k = 1; k <= limit; ++k) {
    const std::uint32_t gray = k ^ (k >> 1);
    const std::uint32_t diff = gray ^ prev;
    const int j = std::countr_zero(diff);
    if (gray & diff) {
      for (int i = 0; i < n; ++i) {
        row_sum[static_cast<std::size_t>(i)] += a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    } else {
      for (int i = 0; i < n; ++i) {
        row_sum[static_cast<std::size_t>(i)] -= a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
    prev = gray;
    cx prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sum[static_cast<std::size_t>(i)];
    if ((n - std::popcount(gray)) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

CorrelationResult rho_n_direct(const spectral::CovarianceEvaluator& ev,
                               const PointConfig& a) {
  const std::vector<cx>& pts = a.points();
  const int n = a.n();
  if (n > 4) throw SizeLimitError("rho_n_direct limited to n <= 4");

  Matrix g(pts.size(), pts.size());
  Matrix bz(pts.size(), pts.size());
  Matrix bw(pts.size(), pts.size());
  Matrix d4(pts.size(), pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    for (std::size_t q = 0; q < pts.size(); ++q) {
      const spectral::KernelJet jet = ev.kernel_derivatives(pts[p], pts[q]);
      g(p, q) = jet.k;
      bz(p, q) = jet.dz;
      bw(p, q) = jet.dwbar;
      d4(p, q) = jet.dzdwbar;
    }
  }
  const cx detg = determinant(g);
  if (std::abs(detg) <= 1e-12) {
    throw IllConditionedError("gram matrix of the configuration is numerically singular",
                              detg);
  }
  const Matrix x = solve(g, bw);
  const Matrix numerator = subtract(d4, multiply(bz, x));
  const cx per = permanent(numerator);
  const cx rho = per / (std::pow(kPi, n) * detg);

  CorrelationResult res;
  res.n = n;
  res.points = pts;
  res.method = Method::DirectPermanent;
  res.value = rho.real();
  res.error_estimate = 1e-12 * std::max(1.0, std::abs(res.value));
  res.diagnostics["det_gram_re"] = detg.real();
  res.diagnostics["det_gram_im"] = detg.imag();
  res.diagnostics["permanent_re"] = per.real();
  res.diagnostics["permanent_im"] = per.imag();
  res.diagnostics["rho_imag"] = rho.imag();
  return res;
}

double mu_mass(const spectral::CovarianceEvaluator& ev, const PointConfig& a,
               int M, double* bridge_residual) {
  const int n = a.n();
  if (n > 3) throw SizeLimitError("mu_mass limited to n <= 3");
  const int mm = M > 0 ? M : default_order(n);
  const TensorMassResult r = tensor_mass(ev, a.points(), n, mm, false, {});
  if (bridge_residual != nullptr) {
    const cx detg = determinant(gram(ev, a.points()));
    const double v2 = std::norm(vandermonde(a.points()));
    *bridge_residual =
        std::abs(detg - cx(v2 * r.total)) / std::max(std::abs(detg), 1e-300);
  }
  return r.total;
}

CorrelationResult rho_n_spectral(const spectral::CovarianceEvaluator& ev,
                                 const PointConfig& a, int M) {
  const int n = a.n();
  if (n > 3) throw SizeLimitError("rho_n_spectral limited to n <= 3");
  const int fine = M > 0 ? M : default_order(n);
  const int coarse = std::max(2, fine / 2);
  const double v2 = std::norm(vandermonde(a.points()));

  double mu_fine = 0.0;
  double mut_fine = 0.0;
  cx per_fine = 0.0;
  auto eval = [&](int mm, bool keep) -> double {
    const TensorMassResult mu = tensor_mass(ev, a.points(), n, mm, false, {});
    const TensorMassResult mt = tensor_mass(ev, a.points(), n + 1, mm, true, {});
    const cx per = permanent(mt.k);
    if (keep) {
      mu_fine = mu.total;
      mut_fine = mt.total;
      per_fine = per;
    }
    return v2 * std::pow(mt.total, n) / std::pow(mu.total, n + 1) * per.real() /
           std::pow(kPi, n);
  };

  const double v_coarse = eval(coarse, false);
  const double v_fine = eval(fine, true);

  CorrelationResult res;
  res.n = n;
  res.points = a.points();
  res.method = Method::Theorem4;
  res.value = v_fine;
  res.error_estimate = std::abs(v_fine - v_coarse);
  const cx detg = determinant(gram(ev, a.points()));
  res.diagnostics["mu_mass"] = mu_fine;
  res.diagnostics["mu_tilde_mass"] = mut_fine;
  res.diagnostics["permanent_re"] = per_fine.real();
  res.diagnostics["permanent_im"] = per_fine.imag();
  res.diagnostics["vandermonde_sq"] = v2;
  res.diagnostics["det_gram_re"] = detg.real();
  res.diagnostics["det_gram_im"] = detg.imag();
  res.diagnostics["quadrature_m"] = static_cast<double>(fine);
  res.diagnostics["accuracy_warning"] =
      res.error_estimate > 1e-3 * std::abs(res.value) ? 1.0 : 0.0;
  return res;
}

double cue_kernel(int n, double theta, double phi) {
  if (n < 1) throw std::invalid_argument("cue_kernel requires n >= 1");
  const double d = theta - phi;
  const double sh = std::sin(0.5 * d);
  if (std::abs(sh) < 1e-9) {
    // removable singularity: the limit is n cos(n d / 2) / cos(d / 2)
    return static_cast<double>(n) * std::cos(0.5 * static_cast<double>(n) * d) /
           std::cos(0.5 * d);
  }
  return std::sin(0.5 * static_cast<double>(n) * d) / sh;
}

double verify_cauchy(const std::vector<cx>& a, const std::vector<cx>& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) {
    throw std::invalid_argument("verify_cauchy requires equal non-empty point lists");
  }
  Matrix c(n, n);
  cx prod_fac = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const cx denom = 1.0 - a[j] * b[k];
      c(j, k) = 1.0 / denom;
      prod_fac *= denom;
    }
  }
  const cx va = vandermonde(a);
  const cx vb = vandermonde(b);
  const cx lhs = determinant(c);
  const cx rhs = va * vb / prod_fac;
  double worst = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);

  // prod_j prod_{k != j} (a_k - a_j) = (-1)^{n(n-1)/2} V(a)^2
  cx lhs2 = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) lhs2 *= a[k] - a[j];
    }
  }
  const cx rhs2 = half_pair_sign(static_cast<int>(n)) * va * va;
  worst = std::max(worst, std::abs(lhs2 - rhs2) / std::max(std::abs(rhs2), 1e-300));

  // V(1/a_1,..,1/a_n) = (-1)^{n(n-1)/2} V(a) / (a_1..a_n)^{n-1}
  bool all_nonzero = true;
  for (const cx& z : a) {
    if (z == cx(0.0)) all_nonzero = false;
  }
  if (all_nonzero) {
    std::vector<cx> inv(n);
    cx prod_a = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      inv[j] = 1.0 / a[j];
      prod_a *= a[j];
    }
    const cx lhs3 = vandermonde(inv);
    const cx rhs3 =
        half_pair_sign(static_cast<int>(n)) * va / cpow_int(prod_a, static_cast<int>(n) - 1);
    worst = std::max(worst, std::abs(lhs3 - rhs3) / std::max(std::abs(rhs3), 1e-300));
  }
  return worst;
}

double verify_borchardt(const std::vector<cx>& a, const std::vector<cx>& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) {
    throw std::invalid_argument("verify_borchardt requires equal non-empty point lists");
  }
  if (n > 10) throw SizeLimitError("verify_borchardt limited to n <= 10");
  Matrix c(n, n);
  Matrix c2(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const cx entry = 1.0 / (1.0 - a[p] * b[q]);
      c(p, q) = entry;
      c2(p, q) = entry * entry;
    }
  }
  const cx lhs = determinant(c) * permanent(c);
  const cx rhs = determinant(c2);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

double verify_reproducing(const std::function<cx(const std::vector<cx>&)>& q,
                          const PointConfig& a, ReproducingVariant variant,
                          int M) {
  const std::vector<cx>& pts = a.points();
  const int n = a.n();
  if (n > 3) throw SizeLimitError("verify_reproducing limited to n <= 3");
  if (M < 4) throw std::invalid_argument("verify_reproducing needs M >= 4");
  if (variant == ReproducingVariant::OverZ) {
    for (const cx& p : pts) {
      if (p == cx(0.0)) {
        throw std::invalid_argument("over_z variant requires nonzero points");
      }
    }
  }

  // Unit-circle nodes at midpoint angles; per-dimension contour weight is
  // z/M for the plain variant and 1/M once the dz/z is folded in.
  std::vector<cx> node(static_cast<std::size_t>(M));
  std::vector<cx> cfac(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    const double theta = -kPi + kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(M);
    node[static_cast<std::size_t>(j)] = std::polar(1.0, theta);
    cx f = 1.0;
    for (const cx& p : pts) f /= node[static_cast<std::size_t>(j)] - p;
    cfac[static_cast<std::size_t>(j)] = f;
  }

  cx lhs = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<cx> zvec(static_cast<std::size_t>(n));
  for (;;) {
    cx factor = 1.0;
    for (int l = 0; l < n; ++l) {
      const cx z = node[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
      zvec[static_cast<std::size_t>(l)] = z;
      factor *= cfac[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])];
      if (variant == ReproducingVariant::Plain) factor *= z;
    }
    cx v = 1.0;
    for (int l = 0; l < n; ++l) {
      for (int l2 = l + 1; l2 < n; ++l2) {
        v *= zvec[static_cast<std::size_t>(l2)] - zvec[static_cast<std::size_t>(l)];
      }
    }
    lhs += v * v * factor * q(zvec);

    int l = 0;
    while (l < n) {
      if (++idx[static_cast<std::size_t>(l)] < M) break;
      idx[static_cast<std::size_t>(l)] = 0;
      ++l;
    }
    if (l == n) break;
  }
  for (int l = 0; l < n; ++l) lhs /= static_cast<double>(M);

  const double sign = half_pair_sign(n);
  const double fact = factorial(n);
  cx rhs;
  if (variant == ReproducingVariant::Plain) {
    rhs = sign * fact * q(pts);
  } else {
    cx correction = 0.0;
    for (int p = 0; p < n; ++p) {
      cx coef = 1.0;
      std::vector<cx> arg;
      arg.reserve(static_cast<std::size_t>(n));
      arg.push_back(cx(0.0));
      for (int k = 0; k < n; ++k) {
        if (k == p) continue;
        coef *= pts[static_cast<std::size_t>(k)] /
                (pts[static_cast<std::size_t>(k)] - pts[static_cast<std::size_t>(p)]);
        arg.push_back(pts[static_cast<std::size_t>(k)]);
      }
      correction += coef * q(arg);
    }
    cx prod_a = 1.0;
    for (const cx& p : pts) prod_a *= p;
    rhs = sign * fact * (q(pts) - correction) / prod_a;
  }
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

VolumeFormulaResiduals verify_volume_formula(const spectral::CovarianceEvaluator& ev,
                                             const PointConfig& a, int M) {
  if (ev.measure().kind() != spectral::SpectralMeasure::Kind::Lebesgue) {
    throw std::invalid_argument("volume formula holds for the Lebesgue measure only");
  }
  const int n = a.n();
  if (n > 2) throw SizeLimitError("verify_volume_formula limited to n <= 2");
  const int mm = M > 0 ? M : (n == 1 ? 128 : 64);
  const std::vector<cx>& pts = a.points();

  static const std::vector<std::pair<cx, cx>> kProbes = {
      {cx(0.0, 0.0), cx(0.0, 0.0)},
      {cx(0.3, 0.1), cx(-0.2, 0.4)},
      {cx(0.5, 0.0), cx(0.0, 0.25)},
      {cx(-0.35, 0.2), cx(0.1, -0.55)},
      {cx(0.0, 0.6), cx(-0.44, 0.0)},
  };

  const TensorMassResult mu = tensor_mass(ev, pts, n, mm, false, {});
  const TensorMassResult mt = tensor_mass(ev, pts, n + 1, mm, false, kProbes);

  // The (j,k) and (k,j) factors are conjugate, so the product is real.
  cx saa_denom = 1.0;
  for (const cx& zj : pts) {
    for (const cx& zk : pts) saa_denom *= cx(1.0) - zj * std::conj(zk);
  }
  const double saa = 1.0 / saa_denom.real();

  VolumeFormulaResiduals res;
  res.mass = std::max(std::abs(mu.total - saa), std::abs(mt.total - saa)) / saa;
  for (std::size_t i = 0; i < kProbes.size(); ++i) {
    const cx z = kProbes[i].first;
    const cx w = kProbes[i].second;
    cx closed = 1.0 / (1.0 - z * std::conj(w));
    for (const cx& aj : pts) {
      closed *= (1.0 / (1.0 - z * std::conj(aj))) * std::conj(1.0 / (1.0 - w * std::conj(aj)));
    }
    const double rel =
        std::abs(mt.pairs[i] - closed) / std::max(std::abs(closed), 1e-300);
    res.kernel = std::max(res.kernel, rel);
  }
  return res;
}

}  // namespace gafzeros::corr
