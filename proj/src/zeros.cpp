#include "gafzeros/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "gafzeros/matrix.hpp"
#include "gafzeros/threading.hpp"

namespace gafzeros::zeros {

namespace {

// Value and derivative of the monic polynomial with low-order coefficients c.
std::pair<cx, cx> horner_monic(const std::vector<cx>& c, cx x) {
  cx p = 1.0;
  cx dp = 0.0;
  for (long k = static_cast<long>(c.size()) - 1; k >= 0; --k) {
    dp = dp * x + p;
    p = p * x + c[static_cast<std::size_t>(k)];
  }
  return {p, dp};
}

// Simultaneous Aberth-Ehrlich iteration; true once the largest relative step
// drops below 1e-13, false after 200 sweeps.
bool aberth(const std::vector<cx>& c, std::vector<cx>& x) {
  const std::size_t g = c.size();
  for (int iter = 0; iter < 200; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < g; ++i) {
      const auto [p, dp] = horner_monic(c, x[i]);
      if (p == cx(0.0)) continue;
      if (dp == cx(0.0)) {
        x[i] += 1e-6 * (1.0 + std::abs(x[i]));
        worst = 1.0;
        continue;
      }
      const cx w = p / dp;
      cx s = 0.0;
      bool collision = false;
      for (std::size_t j = 0; j < g; ++j) {
        if (j == i) continue;
        const cx d = x[i] - x[j];
        if (d == cx(0.0)) {
          collision = true;
          break;
        }
        s += 1.0 / d;
      }
      if (collision) {
        x[i] += 1e-8 * (1.0 + std::abs(x[i]));
        worst = 1.0;
        continue;
      }
      const cx denom = 1.0 - w * s;
      const cx step = denom == cx(0.0) ? w : w / denom;
      x[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(x[i])));
    }
    if (worst <= 1e-13) return true;
  }
  return false;
}

// Complex Givens rotation G = [[c, s], [-conj(s), c]], c real, annihilating
// the second entry of (f, g).
void make_givens(cx f, cx g, double& c, cx& s) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  const double r = std::hypot(af, ag);
  if (r == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (af == 0.0) {
    c = 0.0;
    s = std::conj(g) / ag;
    return;
  }
  c = af / r;
  s = f * std::conj(g) / (r * af);
}

}  // namespace

namespace detail {

std::vector<cx> companion_eigenvalues(const std::vector<cx>& c) {
  const int g = static_cast<int>(c.size());
  if (g == 0) return {};
  if (g == 1) return {-c[0]};

  Matrix h(g, g);
  for (int i = 0; i + 1 < g; ++i) h(i + 1, i) = 1.0;
  for (int i = 0; i < g; ++i) h(i, g - 1) = h(i, g - 1) - c[static_cast<std::size_t>(i)];

  std::vector<cx> eig;
  eig.reserve(static_cast<std::size_t>(g));
  int active = g;
  long iter = 0;
  int stall = 0;  // sweeps since the last deflation
  const long max_iter = 80L * g + 400;
  const double eps = 1e-15;

  std::vector<double> rot_c(static_cast<std::size_t>(g));
  std::vector<cx> rot_s(static_cast<std::size_t>(g));

  while (active > 0) {
    if (++iter > max_iter) {
      throw NumericFailure("companion QR failed to converge",
                           static_cast<double>(active));
    }
    for (int i = 1; i < active; ++i) {
      if (std::abs(h(i, i - 1)) <=
          eps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)))) {
        h(i, i - 1) = 0.0;
      }
    }
    const int m = active - 1;
    if (m == 0) {
      eig.push_back(h(0, 0));
      active = 0;
      continue;
    }
    if (h(m, m - 1) == cx(0.0)) {
      eig.push_back(h(m, m));
      --active;
      stall = 0;
      continue;
    }
    const cx a = h(m - 1, m - 1);
    const cx b = h(m - 1, m);
    const cx cc = h(m, m - 1);
    const cx d = h(m, m);
    if (m == 1 || h(m - 1, m - 2) == cx(0.0)) {
      // isolated trailing 2x2 block, closed in one step
      const cx tr = a + d;
      const cx prod = a * d - b * cc;
      const cx disc = std::sqrt(tr * tr - 4.0 * prod);
      cx l1 = 0.5 * (tr + disc);
      const cx l1b = 0.5 * (tr - disc);
      if (std::abs(l1b) > std::abs(l1)) l1 = l1b;
      const cx l2 = l1 == cx(0.0) ? cx(0.0) : prod / l1;
      eig.push_back(l1);
      eig.push_back(l2);
      active -= 2;
      stall = 0;
      continue;
    }

    cx mu;
    if (++stall % 12 == 0) {
      // Exceptional shift; breaks the stationary sweeps that a symmetric
      // spectrum (e.g. roots of unity) produces under the Wilkinson shift.
      mu = cx(std::abs(cc) + std::abs(h(m - 1, m - 2)), 0.0);
    } else {
      // Wilkinson shift: the eigenvalue of the trailing 2x2 closer to d.
      const cx delta = 0.5 * (a - d);
      const cx sq = std::sqrt(delta * delta + b * cc);
      const cx den1 = delta + sq;
      const cx den2 = delta - sq;
      const cx den = std::abs(den1) >= std::abs(den2) ? den1 : den2;
      mu = den == cx(0.0) ? d : d - b * cc / den;
    }

    // explicit single-shift QR sweep on the active block
    for (int i = 0; i < active; ++i) h(i, i) -= mu;
    for (int k = 0; k + 1 < active; ++k) {
      make_givens(h(k, k), h(k + 1, k), rot_c[k], rot_s[k]);
      const double rc = rot_c[k];
      const cx rs = rot_s[k];
      for (int j = k; j < active; ++j) {
        const cx t1 = h(k, j);
        const cx t2 = h(k + 1, j);
        h(k, j) = rc * t1 + rs * t2;
        h(k + 1, j) = -std::conj(rs) * t1 + rc * t2;
      }
    }
    for (int k = 0; k + 1 < active; ++k) {
      const double rc = rot_c[k];
      const cx rs = rot_s[k];
      const int top = std::min(k + 1, active - 1);
      for (int i = 0; i <= top; ++i) {
        const cx t1 = h(i, k);
        const cx t2 = h(i, k + 1);
        h(i, k) = rc * t1 + std::conj(rs) * t2;
        h(i, k + 1) = -rs * t1 + rc * t2;
      }
    }
    for (int i = 0; i < active; ++i) h(i, i) += mu;
  }
  return eig;
}

}  // namespace detail

ZeroSet find_roots(const gauss::GafPolynomial& p) {
  const std::vector<cx>& xi = p.coefficients;
  if (xi.empty()) throw std::invalid_argument("polynomial has no coefficients");
  long d = static_cast<long>(xi.size()) - 1;
  while (d > 0 && xi[static_cast<std::size_t>(d)] == cx(0.0)) --d;
  if (d < 1) throw std::invalid_argument("effective degree must be at least 1");

  long m = 0;
  while (m < d && xi[static_cast<std::size_t>(m)] == cx(0.0)) ++m;

  std::vector<cx> roots(static_cast<std::size_t>(m), cx(0.0));
  const long g = d - m;
  std::vector<cx> c(static_cast<std::size_t>(g));
  for (long k = 0; k < g; ++k) {
    c[static_cast<std::size_t>(k)] =
        xi[static_cast<std::size_t>(m + k)] / xi[static_cast<std::size_t>(d)];
  }

  std::vector<cx> x;
  if (g == 1) {
    x.assign(1, -c[0]);
  } else {
    x.resize(static_cast<std::size_t>(g));
    const double radius =
        std::pow(std::abs(c[0]), 1.0 / static_cast<double>(g));
    for (long i = 0; i < g; ++i) {
      x[static_cast<std::size_t>(i)] = std::polar(
          radius, kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(g) + 0.25);
    }
    if (!aberth(c, x)) {
      x = detail::companion_eigenvalues(c);
    }
    for (cx& r : x) {
      for (int it = 0; it < 2; ++it) {
        const auto [pv, dpv] = horner_monic(c, r);
        if (dpv == cx(0.0)) break;
        r -= pv / dpv;
      }
    }
  }
  roots.insert(roots.end(), x.begin(), x.end());

  double max_coef = 0.0;
  for (long k = 0; k <= d; ++k) {
    max_coef = std::max(max_coef, std::abs(xi[static_cast<std::size_t>(k)]));
  }
  double worst = 0.0;
  for (const cx& r : roots) {
    cx value = 0.0;
    for (long k = d; k >= 0; --k) value = value * r + xi[static_cast<std::size_t>(k)];
    const double scale =
        max_coef * std::pow(std::max(1.0, std::abs(r)), static_cast<double>(d));
    worst = std::max(worst, std::abs(value) / scale);
  }
  if (worst > 1e-8) {
    throw NumericFailure("root residual exceeds the backward-error gate", worst);
  }

  ZeroSet zs;
  zs.roots = std::move(roots);
  zs.provenance = p.provenance;
  zs.worst_residual = worst;
  return zs;
}

CountSummary classify(const ZeroSet& zs, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("classification radius must be positive");
  CountSummary s;
  s.radius = r;
  for (const cx& z : zs.roots) {
    const double a = std::abs(z);
    if (std::abs(a - r) <= zs.boundary_tol) {
      ++s.on_boundary;
    } else if (a < r) {
      ++s.inside_disk;
      if (z.real() < 0.0) {
        ++s.inside_left_half;
      } else {
        ++s.inside_right_half;
      }
    } else {
      ++s.outside_disk;
    }
  }
  return s;
}

double expected_count_in_disk(long N, double r) {
  if (N < 0) throw std::invalid_argument("degree must be nonnegative");
  if (!(r > 0.0) || r > 1.0) {
    throw std::invalid_argument("radius must lie in (0, 1]");
  }
  if (r == 1.0) return static_cast<double>(N) / 2.0;
  const double r2 = r * r;
  const double rtop = std::pow(r2, static_cast<double>(N + 1));
  return r2 / (1.0 - r2) -
         static_cast<double>(N + 1) * rtop / (1.0 - rtop);
}

std::vector<McZeroRun> mc_zero_runs(const gauss::CoefficientSampler& sampler,
                                    long N, long runs, std::uint64_t seed_base) {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  std::vector<McZeroRun> out(static_cast<std::size_t>(runs));
  parallel_for(static_cast<std::size_t>(runs), [&](std::size_t i) {
    McZeroRun& run = out[i];
    run.run_id = static_cast<long>(i);
    run.seed = seed_base + static_cast<std::uint64_t>(i);
    gauss::ComplexNormalSource src(run.seed);
    const gauss::GafPolynomial poly = gauss::sample_coefficients(sampler, N, src);
    try {
      run.roots = find_roots(poly).roots;
    } catch (const NumericFailure&) {
      run.failed = true;
      run.roots.clear();
    }
  });
  return out;
}

HistogramSummary histogram_from_runs(const std::vector<McZeroRun>& runs,
                                     CountRegion region, double radius,
                                     double boundary_tol) {
  std::map<long, long> freq;
  std::vector<long> counts;
  counts.reserve(runs.size());
  long failed = 0;
  for (const McZeroRun& run : runs) {
    if (run.failed) {
      ++failed;
      continue;
    }
    ZeroSet zs;
    zs.roots = run.roots;
    zs.boundary_tol = boundary_tol;
    const CountSummary summary = classify(zs, radius);
    long c = 0;
    switch (region) {
      case CountRegion::Disk:
        c = summary.inside_disk;
        break;
      case CountRegion::LeftHalfInside:
        c = summary.inside_left_half;
        break;
      case CountRegion::RightHalfInside:
        c = summary.inside_right_half;
        break;
    }
    ++freq[c];
    counts.push_back(c);
  }

  HistogramSummary h;
  h.runs = static_cast<long>(runs.size());
  h.failed_runs = failed;
  h.tally.assign(freq.begin(), freq.end());
  if (!counts.empty()) {
    double sum = 0.0;
    for (long c : counts) sum += static_cast<double>(c);
    const double n = static_cast<double>(counts.size());
    h.mean = sum / n;
    if (counts.size() > 1) {
      double ss = 0.0;
      for (long c : counts) {
        const double dev = static_cast<double>(c) - h.mean;
        ss += dev * dev;
      }
      h.variance = ss / (n - 1.0);
      h.se = std::sqrt(h.variance / n);
    }
  }
  return h;
}

HistogramSummary mc_count_histogram(const gauss::CoefficientSampler& sampler,
                                    long N, long runs, std::uint64_t seed_base,
                                    CountRegion region, double radius) {
  return histogram_from_runs(mc_zero_runs(sampler, N, runs, seed_base), region,
                             radius);
}

AnnulusStats radial_annulus_means(const std::vector<McZeroRun>& runs, int annuli,
                                  double rmax) {
  if (annuli < 1) throw std::invalid_argument("need at least one annulus");
  if (!(rmax > 0.0)) throw std::invalid_argument("rmax must be positive");
  AnnulusStats st;
  st.edges.resize(static_cast<std::size_t>(annuli) + 1);
  for (int i = 0; i <= annuli; ++i) {
    st.edges[static_cast<std::size_t>(i)] =
        rmax * static_cast<double>(i) / static_cast<double>(annuli);
  }

  std::vector<std::vector<long>> per_run;
  per_run.reserve(runs.size());
  for (const McZeroRun& run : runs) {
    if (run.failed) continue;
    std::vector<long> counts(static_cast<std::size_t>(annuli), 0);
    for (const cx& z : run.roots) {
      const double a = std::abs(z);
      if (a >= rmax) continue;
      const int bin = std::min(annuli - 1,
                               static_cast<int>(a / rmax * static_cast<double>(annuli)));
      ++counts[static_cast<std::size_t>(bin)];
    }
    per_run.push_back(std::move(counts));
  }

  st.mean.assign(static_cast<std::size_t>(annuli), 0.0);
  st.se.assign(static_cast<std::size_t>(annuli), 0.0);
  if (per_run.empty()) return st;
  const double n = static_cast<double>(per_run.size());
  for (int b = 0; b < annuli; ++b) {
    double sum = 0.0;
    for (const auto& counts : per_run) sum += static_cast<double>(counts[static_cast<std::size_t>(b)]);
    const double mean = sum / n;
    st.mean[static_cast<std::size_t>(b)] = mean;
    if (per_run.size() > 1) {
      double ss = 0.0;
      for (const auto& counts : per_run) {
        const double dev = static_cast<double>(counts[static_cast<std::size_t>(b)]) - mean;
        ss += dev * dev;
      }
      st.se[static_cast<std::size_t>(b)] = std::sqrt(ss / (n - 1.0) / n);
    }
  }
  return st;
}

}  // namespace gafzeros::zeros
