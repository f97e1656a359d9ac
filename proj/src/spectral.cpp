#include "gafzeros/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace gafzeros::spectral {

namespace {

double normalize_angle(double a) {
  // Maps to (-pi, pi]; inputs are finite angles a few turns wide at most.
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// three-term recurrence. Machine precision for the orders used here.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

cx ipow(cx base, long e) {
  cx out(1.0, 0.0);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool is_uniform_roots_of_unity(const SpectralMeasure& m, int& n_out) {
  const auto& ang = m.angles();
  const auto& wts = m.weights();
  const int n = static_cast<int>(ang.size());
  if (n == 0) return false;
  for (double w : wts)
    if (std::abs(w - 1.0 / n) > 1e-12) return false;
  std::vector<double> expected(n), got(ang);
  for (int k = 0; k < n; ++k) expected[k] = normalize_angle(kTwoPi * k / n);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  for (int k = 0; k < n; ++k)
    if (std::abs(expected[k] - got[k]) > 1e-12) return false;
  n_out = n;
  return true;
}

}  // namespace

SpectralMeasure SpectralMeasure::lebesgue() {
  SpectralMeasure m;
  m.kind_ = Kind::Lebesgue;
  return m;
}

SpectralMeasure SpectralMeasure::atoms(std::vector<double> angles,
                                       std::vector<double> weights) {
  if (angles.empty() || angles.size() != weights.size())
    throw std::invalid_argument("atoms: angles/weights size mismatch or empty");
  double mass = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("atoms: weights must be positive");
    mass += w;
  }
  if (std::abs(mass - 1.0) > 1e-12)
    throw std::invalid_argument("atoms: weights must sum to 1");
  for (double& a : angles) a = normalize_angle(a);
  std::vector<double> sorted = angles;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (std::abs(sorted[i] - sorted[i - 1]) <= 1e-12)
      throw std::invalid_argument("atoms: angles must be pairwise distinct");
  SpectralMeasure m;
  m.kind_ = Kind::Atoms;
  m.angles_ = std::move(angles);
  m.weights_ = std::move(weights);
  return m;
}

SpectralMeasure SpectralMeasure::arc_uniform(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("arc_uniform: requires hi > lo");
  if (hi - lo > kTwoPi + 1e-12)
    throw std::invalid_argument("arc_uniform: arc length exceeds 2*pi");
  SpectralMeasure m;
  m.kind_ = Kind::ArcUniform;
  m.lo_ = lo;
  m.hi_ = hi;
  return m;
}

SpectralMeasure SpectralMeasure::tabulated_density(std::vector<double> nodes,
                                                   std::vector<double> values) {
  if (nodes.size() < 2 || nodes.size() != values.size())
    throw std::invalid_argument("tabulated_density: need >= 2 matching nodes/values");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i] > nodes[i - 1]))
      throw std::invalid_argument("tabulated_density: nodes must be strictly increasing");
  if (std::abs(nodes.front() + kPi) > 1e-12 || std::abs(nodes.back() - kPi) > 1e-12)
    throw std::invalid_argument("tabulated_density: nodes must cover (-pi, pi]");
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (values[i] < 0.0 || values[i + 1] < 0.0)
      throw std::invalid_argument("tabulated_density: values must be nonnegative");
    mass += 0.5 * (values[i] + values[i + 1]) * (nodes[i + 1] - nodes[i]);
  }
  if (std::abs(mass - 1.0) > 1e-8)
    throw std::invalid_argument("tabulated_density: total mass must be 1 within 1e-8");
  SpectralMeasure m;
  m.kind_ = Kind::TabulatedDensity;
  m.nodes_ = std::move(nodes);
  m.values_ = std::move(values);
  return m;
}

SpectralMeasure SpectralMeasure::roots_of_unity(int n) {
  if (n < 1) throw std::invalid_argument("roots_of_unity: n >= 1 required");
  std::vector<double> angles(n), weights(n, 1.0 / n);
  for (int k = 0; k < n; ++k) angles[k] = normalize_angle(kTwoPi * k / n);
  return atoms(std::move(angles), std::move(weights));
}

QuadratureRule build_rule(const SpectralMeasure& measure, int M) {
  QuadratureRule rule;
  switch (measure.kind()) {
    case SpectralMeasure::Kind::Lebesgue: {
      if (M < 2) throw std::invalid_argument("build_rule: M >= 2 for continuous measures");
      rule.order = M;
      rule.nodes.resize(M);
      rule.weights.assign(M, 1.0 / M);
      for (int j = 0; j < M; ++j) rule.nodes[j] = -kPi + kTwoPi * (j + 0.5) / M;
      break;
    }
    case SpectralMeasure::Kind::Atoms: {
      rule.order = static_cast<int>(measure.angles().size());
      rule.nodes = measure.angles();
      rule.weights = measure.weights();
      break;
    }
    case SpectralMeasure::Kind::ArcUniform: {
      if (M < 2) throw std::invalid_argument("build_rule: M >= 2 for continuous measures");
      std::vector<double> x, w;
      gauss_legendre(M, x, w);
      rule.order = M;
      rule.nodes.resize(M);
      rule.weights.resize(M);
      const double mid = 0.5 * (measure.lo() + measure.hi());
      const double half = 0.5 * (measure.hi() - measure.lo());
      double total = 0.0;
      for (int j = 0; j < M; ++j) {
        rule.nodes[j] = mid + half * x[j];
        total += w[j];
      }
      // Weights scaled to sum exactly 1: the density 1/(hi-lo) cancels.
      for (int j = 0; j < M; ++j) rule.weights[j] = w[j] / total;
      break;
    }
    case SpectralMeasure::Kind::TabulatedDensity: {
      if (M < 2) throw std::invalid_argument("build_rule: M >= 2 for continuous measures");
      const auto& nodes = measure.density_nodes();
      const auto& values = measure.density_values();
      const double span = nodes.back() - nodes.front();
      for (std::size_t seg = 0; seg + 1 < nodes.size(); ++seg) {
        const double a = nodes[seg], b = nodes[seg + 1];
        const int cells = std::max(
            1, static_cast<int>(std::ceil(M * (b - a) / span)));
        for (int c = 0; c < cells; ++c) {
          const double t0 = a + (b - a) * c / cells;
          const double t1 = a + (b - a) * (c + 1) / cells;
          const double tm = 0.5 * (t0 + t1);
          const double frac = (tm - a) / (b - a);
          const double density = values[seg] + frac * (values[seg + 1] - values[seg]);
          rule.nodes.push_back(tm);
          rule.weights.push_back(density * (t1 - t0));
        }
      }
      double total = 0.0;
      for (double w : rule.weights) total += w;
      if (total <= 0.0)
        throw std::invalid_argument("build_rule: tabulated density has zero mass");
      for (double& w : rule.weights) w /= total;
      rule.order = static_cast<int>(rule.nodes.size());
      break;
    }
  }
  return rule;
}

cx szego(cx z, double t) {
  if (std::abs(z) >= 1.0) throw std::domain_error("szego: requires |z| < 1");
  return 1.0 / (1.0 - z * std::polar(1.0, -t));
}

double poisson(double r, double theta) {
  if (r < 0.0 || r >= 1.0) throw std::domain_error("poisson: requires 0 <= r < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

double arc_half_diagonal(double r, double theta) {
  const double one_minus = 1.0 - r * r;
  return (1.0 + (2.0 / kPi) * std::atan(2.0 * r * std::cos(theta) / one_minus)) /
         one_minus;
}

double truncated_hyperbolic_intensity(long N, cx z) {
  if (N < 0)
    throw std::invalid_argument("truncated_hyperbolic_intensity: N >= 0 required");
  const double r2 = std::norm(z);
  const double base = 1.0 / ((1.0 - r2) * (1.0 - r2));
  const double rn = std::pow(r2, static_cast<double>(N));  // |z|^{2N}, 0^0 = 1
  const double denom = 1.0 - rn * r2;                      // 1 - |z|^{2(N+1)}
  const double np1 = static_cast<double>(N + 1);
  return (base - np1 * np1 * rn / (denom * denom)) / kPi;
}

CovarianceEvaluator::CovarianceEvaluator(SpectralMeasure measure, int M,
                                         bool use_closed_forms)
    : measure_(std::move(measure)),
      rule_(build_rule(measure_, M)),
      use_closed_(use_closed_forms) {
  switch (measure_.kind()) {
    case SpectralMeasure::Kind::Lebesgue:
      closed_ = ClosedForm::Hyperbolic;
      break;
    case SpectralMeasure::Kind::Atoms: {
      int n = 0;
      if (is_uniform_roots_of_unity(measure_, n)) {
        closed_ = ClosedForm::Periodic;
        period_ = n;
      }
      break;
    }
    case SpectralMeasure::Kind::ArcUniform:
      if (std::abs(measure_.lo() + kPi / 2) < 1e-15 &&
          std::abs(measure_.hi() - kPi / 2) < 1e-15)
        closed_ = ClosedForm::ArcHalf;
      break;
    case SpectralMeasure::Kind::TabulatedDensity:
      break;
  }
}

cx CovarianceEvaluator::gamma_quadrature(long k) const {
  cx acc(0.0, 0.0);
  for (std::size_t j = 0; j < rule_.nodes.size(); ++j)
    acc += rule_.weights[j] * std::polar(1.0, -static_cast<double>(k) * rule_.nodes[j]);
  return acc;
}

cx CovarianceEvaluator::gamma_closed(long k) const {
  switch (closed_) {
    case ClosedForm::Hyperbolic:
      return k == 0 ? cx(1.0, 0.0) : cx(0.0, 0.0);
    case ClosedForm::Periodic:
      return (k % period_ == 0) ? cx(1.0, 0.0) : cx(0.0, 0.0);
    case ClosedForm::ArcHalf: {
      if (k == 0) return cx(1.0, 0.0);
      const long m = ((k % 4) + 4) % 4;  // sin(k pi/2) by residue: 1,0,-1,0 at 1,2,3,0
      if (m % 2 == 0) return cx(0.0, 0.0);
      const double sign = (m == 1) ? 1.0 : -1.0;
      return cx(2.0 * sign / (kPi * static_cast<double>(k)), 0.0);
    }
    case ClosedForm::None:
      break;
  }
  return gamma_quadrature(k);
}

cx CovarianceEvaluator::gamma(long k) const {
  if (k < 0) return std::conj(gamma(-k));
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = gamma_cache_.find(k);
    if (it != gamma_cache_.end()) return it->second;
  }
  const cx value = (use_closed_ && closed_ != ClosedForm::None)
                       ? gamma_closed(k)
                       : gamma_quadrature(k);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  gamma_cache_.emplace(k, value);
  return value;
}

cx CovarianceEvaluator::kernel_quadrature(cx z, cx w) const {
  cx acc(0.0, 0.0);
  for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
    const cx e = std::polar(1.0, -rule_.nodes[j]);
    const cx sz = 1.0 / (1.0 - z * e);
    const cx sw = 1.0 / (1.0 - w * e);
    acc += rule_.weights[j] * (sz * std::conj(sw));
  }
  return acc;
}

cx CovarianceEvaluator::kernel(cx z, cx w) const {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw std::domain_error("kernel: requires |z| < 1 and |w| < 1");
  if (use_closed_) {
    switch (closed_) {
      case ClosedForm::Hyperbolic:
        return 1.0 / (1.0 - z * std::conj(w));
      case ClosedForm::Periodic: {
        const cx q = z * std::conj(w);
        const cx zn = ipow(z, period_);
        const cx wn = ipow(std::conj(w), period_);
        return (1.0 - ipow(q, period_)) / ((1.0 - zn) * (1.0 - wn) * (1.0 - q));
      }
      case ClosedForm::ArcHalf:
        if (z == w) return cx(arc_half_diagonal(std::abs(z), std::arg(z)), 0.0);
        break;
      case ClosedForm::None:
        break;
    }
  }
  return kernel_quadrature(z, w);
}

KernelJet CovarianceEvaluator::kernel_derivatives(cx z, cx w) const {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw std::domain_error("kernel_derivatives: requires |z| < 1 and |w| < 1");
  KernelJet jet{};
  for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
    const double wt = rule_.weights[j];
    const cx e = std::polar(1.0, -rule_.nodes[j]);
    const cx sz = 1.0 / (1.0 - z * e);
    const cx sw = 1.0 / (1.0 - w * e);
    const cx swc = std::conj(sw);
    const cx dz = e * sz * sz;           // d/dz s(z,t)
    const cx dwc = std::conj(e * sw * sw);  // d/d(conj w) conj(s(w,t))
    jet.k += wt * (sz * swc);
    jet.dz += wt * (dz * swc);
    jet.dwbar += wt * (sz * dwc);
    jet.dzdwbar += wt * (dz * dwc);
  }
  return jet;
}

cx CovarianceEvaluator::truncated_kernel(long N, cx z, cx w) const {
  if (N < 0) throw std::invalid_argument("truncated_kernel: N >= 0 required");
  const cx wc = std::conj(w);
  if (use_closed_ && closed_ == ClosedForm::Hyperbolic) {
    const cx q = z * wc;
    if (std::abs(1.0 - q) > 1e-8) return (1.0 - ipow(q, N + 1)) / (1.0 - q);
  }
  // Diagonal-sum form: sum_m gamma(m) z^m G_{N-m} + conjugate-lag part, with
  // G_L the geometric partial sum of (z conj(w))^i, i <= L. O(N) per call
  // after the gamma cache is warm.
  const cx q = z * wc;
  std::vector<cx> geo(N + 1);
  geo[0] = cx(1.0, 0.0);
  cx qpow(1.0, 0.0);
  for (long i = 1; i <= N; ++i) {
    qpow *= q;
    geo[i] = geo[i - 1] + qpow;
  }
  cx acc = gamma(0) * geo[N];
  cx zp(1.0, 0.0), wp(1.0, 0.0);
  for (long m = 1; m <= N; ++m) {
    zp *= z;
    wp *= wc;
    const cx g = gamma(m);
    acc += g * zp * geo[N - m] + std::conj(g) * wp * geo[N - m];
  }
  return acc;
}

KernelJet CovarianceEvaluator::truncated_kernel_derivatives(long N, cx z,
                                                            cx w) const {
  if (N < 0) throw std::invalid_argument("truncated_kernel_derivatives: N >= 0 required");
  const cx wc = std::conj(w);
  std::vector<cx> zp(N + 1), wp(N + 1);
  zp[0] = wp[0] = cx(1.0, 0.0);
  for (long k = 1; k <= N; ++k) {
    zp[k] = zp[k - 1] * z;
    wp[k] = wp[k - 1] * wc;
  }
  std::vector<cx> g(N + 1);
  for (long m = 0; m <= N; ++m) g[m] = gamma(m);
  KernelJet jet{};
  for (long j = 0; j <= N; ++j) {
    for (long k = 0; k <= N; ++k) {
      const long m = j - k;
      const cx gm = m >= 0 ? g[m] : std::conj(g[-m]);
      if (gm == cx(0.0, 0.0)) continue;
      const cx term = gm * zp[j] * wp[k];
      jet.k += term;
      if (j > 0) jet.dz += gm * static_cast<double>(j) * zp[j - 1] * wp[k];
      if (k > 0) jet.dwbar += gm * static_cast<double>(k) * zp[j] * wp[k - 1];
      if (j > 0 && k > 0)
        jet.dzdwbar +=
            gm * static_cast<double>(j * k) * zp[j - 1] * wp[k - 1];
    }
  }
  return jet;
}

}  // namespace gafzeros::spectral
