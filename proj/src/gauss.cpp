#include "gafzeros/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gafzeros/serialize.hpp"

namespace gafzeros::gauss {

namespace {

double off_diagonal_norm(const Matrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigResult hermitian_eig(const Matrix& input) {
  if (input.rows() != input.cols())
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  const std::size_t n = input.rows();
  if (hermitian_defect(input) > 1e-10)
    throw std::invalid_argument("hermitian_eig: input not Hermitian within 1e-10");
  // Symmetrize so rounding asymmetry cannot accumulate through the sweeps.
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  Matrix v = Matrix::identity(n);
  const double scale = std::max(frobenius_norm(h), 1e-300);

  double off = off_diagonal_norm(h);
  int sweeps = 0;
  while (off > 1e-12 * scale) {
    if (++sweeps > 64)
      throw NumericFailure("hermitian_eig: no convergence after 64 sweeps", off);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cx hpq = h(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        // Unitary plane rotation with the phase of h(p,q) folded in:
        // J(p,p) = c, J(p,q) = s e^{i phi}, J(q,p) = -s e^{-i phi}, J(q,q) = c.
        const cx phase = hpq / mag;  // e^{i phi}
        const double a = h(p, p).real();
        const double b = h(q, q).real();
        const double tau = (b - a) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const cx hip = h(i, p);
          const cx hiq = h(i, q);
          h(i, p) = c * hip - s * std::conj(phase) * hiq;
          h(i, q) = s * phase * hip + c * hiq;
          h(p, i) = std::conj(h(i, p));
          h(q, i) = std::conj(h(i, q));
        }
        h(p, p) = cx(a - t * mag, 0.0);
        h(q, q) = cx(b + t * mag, 0.0);
        h(p, q) = cx(0.0, 0.0);
        h(q, p) = cx(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          const cx vip = v(i, p);
          const cx viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
    off = off_diagonal_norm(h);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return h(i, i).real() < h(j, j).real();
  });
  HermitianEigResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = h(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

Matrix psd_sqrt(const Matrix& h) {
  HermitianEigResult eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  for (double lambda : eig.eigenvalues)
    if (lambda < -1e-8)
      throw NotPsdError("psd_sqrt: eigenvalue below -1e-8", lambda);
  Matrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cx left = root * eig.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) += left * std::conj(eig.eigenvectors(j, k));
    }
  }
  // Exact Hermitian symmetrization of the reconstruction.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const cx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  return a;
}

Matrix toeplitz_covariance(const spectral::CovarianceEvaluator& ev, int size) {
  if (size < 1) throw std::invalid_argument("toeplitz_covariance: size >= 1");
  std::vector<cx> g(size);
  for (int k = 0; k < size; ++k) g[k] = ev.gamma(k);
  Matrix t(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      t(i, j) = i >= j ? g[i - j] : std::conj(g[j - i]);
  return t;
}

CoefficientSampler CoefficientSampler::iid() {
  CoefficientSampler s;
  s.kind_ = Kind::Iid;
  s.tag_ = "iid";
  s.measure_json_ = serialize::measure_to_json_string(
      spectral::SpectralMeasure::lebesgue());
  return s;
}

CoefficientSampler CoefficientSampler::periodic(int period) {
  if (period < 1) throw std::invalid_argument("periodic: period >= 1 required");
  CoefficientSampler s;
  s.kind_ = Kind::Periodic;
  s.period_ = period;
  s.tag_ = "periodic:" + std::to_string(period);
  s.measure_json_ = serialize::measure_to_json_string(
      spectral::SpectralMeasure::roots_of_unity(period));
  return s;
}

CoefficientSampler CoefficientSampler::toeplitz_sqrt(
    const spectral::CovarianceEvaluator& ev, int size) {
  CoefficientSampler s;
  s.kind_ = Kind::ToeplitzSqrt;
  s.a_ = psd_sqrt(toeplitz_covariance(ev, size));
  s.tag_ = "toeplitz:" + std::to_string(size);
  s.measure_json_ = serialize::measure_to_json_string(ev.measure());
  return s;
}

GafPolynomial sample_coefficients(const CoefficientSampler& sampler, long N,
                                  ComplexNormalSource& src) {
  if (N < 0) throw std::invalid_argument("sample_coefficients: N >= 0 required");
  GafPolynomial p;
  p.n = N;
  p.provenance = Provenance{sampler.measure_json(), sampler.tag(), src.seed()};
  auto draw = [&]() {
    switch (sampler.kind()) {
      case CoefficientSampler::Kind::Iid: {
        p.coefficients.resize(N + 1);
        for (long k = 0; k <= N; ++k) p.coefficients[k] = src.next();
        break;
      }
      case CoefficientSampler::Kind::Periodic: {
        std::vector<cx> block(sampler.period());
        for (cx& b : block) b = src.next();
        p.coefficients.resize(N + 1);
        for (long k = 0; k <= N; ++k)
          p.coefficients[k] = block[k % sampler.period()];
        break;
      }
      case CoefficientSampler::Kind::ToeplitzSqrt: {
        const Matrix& a = sampler.sqrt_matrix();
        const long size = static_cast<long>(a.rows());
        if (N + 1 > size)
          throw std::invalid_argument(
              "sample_coefficients: degree exceeds the Toeplitz matrix size");
        std::vector<cx> zeta(size);
        for (cx& z : zeta) z = src.next();
        p.coefficients.assign(N + 1, cx(0.0, 0.0));
        for (long i = 0; i <= N; ++i) {
          cx acc(0.0, 0.0);
          for (long j = 0; j < size; ++j) acc += a(i, j) * zeta[j];
          p.coefficients[i] = acc;
        }
        break;
      }
    }
  };
  draw();
  while (std::all_of(p.coefficients.begin(), p.coefficients.end(),
                     [](cx c) { return c == cx(0.0, 0.0); }))
    draw();
  return p;
}

CovarianceEstimate empirical_covariance(const std::vector<GafPolynomial>& samples,
                                        long lag) {
  if (samples.size() < 2)
    throw std::invalid_argument("empirical_covariance: need >= 2 samples");
  if (lag < 0) throw std::invalid_argument("empirical_covariance: lag >= 0 required");
  const long n = samples.front().n;
  for (const auto& s : samples)
    if (s.n != n || n < lag)
      throw std::invalid_argument(
          "empirical_covariance: samples must share one degree N >= lag");
  std::vector<cx> per_sample;
  per_sample.reserve(samples.size());
  for (const auto& s : samples) {
    cx acc(0.0, 0.0);
    const long positions = n + 1 - lag;
    for (long j = 0; j < positions; ++j)
      acc += s.coefficients[j + lag] * std::conj(s.coefficients[j]);
    per_sample.push_back(acc / static_cast<double>(positions));
  }
  cx mean(0.0, 0.0);
  for (cx v : per_sample) mean += v;
  mean /= static_cast<double>(per_sample.size());
  double var_re = 0.0, var_im = 0.0;
  for (cx v : per_sample) {
    var_re += (v.real() - mean.real()) * (v.real() - mean.real());
    var_im += (v.imag() - mean.imag()) * (v.imag() - mean.imag());
  }
  const double denom = static_cast<double>(per_sample.size() - 1) *
                       static_cast<double>(per_sample.size());
  CovarianceEstimate est;
  est.value = mean;
  est.se_re = std::sqrt(var_re / denom);
  est.se_im = std::sqrt(var_im / denom);
  est.samples = per_sample.size();
  return est;
}

}  // namespace gafzeros::gauss
