#include "vpanel/hilbert.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace vpanel {

namespace {

// fftw planning is not thread safe; execution of distinct plans is
std::mutex fftw_mutex;

struct FftwBuffer {
  fftw_complex* data = nullptr;
  explicit FftwBuffer(int m) { data = fftw_alloc_complex(m); }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

PeriodicSamples hilbert_spectral(const PeriodicSamples& samples) {
  const int m = samples.size();
  if (m < 4) {
    throw std::invalid_argument("hilbert_spectral: need at least 4 samples");
  }

  FftwBuffer in(m), out(m);
  for (int j = 0; j < m; ++j) {
    in.data[j][0] = samples.values[j];
    in.data[j][1] = 0.0;
  }

  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fwd = fftw_plan_dft_1d(m, in.data, out.data, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(m, out.data, in.data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(fwd);

  // multiplier -2*pi*i*sign(k) on signed frequencies; the grid phase factors
  // attached to a midpoint grid cancel between analysis and synthesis because
  // the multiplier is diagonal in k. Nyquist bin is zeroed to keep the output
  // real.
  for (int k = 0; k < m; ++k) {
    int signed_k = k <= (m - 1) / 2 ? k : k - m;
    double s;
    if (signed_k == 0 || (m % 2 == 0 && k == m / 2)) {
      s = 0.0;
    } else {
      s = signed_k > 0 ? 1.0 : -1.0;
    }
    // (a + ib) * (-2*pi*i*s) = 2*pi*s*b - i*2*pi*s*a
    const double a = out.data[k][0], b = out.data[k][1];
    out.data[k][0] = kTwoPi * s * b;
    out.data[k][1] = -kTwoPi * s * a;
  }

  fftw_execute(bwd);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }

  PeriodicSamples result;
  result.grid_kind = samples.grid_kind;
  result.values.resize(m);
  for (int j = 0; j < m; ++j) {
    result.values[j] = in.data[j][0] / m;  // fftw backward transform is unnormalized
  }
  return result;
}

PeriodicSamples hilbert_pv(const PeriodicSamples& node_samples) {
  if (node_samples.grid_kind != GridKind::node) {
    throw std::invalid_argument("hilbert_pv: input must live on the node grid");
  }
  const int n = node_samples.size();
  PeriodicSamples result;
  result.grid_kind = GridKind::midpoint;
  result.values.resize(n);
  for (int i = 0; i < n; ++i) {
    const double ti = kTwoPi * (i + 0.5) / n;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += node_samples.values[j] / std::tan(0.5 * (ti - kTwoPi * j / n));
    }
    result.values[i] = acc * kTwoPi / n;
  }
  return result;
}

double midpoint_sum(const std::function<double(double)>& g, const UniformBoundaryMesh& mesh) {
  double acc = 0.0;
  for (double t : mesh.theta_tilde) acc += g(t);
  return acc * kTwoPi / mesh.n;
}

double midpoint_sum(const std::function<double(double)>& g, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += g(kTwoPi * (i + 0.5) / n);
  return acc * kTwoPi / n;
}

double midpoint_sum(const PeriodicSamples& midpoint_samples) {
  if (midpoint_samples.grid_kind != GridKind::midpoint) {
    throw std::invalid_argument("midpoint_sum: samples must live on the midpoint grid");
  }
  double acc = 0.0;
  for (double v : midpoint_samples.values) acc += v;
  return acc * kTwoPi / midpoint_samples.size();
}

double mean(const std::vector<double>& z) {
  double acc = 0.0;
  for (double v : z) acc += v;
  return acc / static_cast<double>(z.size());
}

double norm_l1(const std::vector<double>& z) {
  double acc = 0.0;
  for (double v : z) acc += std::abs(v);
  return acc / static_cast<double>(z.size());
}

double norm_l2(const std::vector<double>& z) {
  double acc = 0.0;
  for (double v : z) acc += v * v;
  return std::sqrt(acc / static_cast<double>(z.size()));
}

double norm_linf(const std::vector<double>& z) {
  double acc = 0.0;
  for (double v : z) acc = std::max(acc, std::abs(v));
  return acc;
}

}  // namespace vpanel
