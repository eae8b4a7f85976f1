#include "gbe/montecarlo.hpp"

#include <algorithm>
#include <thread>

namespace gbe {

namespace {

// Philox 4x32-10 round constants
constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philoxRound(uint32_t c[4], uint32_t k0, uint32_t k1) {
  uint64_t p0 = uint64_t(kPhiloxM0) * c[0];
  uint64_t p1 = uint64_t(kPhiloxM1) * c[2];
  uint32_t hi0 = uint32_t(p0 >> 32), lo0 = uint32_t(p0);
  uint32_t hi1 = uint32_t(p1 >> 32), lo1 = uint32_t(p1);
  uint32_t n0 = hi1 ^ c[1] ^ k0;
  uint32_t n1 = lo1;
  uint32_t n2 = hi0 ^ c[3] ^ k1;
  uint32_t n3 = lo0;
  c[0] = n0; c[1] = n1; c[2] = n2; c[3] = n3;
}

void philox(uint64_t seed, uint64_t stream, uint64_t counter, uint32_t out[4]) {
  uint32_t c[4] = {uint32_t(counter), uint32_t(counter >> 32), uint32_t(stream),
                   uint32_t(stream >> 32)};
  uint32_t k0 = uint32_t(seed), k1 = uint32_t(seed >> 32);
  for (int r = 0; r < 10; ++r) {
    philoxRound(c, k0, k1);
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  out[0] = c[0]; out[1] = c[1]; out[2] = c[2]; out[3] = c[3];
}

}  // namespace

uint64_t CounterRng::next() {
  if (bufPos_ >= 2) {
    philox(seed_, stream_, counter_++, buf_);
    bufPos_ = 0;
  }
  uint64_t v = (uint64_t(buf_[2 * bufPos_]) << 32) | buf_[2 * bufPos_ + 1];
  ++bufPos_;
  return v;
}

double CounterRng::nextUniform() {
  // 53 random bits into (0,1); never returns 0 or 1
  uint64_t v = next() >> 11;
  return (double(v) + 0.5) * (1.0 / 9007199254740992.0);
}

double CounterRng::nextGaussian() {
  if (hasCachedGaussian_) {
    hasCachedGaussian_ = false;
    return cachedGaussian_;
  }
  double u1 = nextUniform(), u2 = nextUniform();
  double rad = std::sqrt(-2.0 * std::log(u1));
  double ang = 2.0 * M_PI * u2;
  cachedGaussian_ = rad * std::sin(ang);
  hasCachedGaussian_ = true;
  return rad * std::cos(ang);
}

double CounterRng::nextGamma(double shape) {
  if (shape <= 0) throw InvalidParameter("gamma shape must be positive");
  if (shape < 1.0) {
    // boost to shape+1 and scale back by U^{1/shape}
    double u = nextUniform();
    return nextGamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x = nextGaussian();
    double v = 1.0 + c * x;
    if (v <= 0) continue;
    v = v * v * v;
    double u = nextUniform();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

TridiagonalSample sampleTridiagonal(int N, double beta, uint64_t seed, uint64_t stream,
                                    Convention conv, double g) {
  if (N < 1) throw InvalidParameter("N must be >= 1");
  if (beta <= 0) throw InvalidParameter("beta must be positive");
  if (g <= 0) throw InvalidParameter("g must be positive");
  CounterRng rng(seed, stream);
  TridiagonalSample s;
  s.N = N;
  s.beta = beta;
  // the base tridiagonal model has joint eigenvalue density
  // prop. to prod |dl|^beta exp(-sum l^2/2); rescaling by `scale` moves it to
  // the requested convention: kappa lambda^2/2 per eigenvalue (unscaled)
  // or N kappa lambda^2/(2g) (starred, support (-2 sqrt g, 2 sqrt g))
  double kappa = beta / 2.0;
  s.scale = conv == Convention::Unscaled ? 1.0 / std::sqrt(kappa)
                                         : std::sqrt(g / (N * kappa));
  s.diag.resize(N);
  s.off.resize(N - 1);
  for (int i = 0; i < N; ++i) s.diag[i] = s.scale * rng.nextGaussian();
  for (int i = 0; i < N - 1; ++i) {
    double dof = beta * (N - 1 - i);
    double chi = rng.nextChi(dof);
    while (chi <= 0) chi = rng.nextChi(dof);
    s.off[i] = s.scale * chi / std::sqrt(2.0);
  }
  return s;
}

std::vector<double> traceMoments(const TridiagonalSample& s, int pMax) {
  const int N = s.N;
  std::vector<double> tr(pMax + 1, 0.0);
  tr[0] = N;
  if (pMax == 0) return tr;
  std::vector<double> v(N), w(N);
  for (int start = 0; start < N; ++start) {
    std::fill(v.begin(), v.end(), 0.0);
    v[start] = 1.0;
    for (int p = 1; p <= pMax; ++p) {
      // w = T v
      for (int i = 0; i < N; ++i) {
        double x = s.diag[i] * v[i];
        if (i > 0) x += s.off[i - 1] * v[i - 1];
        if (i + 1 < N) x += s.off[i] * v[i + 1];
        w[i] = x;
      }
      std::swap(v, w);
      // Tr(T^{2p}) = sum_start ||T^p e_start||^2
      double norm2 = 0;
      for (int i = 0; i < N; ++i) norm2 += v[i] * v[i];
      tr[p] += norm2;
    }
  }
  return tr;
}

std::vector<MomentEstimate> estimateAndCompare(int N, double beta, int pMax, long samples,
                                               uint64_t seed, Convention conv, double g,
                                               const std::vector<double>& exact, int threads) {
  if (samples < 100) throw InvalidParameter("need at least 100 samples");
  threads = std::max(1, threads);
  // sample i uses RNG stream i, and the reduction runs in stream order, so
  // the estimates are bit-identical for every thread count
  std::vector<double> traces(size_t(samples) * (pMax + 1));
  auto worker = [&](int tid) {
    for (long i = tid; i < samples; i += threads) {
      auto s = sampleTridiagonal(N, beta, seed, uint64_t(i), conv, g);
      auto tr = traceMoments(s, pMax);
      std::copy(tr.begin(), tr.end(), traces.begin() + size_t(i) * (pMax + 1));
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<MomentEstimate> out(pMax + 1);
  for (int p = 0; p <= pMax; ++p) {
    double sum = 0, sum2 = 0;
    for (long i = 0; i < samples; ++i) {
      double v = traces[size_t(i) * (pMax + 1) + p];
      sum += v;
      sum2 += v * v;
    }
    MomentEstimate& e = out[p];
    e.p = p;
    e.samples = samples;
    e.mean = sum / double(samples);
    double var = std::max(0.0, sum2 / double(samples) - e.mean * e.mean);
    e.stderror = std::sqrt(var / double(samples));
    e.exact = p < int(exact.size()) ? exact[p] : 0.0;
    e.z = e.stderror > 0 ? (e.mean - e.exact) / e.stderror : 0.0;
  }
  return out;
}

}  // namespace gbe
