#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbe/rational.hpp"

namespace gbe {

struct InvalidParameter : std::runtime_error {
  explicit InvalidParameter(const std::string& w) : std::runtime_error(w) {}
};

// Counter-based RNG (Philox-4x32-10): draw(i) is a pure function of
// (seed, stream, i), so parallel streams are reproducible by construction.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}
  uint64_t next();                 // 64 uniform bits
  double nextUniform();            // (0,1)
  double nextGaussian();           // standard normal, Box-Muller
  double nextGamma(double shape);  // Gamma(shape, 1), Marsaglia-Tsang
  double nextChi(double dof) { return std::sqrt(2.0 * nextGamma(dof / 2.0)); }

 private:
  uint64_t seed_, stream_;
  uint64_t counter_ = 0;
  uint32_t buf_[4];
  int bufPos_ = 2;  // number of 64-bit words consumed from buf_
  double cachedGaussian_ = 0;
  bool hasCachedGaussian_ = false;
};

enum class Convention { Unscaled, Starred };

// Tridiagonal realization of the Gaussian beta ensemble: diagonal gaussians,
// off-diagonal chi variables with dof beta*(N-1), ..., beta, scaled to the
// requested eigenvalue-density convention (g fixes the starred support).
struct TridiagonalSample {
  int N = 0;
  double beta = 0;
  double scale = 1;
  std::vector<double> diag;  // N entries
  std::vector<double> off;   // N-1 entries, strictly positive
};

TridiagonalSample sampleTridiagonal(int N, double beta, uint64_t seed, uint64_t stream,
                                    Convention conv, double g = 0.25);

// Tr(T^{2p}) for p = 0..pMax via banded matrix-vector products.
std::vector<double> traceMoments(const TridiagonalSample& s, int pMax);

struct MomentEstimate {
  int p = 0;
  long samples = 0;
  double mean = 0;
  double stderror = 0;
  double exact = 0;
  double z = 0;
};

// Monte-Carlo estimates of <Tr G^{2p}> against exact reference values
// (exact[p] for p = 0..pMax, already in the requested convention).
std::vector<MomentEstimate> estimateAndCompare(int N, double beta, int pMax, long samples,
                                               uint64_t seed, Convention conv, double g,
                                               const std::vector<double>& exact,
                                               int threads = 1);

}  // namespace gbe
