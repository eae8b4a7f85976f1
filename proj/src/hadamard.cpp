#include "gbe/hadamard.hpp"

#include <cmath>
#include <vector>

namespace gbe {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1].
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.000000000000000};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

struct GkResult {
  double value;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double fc = f(c);
  double resG = fc * kWg[3];
  double resK = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    double fl = f(c - hw * kXgk[i]);
    double fr = f(c + hw * kXgk[i]);
    resK += kWgk[i] * (fl + fr);
    if (i % 2 == 1) resG += kWg[i / 2] * (fl + fr);
  }
  return {resK * hw, std::fabs((resK - resG) * hw)};
}

double adaptiveRec(const std::function<double(double)>& f, double a, double b, double atol,
                   int depth) {
  GkResult r = gk15(f, a, b);
  if (r.error <= atol || r.error <= 1e-16 * std::fabs(r.value)) return r.value;
  if (depth <= 0) throw QuadratureNonConvergence("refinement depth exhausted");
  double c = 0.5 * (a + b);
  return adaptiveRec(f, a, c, atol * 0.5, depth - 1) +
         adaptiveRec(f, c, b, atol * 0.5, depth - 1);
}

constexpr int kEdgeOrders = 14;     // Taylor terms used near y = 1
constexpr double kEdgeZone = 0.9;   // switch to the Taylor remainder above this y

}  // namespace

double adaptiveGK(const std::function<double(double)>& f, double a, double b, double relTol,
                  int maxDepth) {
  GkResult first = gk15(f, a, b);
  double scale = std::max(std::fabs(first.value), 1e-30);
  return adaptiveRec(f, a, b, relTol * scale, maxDepth);
}

Rational betaContinuationOverPi(int q, int n) {
  if (q < n) return Rational(0);
  return halfGammaRatio(q - n) / factorial(q - n);
}

double hadamardFinitePart(const SmoothFn& F, int n, const QuadratureConfig& cfg) {
  const int p = n - 1 + cfg.extraSubtractions;
  std::vector<double> T(p + 1 + kEdgeOrders, 0.0);  // F^{(t)}(1)/t!
  double fact = 1.0;
  for (int t = 0; t < int(T.size()); ++t) {
    if (t > 0) fact *= t;
    T[t] = F.derivAtOne ? F.derivAtOne(t) / fact : (t == 0 ? F.value(1.0) : 0.0);
  }

  // remainder(y) = F(y) - Taylor_p F(y), evaluated through the Taylor tail
  // near y=1 where the direct difference would cancel catastrophically
  auto remainder = [&](double y) {
    double dy = y - 1.0;
    if (y > kEdgeZone) {
      double pw = std::pow(dy, p + 1), s = 0.0;
      for (int t = p + 1; t < int(T.size()); ++t) {
        s += T[t] * pw;
        pw *= dy;
      }
      return s;
    }
    double s = F.value(y), pw = 1.0;
    for (int t = 0; t <= p; ++t) {
      s -= T[t] * pw;
      pw *= dy;
    }
    return s;
  };

  const double alpha = n + 0.5;
  const double splitU = std::sqrt(0.5);
  // left half, y = u^2 kills the y^{-1/2} endpoint
  double left = adaptiveGK(
      [&](double u) {
        double y = u * u;
        return 2.0 * std::pow(1.0 - y, -alpha) * remainder(y);
      },
      0.0, splitU, cfg.relTol, cfg.maxDepth);
  // right half, 1-y = v^2 kills the (1-y)^{-1/2} remnant of the subtraction
  double right = adaptiveGK(
      [&](double v) {
        double y = 1.0 - v * v;
        return 2.0 * std::pow(y, -0.5) * std::pow(v, -2.0 * n) * remainder(y);
      },
      0.0, splitU, cfg.relTol, cfg.maxDepth);

  // add back the exactly-known Beta values of the extra subtracted terms;
  // the ones below order n are zero under the meromorphic continuation
  double back = 0.0;
  for (int t = n; t <= p; ++t) {
    Rational b = betaContinuationOverPi(t, n);
    if (!b.isZero()) back += ((t % 2) ? -1.0 : 1.0) * T[t] * b.toDouble() * M_PI;
  }
  return left + right + back;
}

}  // namespace gbe
