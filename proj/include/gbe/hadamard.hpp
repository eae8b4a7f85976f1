#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "gbe/rational.hpp"

namespace gbe {

struct QuadratureNonConvergence : std::runtime_error {
  explicit QuadratureNonConvergence(const std::string& w) : std::runtime_error(w) {}
};

struct QuadratureConfig {
  double relTol = 1e-10;
  int maxDepth = 48;
  // Number of Taylor terms beyond the minimal n subtracted at y=1; each extra
  // term's (exactly known) Beta value is added back, so the result is
  // unchanged for smooth enough integrands.
  int extraSubtractions = 0;
};

// Smooth function handle on (0,1]: value and derivatives at y=1 up to the
// requested order.
struct SmoothFn {
  std::function<double(double)> value;
  std::function<double(int)> derivAtOne;  // d^m F / dy^m at y = 1
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]; nodes are interior, endpoints are
// never evaluated.
double adaptiveGK(const std::function<double(double)>& f, double a, double b,
                  double relTol, int maxDepth);

// Hadamard finite part of  int_0^1 y^{-1/2} (1-y)^{-n-1/2} F(y) dy :
// subtracts the Taylor polynomial of F at y=1 (order n-1+extra) so the
// integrand becomes integrable, integrates numerically, and adds back the
// exact Euler Beta values of the extra subtracted terms (those of order
// < n are exactly zero under the meromorphic continuation).
double hadamardFinitePart(const SmoothFn& F, int n, const QuadratureConfig& cfg = {});

// Meromorphically continued int_0^1 y^{-1/2} (1-y)^{q-n-1/2} dy for integer
// q >= 0: zero when q < n, otherwise pi * r with rational r.
// Returned as the rational multiple of pi (zero rational when q < n).
Rational betaContinuationOverPi(int q, int n);

}  // namespace gbe
