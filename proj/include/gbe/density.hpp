#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gbe/hadamard.hpp"
#include "gbe/spectral.hpp"

namespace gbe {

struct UnreducibleRationalPart : std::runtime_error {
  explicit UnreducibleRationalPart(const std::string& w) : std::runtime_error(w) {}
};
struct InsufficientSmoothness : std::runtime_error {
  explicit InsufficientSmoothness(const std::string& w) : std::runtime_error(w) {}
};

// Element of Q[h][g^{1/2}, g^{-1/2}]: map (h exponent, half-g exponent) ->
// coefficient, with (g^{1/2})^2 = g. Half-g exponents may be negative; the
// delta coefficients of the smoothed densities carry such factors.
class EdgeCoeff {
 public:
  EdgeCoeff() = default;
  static EdgeCoeff one() { return term(Rational(1), 0, 0); }
  static EdgeCoeff term(Rational c, int hExp, int halfG);

  bool isZero() const { return t_.empty(); }
  const std::map<std::pair<int, int>, Rational>& parts() const { return t_; }

  EdgeCoeff& operator+=(const EdgeCoeff& o);
  friend EdgeCoeff operator+(EdgeCoeff a, const EdgeCoeff& b) { return a += b; }
  friend EdgeCoeff operator-(EdgeCoeff a, const EdgeCoeff& b) { return a += b.scaled(Rational(-1)); }
  friend EdgeCoeff operator*(const EdgeCoeff& a, const EdgeCoeff& b);
  EdgeCoeff operator-() const { return scaled(Rational(-1)); }
  EdgeCoeff scaled(const Rational& c) const;
  EdgeCoeff inverse() const;  // defined for monomials only
  bool operator==(const EdgeCoeff& o) const { return t_ == o.t_; }

  // Conversion to a MultiPoly in (g,h); requires all half-g exponents to be
  // even and non-negative.
  MultiPoly toPoly() const;
  double evalDouble(double g, double h) const;
  std::string str() const;

 private:
  std::map<std::pair<int, int>, Rational> t_;
};

// value = (numer / pi) * (4g - x^2)^{e/2} restricted to (-2 sqrt g, 2 sqrt g);
// numer is a MultiPoly in (x, g, h) and e is odd (e = 1 for the semicircle).
struct BulkTerm {
  MultiPoly numer;
  int e = 1;
};

// coefficient * eps^(j), eps^(j) = delta^(j)(x-2 sqrt g) + (-1)^j delta^(j)(x+2 sqrt g)
struct DeltaTerm {
  int j = 0;
  EdgeCoeff coef;
};

struct SmoothedDensity {
  int l = 0;
  std::vector<BulkTerm> bulk;    // ascending in e
  std::vector<DeltaTerm> delta;  // ascending in j

  int maxDeltaOrder() const;
  bool operator==(const SmoothedDensity& o) const;
};

// Inversion dictionary applied to a reduced W_1^l: odd y-powers map to bulk
// terms, the even (rational) part partial-fractions into delta derivatives at
// the endpoints.
SmoothedDensity densityFromResolvent(const SpectralExpr& w, int l);

// Exact mean of x^{2sigma}: bulk terms via meromorphically continued Euler
// Beta values, delta terms via derivative evaluation at the endpoints.
// The result is a polynomial in (g,h).
MultiPoly polynomialMean(const SmoothedDensity& d, int twoSigma);

// Term-wise Stieltjes transform of the density; reproduces W_1^l exactly.
SpectralExpr stieltjesOfDensity(const SmoothedDensity& d);

// A smooth statistic handle: value and derivatives up to `smoothness` at
// arbitrary points. Derivatives are supplied, never approximated.
struct SmoothStatistic {
  int smoothness = 0;
  std::function<double(double)> value;
  std::function<double(double, int)> deriv;  // (x, order >= 1)
};

// Mean of the statistic against one density order: bulk integrals in the
// Hadamard-regularized normal form, delta terms from endpoint derivatives.
// g must be positive (support (-2 sqrt g, 2 sqrt g)); h is the numeric value
// of the beta-deformation sqrt(kappa) - 1/sqrt(kappa).
double statisticMeanAtOrder(const SmoothedDensity& d, const SmoothStatistic& a, double g,
                            double h, const QuadratureConfig& cfg);

// Per-order means [v_0 .. v_lmax]; v_l = integral of a against the order-l
// density. Polynomial statistics should use polynomialMean instead.
std::vector<double> linearStatisticMeans(const std::vector<SmoothedDensity>& ds,
                                         const SmoothStatistic& a, double g, double h,
                                         const QuadratureConfig& cfg);

// (1/N) mu_N[A] assembled from per-order means: (1/g) sum_l (g/(sqrt(kappa) N))^l v_l.
double assembleStatisticSeries(const std::vector<double>& perOrder, double g, double N,
                               double kappa);

}  // namespace gbe
