#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbe/multipoly.hpp"
#include "gbe/series.hpp"

namespace gbe {

// One-variable element of the spectral-curve expression ring,
//
//     sum_sigma P_sigma(x) * y^{-sigma},   y^2 = x^2 - 4g,
//
// with numerators P_sigma in Q[x,g,h] (slot 0 for x). Negative sigma means
// positive powers of y; y itself is sigma = -1.
//
// Normal form: per parity class of sigma a single representative is kept,
// with sigma minimal subject to (a) the numerator not being divisible by
// x^2-4g while sigma can still drop by 2, and (b) floors sigma >= 0 (even
// class) and sigma >= -1 (odd class). Zero numerators are dropped. Equality
// of normal forms is map equality.
class SpectralExpr {
 public:
  SpectralExpr() = default;
  explicit SpectralExpr(long n) { if (n) t_[0] = MultiPoly(n); normalize(); }
  // term P(x,g,h) * y^{-sigma}
  static SpectralExpr term(MultiPoly numer, int sigma);
  static SpectralExpr fromPoly(MultiPoly p) { return term(std::move(p), 0); }

  bool isZero() const { return t_.empty(); }
  const std::map<int, MultiPoly>& parts() const { return t_; }
  MultiPoly numerAt(int sigma) const;
  int maxSigma() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  SpectralExpr& operator+=(const SpectralExpr& o);
  friend SpectralExpr operator+(SpectralExpr a, const SpectralExpr& b) { return a += b; }
  friend SpectralExpr operator-(SpectralExpr a, const SpectralExpr& b) { return a += -b; }
  SpectralExpr operator-() const;
  friend SpectralExpr operator*(const SpectralExpr& a, const SpectralExpr& b);
  SpectralExpr scaled(const Rational& c) const;
  SpectralExpr timesPoly(const MultiPoly& p) const;
  // multiply by y^{-1} (exact: sigma shifts up by one, then reduce)
  SpectralExpr dividedByY() const;
  SpectralExpr timesY() const;

  bool operator==(const SpectralExpr& o) const { return t_ == o.t_; }
  bool operator!=(const SpectralExpr& o) const { return !(*this == o); }

  // d/dx using d/dx(y^{-sigma}) = -sigma x y^{-sigma-2}.
  SpectralExpr differentiated() const;

  // h := value (e.g. 0 for the beta=2 specialization).
  SpectralExpr substituteH(const Rational& value) const;

  // Expansion at x -> +infinity on the branch y ~ x. Returns a series in
  // xi = 1/x: coefficient of xi^e is a MultiPoly in (g,h); exponents may be
  // negative (positive powers of x). Exact through xi^{order-1}.
  TruncatedSeries<MultiPoly> seriesAtInfinity(int order) const;

  std::string str() const;
  std::string latex() const;

  // One step of the parity reduction used for normal forms, exposed for the
  // correlator factors: reduces a single (sigma, numer) pair in variable
  // `slot` to its minimal representative.
  static void reducePair(int slot, int& sigma, MultiPoly& numer);

 private:
  std::map<int, MultiPoly> t_;
  void normalize();
};

inline SpectralExpr scaleInt(const SpectralExpr& e, long n) { return e.scaled(Rational(n)); }
inline MultiPoly scaleInt(const MultiPoly& p, long n) { return p.scaled(Rational(n)); }
inline Rational scaleInt(const Rational& r, long n) { return r * Rational(n); }

// Spectral-curve base objects.
SpectralExpr spectralY();     // y
SpectralExpr spectralInvY(int sigma = 1);  // y^{-sigma}

}  // namespace gbe
