#pragma once

#include <stdexcept>
#include <vector>

#include "gbe/spectral.hpp"

namespace gbe {

// Hard cap on inter-variable pole exponents in stored correlators. Removable
// diagonal poles of the hierarchy members cannot be cancelled termwise in the
// x/y representation, so the stored exponents grow with the variable count;
// exceeding the cap is a hard error that asks for the cap to be raised, never
// a silent truncation.
inline constexpr int kPoleCap = 40;

struct PoleCapExceeded : std::runtime_error {
  PoleCapExceeded() : std::runtime_error("correlator pole exponent exceeds kPoleCap; raise the cap") {}
};

struct DiagonalPoleResidue : std::runtime_error {
  explicit DiagonalPoleResidue(const std::string& what) : std::runtime_error(what) {}
};

// Per-variable factor P(x_v, g, h) * y_v^{-sigma}.
struct SpectralFactor {
  MultiPoly numer = MultiPoly(1);
  int sigma = 0;
};

// One additive term of an n-variable correlator:
//   coef * g^gExp * h^hExp * prod_v fac[v] * prod_{i<j} (x_i - x_j)^{-poles(i,j)}
struct CorrTerm {
  Rational coef = Rational(1);
  int gExp = 0;
  int hExp = 0;
  std::vector<SpectralFactor> fac;
  std::vector<uint8_t> poles;  // upper-triangular, index j*(j-1)/2 + i for i<j

  static int poleIndex(int i, int j) { return j * (j - 1) / 2 + i; }
};

// n-variable correlator expression: a sum of CorrTerms. Terms are kept with
// primitive factors (rational content and g/h monomial content pulled out
// into coef/gExp/hExp, each (sigma, numer) pair parity-reduced) and exact
// duplicates consolidated. This is a normal form for the term list, not for
// the function it denotes: removable diagonal poles stay split across terms
// of different y-parity shapes, and zero tests go through isZeroExpanded().
class Correlator {
 public:
  explicit Correlator(int nvars = 1) : n_(nvars) {}

  static Correlator zero(int nvars) { return Correlator(nvars); }
  static Correlator fromSpectral(const SpectralExpr& e);
  SpectralExpr toSpectral() const;  // requires nvars == 1

  int nvars() const { return n_; }
  bool isEmpty() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  const std::vector<CorrTerm>& terms() const { return terms_; }

  void addTerm(CorrTerm t);  // normalizes the term; call consolidate() after bulk adds
  void consolidate();
  // Distributive re-compression: repeatedly merges terms that agree in the
  // poles, every sigma, and every factor numerator except one variable's,
  // summing over that variable. Keeps the factored form minimal enough for
  // the deep hierarchy.
  void compress();

  Correlator& operator+=(const Correlator& o);
  friend Correlator operator+(Correlator a, const Correlator& b) { return a += b; }
  Correlator scaled(const Rational& c) const;
  Correlator operator-() const { return scaled(Rational(-1)); }

  // Product of two correlators living on the same variable space.
  friend Correlator operator*(const Correlator& a, const Correlator& b);

  Correlator differentiated(int v) const;
  // Multiply every term by g^dg h^dh (dg, dh >= 0).
  Correlator timesGH(int dg, int dh) const;
  // Multiply by (x_i - x_j)^{-1}, i < j.
  Correlator timesPole(int i, int j) const;
  // Multiply by y_v^{-1}.
  Correlator dividedByY(int v) const;

  // Re-embed on a new variable space: old variable v becomes map[v].
  Correlator relabeled(int newN, const std::vector<int>& map) const;

  // The x_j -> x_i limit (i < j), Taylor-expanding all factors in x_j - x_i
  // through order extraOrder (>= the largest (i,j) pole exponent present) and
  // asserting that every negative power cancels exactly. The result lives on
  // n-1 variables with indices above j shifted down.
  Correlator mergedDiagonal(int i, int j, int extraOrder) const;

  // Exact zero test: groups terms by y-parity shape, lifts each group to a
  // common denominator and expands the joint numerator.
  bool isZeroExpanded() const;
  bool equalsExpanded(const Correlator& o) const;
  // Invariance under exchanging variables a and b.
  bool symmetricIn(int a, int b) const;

 private:
  int n_;
  std::vector<CorrTerm> terms_;

  void normalizeTerm(CorrTerm& t) const;
  static int cmpTerm(const CorrTerm& a, const CorrTerm& b);
};

}  // namespace gbe
