#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gbe/loop_solver.hpp"
#include "gbe/spectral.hpp"

namespace gbe {

struct InsufficientOrder : std::runtime_error {
  explicit InsufficientOrder(const std::string& w) : std::runtime_error(w) {}
};

// Exact moment polynomial m_{2p}(N, kappa), stored as a map
// (degree in N, degree in k = 1/kappa) -> rational coefficient.
struct MomentPoly {
  int p = 0;
  std::map<std::pair<int, int>, Rational> coef;

  Rational at(int degN, int degK) const;
  // Coefficient polynomial of N^degN, as k-degree -> coefficient.
  std::map<int, Rational> nRow(int degN) const;
  int degreeN() const;
  Rational eval(const Rational& N, const Rational& kinv) const;
  bool operator==(const MomentPoly& o) const { return p == o.p && coef == o.coef; }
  bool operator!=(const MomentPoly& o) const { return !(*this == o); }
  std::string str() const;
};

// Assembles m_{2p} from the resolvent coefficients: reads the x^{-2p-1}
// series coefficient of each W_1^l, undoes the star scaling, expands
// h = sqrt(kappa) - 1/sqrt(kappa), and asserts that both g and all half
// powers of kappa cancel. Requires resolvent.size() > p.
MomentPoly momentPolynomial(int p, const std::vector<SpectralExpr>& resolvent);

// m_{2l}(N,kappa) = (-1)^{l+1} kappa^{-l-1} m_{2l}(-kappa N, 1/kappa), exactly.
bool checkDuality(const MomentPoly& m);

// Degree l+1 in N, vanishing tail, Catalan leading coefficient, and
// palindromic / anti-palindromic numerators (with a kappa-1 factor in the
// anti-palindromic case).
StructureReport checkStructure(const MomentPoly& m);

// Closed form for the coefficient of kappa^{-d/2} N^{l+1-d} in m_{2l},
// d = depth in 1..6, as a polynomial in h. Valid for l >= depth.
MultiPoly subleadingClosedForm(int l, int depth);
// Expands kappa^{-d/2} * subleadingClosedForm into the k-polynomial row and
// compares it with the N^{l+1-d} row of m.
bool subleadingMatchesMoment(const MomentPoly& m, int depth);

struct ZeroReport {
  double maxDeviation = 0.0;   // max | |root| - 1 | over all roots
  double minSeparation = 1e300;  // min pairwise distance between roots of a row
  int rootsChecked = 0;
};
// Empirical check of the unit-circle zero conjecture on every N-coefficient
// numerator. Never asserts; reports the numbers.
ZeroReport unitCircleZeros(const MomentPoly& m, double tol);

// Roots of sum a_u z^u by Durand-Kerner iteration with Newton polishing.
std::vector<std::complex<double>> polynomialRoots(const std::vector<double>& coeffs);

}  // namespace gbe
