#pragma once

#include <map>
#include <vector>

#include "gbe/moments.hpp"
#include "gbe/spectral.hpp"

namespace gbe {

enum class Ensemble { GUE, GOE, GSE };

const char* ensembleName(Ensemble e);
Rational ensembleKappa(Ensemble e);    // 1, 1/2, 2
// h = sqrt(kappa) - 1/sqrt(kappa) is irrational at kappa = 1/2, 2, but the
// combination kappa^{-l/2} h^j appearing at depth l is rational whenever
// l == j (mod 2); this returns that exact rational.
Rational kappaHalfPowerTimesHPower(const Rational& kappa, int l, int j);

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& w) : std::runtime_error(w) {}
};

// Moment recurrences (third order for GUE, fourth order for GOE/GSE) with
// the ensemble initial data; symbolic in N.
std::vector<MultiPoly> recurrenceMomentsSym(Ensemble e, int pMax);
std::vector<Rational> recurrenceMoments(Ensemble e, int pMax, const Rational& N);

enum class MomentFormula {
  MehtaGUE,
  MezzadriSimmGUE,
  GouldenJacksonGOE,
  MezzadriSimmGOE,  // N even only
  MezzadriSimmGSE,
};
struct ParityUnsupported : std::runtime_error {
  explicit ParityUnsupported(const std::string& w) : std::runtime_error(w) {}
};
struct MethodUnsupported : std::runtime_error {
  explicit MethodUnsupported(const std::string& w) : std::runtime_error(w) {}
};
// Exact finite-sum evaluations; all half-integer Pochhammers carry a sqrt(pi)
// tag that must cancel before the value is returned.
Rational closedFormMoment(Ensemble e, MomentFormula f, int p, long N);

// Sub-exponential generating function (1/2s^2)[((1+s^2)/(1-s^2))^N - 1]:
// returns m_{2p}(N,1) = (2p-1)!! [s^{2p}] phi for p = 0..pMax.
std::vector<Rational> harerZagier(int pMax, long N);

// Coefficients c_p of t^{2p} in N e^{-t^2/2} 1F1(1+N, 2; t^2); the moments
// are m_{2p}(N,1) = (2p)! c_p.
std::vector<Rational> gueUSeries(int pMax, long N);

// Coefficient-wise check that u(t) = sum m_{2p} t^{2p}/(2p)! satisfies the
// ensemble's generating-function ODE; for GOE also the factored form via
// U = u'' - (4t^2+4N-2)u.
bool uOdeCheck(Ensemble e, int pMax, const Rational& N);

// Resolvent ODE residual: substitutes the kappa-specialized truncated
// expansion (as a series in 1/N with spectral-expression coefficients) into
// the ensemble's ODE, multiplied through by g/N.
struct ResidualReport {
  int verifiedZeroThrough = -1;   // all 1/N orders <= this are exactly zero
  int firstUndetermined = 0;      // first order that needs deeper data
  bool cleanThroughDetermined = false;
};
ResidualReport odeResidual(Ensemble e, const std::vector<SpectralExpr>& resolvent);

// Coefficient tables C_{j,r} (as polynomials in g) of the beta=2 resolvent
// expansion eta_j = sum_r C_{j,r} (x^2-4g)^{-r-1/2}; eta_j reproduces
// g^{2j} W_1^{2j} at h = 0.
std::vector<std::map<int, MultiPoly>> etaRecursion(int jMax);
SpectralExpr etaFromTable(const std::map<int, MultiPoly>& row);

// Closed-form 1/N coefficients of m_{2p}/(C_p N^{p+1}) (GUE) or
// m_{2p}/N^{p+1} (GOE/GSE) through order; order <= 6.
std::vector<Rational> largeNMomentExpansion(Ensemble e, int p, int order);

// m_{2p}(N,2) = (-1)^{p+1} 2^{-p-1} m_{2p}(-2N, 1/2) as symbolic polynomials.
bool gseGoeDuality(int p);

}  // namespace gbe
