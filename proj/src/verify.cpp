#include "gbe/verify.hpp"

#include <cmath>
#include <sstream>

#include "gbe/classical.hpp"
#include "gbe/density.hpp"
#include "gbe/golden.hpp"
#include "gbe/hadamard.hpp"
#include "gbe/montecarlo.hpp"

namespace gbe {

void VerificationReport::add(std::string id, std::string anchor, bool ok, std::string detail) {
  checks.push_back({std::move(id), std::move(anchor), ok, std::move(detail)});
}

VerificationReport verifyGoldenResolvent(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "golden-resolvent";
  const auto& golden = goldenResolvent();
  for (int l = 0; l <= 6; ++l) {
    SpectralExpr w = store.resolventCoeff(l);
    rep.add("W1_" + std::to_string(l), "resolvent coefficient " + std::to_string(l),
            w == golden[l]);
  }
  return rep;
}

VerificationReport verifyGoldenMoments(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "golden-moments";
  auto resolvent = store.resolventExpansion(10);
  const auto& golden = goldenMoments();
  for (int p = 0; p <= 10; ++p) {
    MomentPoly m = momentPolynomial(p, resolvent);
    rep.add("m_" + std::to_string(2 * p), "moment table m_" + std::to_string(2 * p),
            m == golden[p]);
  }
  return rep;
}

VerificationReport verifyGoldenDensities(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "golden-densities";
  const auto& golden = goldenDensities();
  for (int l = 0; l <= 6; ++l) {
    SmoothedDensity d = densityFromResolvent(store.resolventCoeff(l), l);
    rep.add("rho_" + std::to_string(l), "smoothed density order " + std::to_string(l),
            d == golden[l]);
    SpectralExpr back = stieltjesOfDensity(d);
    rep.add("rho_" + std::to_string(l) + "_roundtrip",
            "Stieltjes transform returns the resolvent coefficient",
            back == store.resolventCoeff(l));
  }
  return rep;
}

VerificationReport verifyMomentIdentity(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "moment-identity";
  for (int l = 1; l <= 6; ++l) {
    SmoothedDensity d = densityFromResolvent(store.resolventCoeff(l), l);
    bool ok = true;
    std::string bad;
    for (int sigma = 0; sigma <= l - 1; ++sigma) {
      MultiPoly v = polynomialMean(d, 2 * sigma);
      if (!v.isZero()) {
        ok = false;
        bad = "sigma=" + std::to_string(sigma);
        break;
      }
    }
    rep.add("orthogonality_l" + std::to_string(l),
            "vanishing low moments of the order-" + std::to_string(l) + " density", ok, bad);
  }
  return rep;
}

VerificationReport verifyOdeResiduals(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "ode-residuals";
  auto resolvent = store.resolventExpansion(6);
  struct Want {
    Ensemble e;
    int through;
  } wants[] = {{Ensemble::GUE, 7}, {Ensemble::GOE, 6}, {Ensemble::GSE, 6}};
  for (auto [e, through] : wants) {
    ResidualReport r = odeResidual(e, resolvent);
    std::ostringstream det;
    det << "zero through 1/N^" << r.verifiedZeroThrough << ", undetermined from 1/N^"
        << r.firstUndetermined;
    rep.add(std::string(ensembleName(e)) + "_ode", std::string(ensembleName(e)) + " resolvent ODE",
            r.cleanThroughDetermined && r.verifiedZeroThrough >= through &&
                r.firstUndetermined == through + 1,
            det.str());
  }
  return rep;
}

VerificationReport verifyClassical(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "classical";
  auto resolvent = store.resolventExpansion(12);
  for (Ensemble e : {Ensemble::GUE, Ensemble::GOE, Ensemble::GSE}) {
    Rational kinv = Rational(1) / ensembleKappa(e);
    bool agree = true;
    std::string bad;
    for (int N = 1; N <= 8 && agree; ++N) {
      auto rec = recurrenceMoments(e, 12, Rational(N));
      for (int p = 0; p <= 12 && agree; ++p) {
        Rational general = momentPolynomial(p, resolvent).eval(Rational(N), kinv);
        if (general != rec[p]) {
          agree = false;
          bad = "general-beta mismatch at p=" + std::to_string(p) + ", N=" + std::to_string(N);
          break;
        }
        std::vector<MomentFormula> fs;
        if (e == Ensemble::GUE) fs = {MomentFormula::MehtaGUE, MomentFormula::MezzadriSimmGUE};
        if (e == Ensemble::GOE) {
          fs = {MomentFormula::GouldenJacksonGOE};
          if (N % 2 == 0) fs.push_back(MomentFormula::MezzadriSimmGOE);
        }
        if (e == Ensemble::GSE) fs = {MomentFormula::MezzadriSimmGSE};
        for (auto f : fs) {
          if (closedFormMoment(e, f, p, N) != rec[p]) {
            agree = false;
            bad = "closed form " + std::to_string(int(f)) + " mismatch at p=" +
                  std::to_string(p) + ", N=" + std::to_string(N);
            break;
          }
        }
      }
    }
    rep.add(std::string(ensembleName(e)) + "_triple",
            std::string(ensembleName(e)) + " recurrence / closed forms / general-beta moments",
            agree, bad);
  }
  {
    bool ok = true;
    std::string bad;
    for (long N = 1; N <= 6 && ok; ++N) {
      auto rec = recurrenceMoments(Ensemble::GUE, 20, Rational(N));
      auto hz = harerZagier(20, N);
      auto us = gueUSeries(20, N);
      for (int p = 0; p <= 20; ++p) {
        if (hz[p] != rec[p]) { ok = false; bad = "generating function, N=" + std::to_string(N); break; }
        if (us[p] * factorial(2 * p) != rec[p]) { ok = false; bad = "1F1 series, N=" + std::to_string(N); break; }
      }
    }
    rep.add("GUE_generating_functions", "sub-exponential and exponential generating functions", ok,
            bad);
  }
  for (Ensemble e : {Ensemble::GUE, Ensemble::GOE, Ensemble::GSE}) {
    bool ok = true;
    for (long N = 1; N <= 4 && ok; ++N) ok = uOdeCheck(e, 10, Rational(N));
    rep.add(std::string(ensembleName(e)) + "_uODE",
            std::string(ensembleName(e)) + " generating-function ODE", ok);
  }
  {
    auto tables = etaRecursion(3);
    bool ok = true;
    for (int j = 1; j <= 3; ++j) {
      SpectralExpr eta = etaFromTable(tables[j]);
      SpectralExpr w = store.resolventCoeff(2 * j).substituteH(Rational(0));
      // eta_j = g^{2j} W_1^{2j}|_{h=0}
      SpectralExpr scaled;
      for (const auto& [s, p] : w.parts())
        scaled += SpectralExpr::term(p * pG(2 * j), s);
      if (!(eta == scaled)) ok = false;
    }
    rep.add("eta_recursion", "beta=2 resolvent coefficient recurrence", ok);
  }
  for (Ensemble e : {Ensemble::GUE, Ensemble::GOE, Ensemble::GSE}) {
    bool ok = true;
    std::string bad;
    for (int p = 0; p <= 12 && ok; ++p) {
      auto sym = recurrenceMomentsSym(e, p)[p];
      int maxOrder = std::min(6, p + 1);
      auto cs = largeNMomentExpansion(e, p, maxOrder);
      for (int dOrd = 0; dOrd <= maxOrder; ++dOrd) {
        Rational lhs;  // coefficient of N^{p+1-dOrd} in m_{2p}
        for (const auto& [m, c] : sym.terms())
          if (m.e[kSlotN] == p + 1 - dOrd) lhs += c;
        Rational rhs = cs[dOrd];
        if (e == Ensemble::GUE) rhs *= catalan(p);
        if (lhs != rhs) {
          ok = false;
          bad = "order " + std::to_string(dOrd) + " at p=" + std::to_string(p);
          break;
        }
      }
    }
    rep.add(std::string(ensembleName(e)) + "_largeN",
            std::string(ensembleName(e)) + " large-N moment coefficients", ok, bad);
  }
  return rep;
}

VerificationReport verifyStructureDuality(HierarchyStore& store) {
  VerificationReport rep;
  rep.suite = "structure-duality";
  auto resolvent = store.resolventExpansion(10);
  bool dual = true, structure = true, subl = true;
  std::string dualBad, structBad, sublBad;
  double maxDev = 0;
  for (int p = 0; p <= 10; ++p) {
    MomentPoly m = momentPolynomial(p, resolvent);
    if (!checkDuality(m)) { dual = false; dualBad = "p=" + std::to_string(p); }
    auto sr = checkStructure(m);
    if (!sr.pass) {
      structure = false;
      structBad = "p=" + std::to_string(p) + ": " + sr.violations.front();
    }
    for (int depth = 1; depth <= std::min(6, p); ++depth)
      if (!subleadingMatchesMoment(m, depth)) {
        subl = false;
        sublBad = "p=" + std::to_string(p) + ", depth=" + std::to_string(depth);
      }
    if (p >= 2) maxDev = std::max(maxDev, unitCircleZeros(m, 1e-8).maxDeviation);
  }
  rep.add("duality", "kappa <-> 1/kappa moment duality", dual, dualBad);
  rep.add("structure", "degree, Catalan leading term, palindromic numerators", structure,
          structBad);
  rep.add("subleading", "closed forms of six subleading coefficient families", subl, sublBad);
  {
    std::ostringstream det;
    det << "max | |root|-1 | = " << maxDev;
    rep.add("unit_circle", "zeros of the N-coefficient numerators (empirical)", maxDev < 1e-8,
            det.str());
  }
  {
    bool ok = true;
    for (int p = 0; p <= 10 && ok; ++p) ok = gseGoeDuality(p);
    rep.add("gse_goe", "GSE moments from GOE moments under N -> -2N", ok);
  }
  for (int l = 0; l <= 6; ++l) {
    auto cr = canonicalCheck(resolvent[l], l);
    rep.add("canonical_W1_" + std::to_string(l), "two-denominator form of the resolvent slice",
            cr.pass, cr.pass ? "" : cr.violations.front());
  }
  return rep;
}

VerificationReport verifyHadamard() {
  VerificationReport rep;
  rep.suite = "hadamard";
  QuadratureConfig cfg;
  {
    SmoothFn one{[](double) { return 1.0; }, [](int t) { return t == 0 ? 1.0 : 0.0; }};
    double v = hadamardFinitePart(one, 1, cfg);
    rep.add("pf_constant", "finite part of the constant against (1-x^2)^{-3/2}",
            std::fabs(v) < 1e-12, "value " + std::to_string(v));
    double conv = hadamardFinitePart(one, 0, cfg);
    rep.add("beta_convergent", "arcsine integral", std::fabs(conv - M_PI) < 1e-10,
            "value " + std::to_string(conv));
  }
  {
    SmoothFn lin{[](double y) { return y; },
                 [](int t) { return t == 0 ? 1.0 : (t == 1 ? 1.0 : 0.0); }};
    double v = hadamardFinitePart(lin, 1, cfg);
    rep.add("beta_continuation", "finite part of y against the 3/2-singular weight",
            std::fabs(v + M_PI) < 1e-9, "value " + std::to_string(v));
  }
  {
    SmoothFn smooth{[](double y) { return std::exp(y) * std::cos(0.5 * y); }, [](int t) {
                      // derivatives of e^y cos(y/2) at y=1 via the complex exponential
                      std::complex<double> z(1.0, 0.5);
                      std::complex<double> v = std::pow(z, t) * std::exp(z);
                      return v.real();
                    }};
    QuadratureConfig extra = cfg;
    extra.extraSubtractions = 1;
    bool ok = true;
    double worst = 0;
    for (int n = 1; n <= 3; ++n) {
      double a = hadamardFinitePart(smooth, n, cfg);
      double b = hadamardFinitePart(smooth, n, extra);
      worst = std::max(worst, std::fabs(a - b));
      if (std::fabs(a - b) > 1e-8) ok = false;
    }
    rep.add("subtraction_invariance", "extra Taylor subtractions leave the value unchanged", ok,
            "max drift " + std::to_string(worst));
  }
  return rep;
}

VerificationReport verifyMonteCarlo(long samples, uint64_t seed, int threads) {
  VerificationReport rep;
  rep.suite = "monte-carlo";
  HierarchyStore store;
  auto resolvent = store.resolventExpansion(3);
  struct Cfg {
    int N;
    double beta;
  } cfgs[] = {{8, 2.0}, {4, 1.0}, {4, 4.0}, {6, 5.0}};
  for (auto [N, beta] : cfgs) {
    Rational kinv(2, long(beta));  // 1/kappa = 2/beta; beta is integral here
    std::vector<double> exact(4);
    for (int p = 0; p <= 3; ++p)
      exact[p] = momentPolynomial(p, resolvent).eval(Rational(N), kinv).toDouble();
    auto est = estimateAndCompare(N, beta, 3, samples, seed, Convention::Unscaled, 0.25, exact,
                                  threads);
    double worst = 0;
    for (const auto& e : est) worst = std::max(worst, std::fabs(e.z));
    std::ostringstream id, det;
    id << "mc_N" << N << "_beta" << beta;
    det << "max |z| = " << worst;
    rep.add(id.str(), "trace moments of the tridiagonal realization", worst <= 4.0, det.str());
  }
  return rep;
}

std::vector<VerificationReport> runSuites(const std::string& name, HierarchyStore& store,
                                          long mcSamples, uint64_t mcSeed, int threads) {
  std::vector<VerificationReport> out;
  auto want = [&](const std::string& s) {
    return name == s || name == "all" ||
           (name == "golden" && (s == "resolvent" || s == "moments" || s == "densities" ||
                                 s == "classical"));
  };
  if (want("resolvent")) out.push_back(verifyGoldenResolvent(store));
  if (want("moments")) out.push_back(verifyGoldenMoments(store));
  if (want("densities")) out.push_back(verifyGoldenDensities(store));
  if (want("identity")) out.push_back(verifyMomentIdentity(store));
  if (want("odes")) out.push_back(verifyOdeResiduals(store));
  if (want("classical")) out.push_back(verifyClassical(store));
  if (want("structure")) out.push_back(verifyStructureDuality(store));
  if (want("hadamard")) out.push_back(verifyHadamard());
  if (want("mc")) out.push_back(verifyMonteCarlo(mcSamples, mcSeed, threads));
  if (out.empty()) throw std::domain_error("unknown suite: " + name);
  return out;
}

}  // namespace gbe
