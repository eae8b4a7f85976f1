#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gbe/classical.hpp"
#include "gbe/golden.hpp"
#include "gbe/json_io.hpp"
#include "gbe/montecarlo.hpp"
#include "gbe/verify.hpp"

namespace {

using namespace gbe;

void emit(const std::string& outPath, const std::string& text) {
  if (outPath.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(outPath);
    f << text << "\n";
  }
}

json withSchema(json j) {
  json out;
  out["schema"] = "gbe/1";
  out["data"] = std::move(j);
  return out;
}

// Chebyshev statistic T_k(x / (2 sqrt g)) with exact derivative coefficients.
SmoothStatistic chebyshevStatistic(int k, double g) {
  std::vector<double> coef(k + 1, 0.0);
  {
    // T_k coefficients by the three-term recurrence
    std::vector<std::vector<double>> T(k + 1);
    T[0] = {1.0};
    if (k >= 1) T[1] = {0.0, 1.0};
    for (int n = 2; n <= k; ++n) {
      T[n].assign(n + 1, 0.0);
      for (size_t i = 0; i < T[n - 1].size(); ++i) T[n][i + 1] += 2.0 * T[n - 1][i];
      for (size_t i = 0; i < T[n - 2].size(); ++i) T[n][i] -= T[n - 2][i];
    }
    coef = T[k];
  }
  double r = 2.0 * std::sqrt(g);
  auto evalDeriv = [coef, r](double x, int order) {
    std::vector<double> c = coef;
    for (int t = 0; t < order; ++t) {
      std::vector<double> d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
      for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * double(i);
      c = d;
    }
    double u = x / r, v = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) v = v * u + c[i];
    return v / std::pow(r, order);
  };
  SmoothStatistic a;
  a.smoothness = 99;
  a.value = [evalDeriv](double x) { return evalDeriv(x, 0); };
  a.deriv = [evalDeriv](double x, int order) { return evalDeriv(x, order); };
  return a;
}

int runVerify(const std::string& suite, long mcSamples, uint64_t seed, int threads,
              const std::string& outPath) {
  HierarchyStore store;
  auto reports = runSuites(suite, store, mcSamples, seed, threads);
  json matrix = json::array();
  bool pass = true;
  for (const auto& rep : reports) {
    for (const auto& c : rep.checks) {
      matrix.push_back({{"suite", rep.suite},
                        {"check", c.id},
                        {"anchor", c.anchor},
                        {"status", c.pass ? "pass" : "fail"},
                        {"detail", c.detail}});
      pass = pass && c.pass;
    }
  }
  emit(outPath, withSchema(matrix).dump(2));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop-equation engine for Gaussian beta-ensemble moments and densities"};
  app.require_subcommand(1);
  std::string outPath;
  app.add_option("--out", outPath, "write output to a file instead of stdout")
      ->envname("GBE_OUT");
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for embarrassingly parallel stages")
      ->envname("GBE_THREADS");

  auto* resolventCmd = app.add_subcommand("resolvent", "large-N resolvent coefficients");
  int lmax = 6;
  std::string format = "json";
  resolventCmd->add_option("--lmax", lmax, "highest 1/N order")->envname("GBE_LMAX");
  resolventCmd->add_option("--format", format, "json|latex");

  auto* momentsCmd = app.add_subcommand("moments", "exact moment polynomials m_{2p}(N,kappa)");
  int pOpt = 3;
  std::string mFormat = "json";
  momentsCmd->add_option("--p", pOpt, "half moment order");
  momentsCmd->add_option("--format", mFormat, "json|latex");

  auto* classicalCmd = app.add_subcommand("classical", "beta = 1, 2, 4 moment tables");
  std::string ensName = "GUE";
  int cPmax = 6;
  std::string cN = "4";
  classicalCmd->add_option("--ensemble", ensName, "GUE|GOE|GSE");
  classicalCmd->add_option("--pmax", cPmax, "highest half order");
  classicalCmd->add_option("--n", cN, "matrix dimension (rational allowed)");

  auto* densityCmd = app.add_subcommand("density", "smoothed density terms at one order");
  int dL = 2;
  std::string gStr = "1/4";
  densityCmd->add_option("--l", dL, "1/N order");
  densityCmd->add_option("--g", gStr, "coupling g")->envname("GBE_G");
  densityCmd->add_option("--format", format, "json");

  auto* integrateCmd = app.add_subcommand("integrate", "means of linear statistics per order");
  std::string stat = "poly:2";
  int iLmax = 6;
  std::string iG = "1/4", iKappa = "1";
  integrateCmd->add_option("--stat", stat, "poly:2s | cheb:k");
  integrateCmd->add_option("--lmax", iLmax, "highest 1/N order");
  integrateCmd->add_option("--g", iG, "coupling g")->envname("GBE_G");
  integrateCmd->add_option("--kappa", iKappa, "kappa = beta/2");

  auto* mcCmd = app.add_subcommand("mc", "Monte-Carlo validation of trace moments");
  int mcN = 64, mcP = 4;
  double mcBeta = 2.0;
  long mcSamples = 100000;
  uint64_t mcSeed = 42;
  std::string convention = "unscaled";
  mcCmd->add_option("--n", mcN, "matrix dimension");
  mcCmd->add_option("--beta", mcBeta, "Dyson index beta");
  mcCmd->add_option("--samples", mcSamples, "sample count");
  mcCmd->add_option("--p", mcP, "highest half order");
  mcCmd->add_option("--seed", mcSeed, "RNG seed")->envname("GBE_SEED");
  mcCmd->add_option("--convention", convention, "unscaled|starred")->envname("GBE_CONVENTION");

  auto* verifyCmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  long vSamples = 100000;
  uint64_t vSeed = 42;
  verifyCmd->add_option("--suite", suite,
                        "resolvent|moments|densities|identity|odes|classical|structure|hadamard|"
                        "mc|golden|all");
  verifyCmd->add_option("--mc-samples", vSamples, "samples for the mc suite");
  verifyCmd->add_option("--seed", vSeed, "RNG seed")->envname("GBE_SEED");

  auto* dagCmd = app.add_subcommand("dag", "export the hierarchy dependency DAG");
  int dagLmax = 6;
  dagCmd->add_option("--lmax", dagLmax, "highest 1/N order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (resolventCmd->parsed()) {
      gbe::HierarchyStore store;
      auto ws = store.resolventExpansion(lmax);
      if (format == "latex") {
        std::string text;
        for (int l = 0; l <= lmax; ++l)
          text += "W_1^{" + std::to_string(l) + "} = " + spectralToLatex(ws[l]) + "\n";
        emit(outPath, text);
      } else {
        json arr = json::array();
        for (int l = 0; l <= lmax; ++l) arr.push_back({{"l", l}, {"terms", spectralToJson(ws[l])}});
        emit(outPath, withSchema(arr).dump(2));
      }
    } else if (momentsCmd->parsed()) {
      gbe::HierarchyStore store;
      auto ws = store.resolventExpansion(pOpt);
      MomentPoly m = momentPolynomial(pOpt, ws);
      if (mFormat == "latex") emit(outPath, momentToLatex(m));
      else emit(outPath, withSchema(momentToJson(m)).dump(2));
    } else if (classicalCmd->parsed()) {
      Ensemble e = ensName == "GOE"   ? Ensemble::GOE
                   : ensName == "GSE" ? Ensemble::GSE
                                      : Ensemble::GUE;
      auto ms = recurrenceMoments(e, cPmax, Rational::parse(cN));
      json arr = json::array();
      for (int p = 0; p <= cPmax; ++p) arr.push_back({{"p", p}, {"value", ms[p].str()}});
      emit(outPath, withSchema({{"ensemble", ensembleName(e)}, {"moments", arr}}).dump(2));
    } else if (densityCmd->parsed()) {
      gbe::HierarchyStore store;
      SmoothedDensity d = densityFromResolvent(store.resolventCoeff(dL), dL);
      json j = densityToJson(d);
      j["g"] = gStr;
      emit(outPath, withSchema(j).dump(2));
    } else if (integrateCmd->parsed()) {
      gbe::HierarchyStore store;
      double g = Rational::parse(iG).toDouble();
      double kappa = Rational::parse(iKappa).toDouble();
      double h = std::sqrt(kappa) - 1.0 / std::sqrt(kappa);
      std::vector<SmoothedDensity> ds;
      for (int l = 0; l <= iLmax; ++l)
        ds.push_back(densityFromResolvent(store.resolventCoeff(l), l));
      json arr = json::array();
      auto colon = stat.find(':');
      if (colon == std::string::npos) throw CLI::ValidationError("--stat", "expected kind:arg");
      std::string kind = stat.substr(0, colon);
      int arg = std::stoi(stat.substr(colon + 1));
      if (kind == "poly") {
        if (arg % 2 != 0) throw CLI::ValidationError("--stat", "poly statistic must be even");
        Rational gr = Rational::parse(iG);
        for (int l = 0; l <= iLmax; ++l) {
          MultiPoly v = polynomialMean(ds[l], arg);
          // evaluate at the numeric g and h^2 = kappa - 2 + 1/kappa
          double val = 0;
          for (const auto& [mono, c] : v.terms())
            val += c.toDouble() * std::pow(g, mono.e[kSlotG]) * std::pow(h, mono.e[kSlotH]);
          arr.push_back({{"l", l}, {"mean", val}, {"exact", v.str()}});
        }
      } else if (kind == "cheb") {
        SmoothStatistic a = chebyshevStatistic(arg, g);
        QuadratureConfig cfg;
        for (int l = 0; l <= iLmax; ++l)
          arr.push_back({{"l", l}, {"mean", statisticMeanAtOrder(ds[l], a, g, h, cfg)}});
      } else {
        throw CLI::ValidationError("--stat", "unknown statistic kind " + kind);
      }
      emit(outPath, withSchema(arr).dump(2));
    } else if (mcCmd->parsed()) {
      Convention conv = convention == "starred" ? Convention::Starred : Convention::Unscaled;
      gbe::HierarchyStore store;
      auto ws = store.resolventExpansion(mcP);
      Rational kinv = Rational(2) / Rational::parse(std::to_string(mcBeta));
      double g = 0.25;
      std::vector<double> exact(mcP + 1);
      for (int p = 0; p <= mcP; ++p) {
        Rational v = momentPolynomial(p, ws).eval(Rational(mcN), kinv);
        double scale = conv == Convention::Starred ? std::pow(g / mcN, p) : 1.0;
        exact[p] = v.toDouble() * scale;
      }
      auto est = estimateAndCompare(mcN, mcBeta, mcP, mcSamples, mcSeed, conv, g, exact, threads);
      std::ostringstream os;
      os << "p,estimate,stderr,exact,z\n";
      for (const auto& e : est)
        os << e.p << "," << e.mean << "," << e.stderror << "," << e.exact << "," << e.z << "\n";
      emit(outPath, os.str());
    } else if (verifyCmd->parsed()) {
      return runVerify(suite, vSamples, vSeed, threads, outPath);
    } else if (dagCmd->parsed()) {
      gbe::HierarchyStore store;
      store.resolventExpansion(dagLmax);
      emit(outPath, withSchema(dagToJson(store)).dump(2));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
