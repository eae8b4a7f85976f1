#include "gbe/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gbe {

EdgeCoeff EdgeCoeff::term(Rational c, int hExp, int halfG) {
  EdgeCoeff e;
  if (!c.isZero()) e.t_[{hExp, halfG}] = std::move(c);
  return e;
}

EdgeCoeff& EdgeCoeff::operator+=(const EdgeCoeff& o) {
  for (const auto& [key, c] : o.t_) {
    auto it = t_.find(key);
    if (it == t_.end()) t_[key] = c;
    else {
      it->second += c;
      if (it->second.isZero()) t_.erase(it);
    }
  }
  return *this;
}

EdgeCoeff operator*(const EdgeCoeff& a, const EdgeCoeff& b) {
  EdgeCoeff r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r += EdgeCoeff::term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

EdgeCoeff EdgeCoeff::scaled(const Rational& c) const {
  EdgeCoeff r;
  if (c.isZero()) return r;
  for (const auto& [key, v] : t_) r.t_[key] = v * c;
  return r;
}

EdgeCoeff EdgeCoeff::inverse() const {
  if (t_.size() != 1) throw std::domain_error("EdgeCoeff::inverse: not a monomial");
  const auto& [key, c] = *t_.begin();
  return term(Rational(1) / c, -key.first, -key.second);
}

MultiPoly EdgeCoeff::toPoly() const {
  MultiPoly out;
  for (const auto& [key, c] : t_) {
    auto [hExp, halfG] = key;
    if (halfG < 0 || halfG % 2 != 0)
      throw std::logic_error("EdgeCoeff::toPoly: residual half power of g");
    out += MultiPoly::monomial(c, {{kSlotH, hExp}, {kSlotG, halfG / 2}});
  }
  return out;
}

double EdgeCoeff::evalDouble(double g, double h) const {
  double out = 0;
  for (const auto& [key, c] : t_)
    out += c.toDouble() * std::pow(h, key.first) * std::pow(g, key.second / 2.0);
  return out;
}

std::string EdgeCoeff::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*h^" << key.first << "*g^(" << key.second << "/2)";
  }
  return first ? "0" : os.str();
}

int SmoothedDensity::maxDeltaOrder() const {
  int m = -1;
  for (const auto& d : delta) m = std::max(m, d.j);
  return m;
}

bool SmoothedDensity::operator==(const SmoothedDensity& o) const {
  auto normBulk = [](const std::vector<BulkTerm>& v) {
    std::map<int, MultiPoly> m;
    for (const auto& b : v) {
      m[b.e] += b.numer;
      if (m[b.e].isZero()) m.erase(b.e);
    }
    return m;
  };
  auto normDelta = [](const std::vector<DeltaTerm>& v) {
    std::map<int, EdgeCoeff> m;
    for (const auto& d : v) {
      m[d.j] += d.coef;
      if (m[d.j].isZero()) m.erase(d.j);
    }
    return m;
  };
  return l == o.l && normBulk(bulk) == normBulk(o.bulk) && normDelta(delta) == normDelta(o.delta);
}

namespace {

// polynomial in x with EdgeCoeff coefficients
using EdgePoly = std::vector<EdgeCoeff>;

EdgePoly toEdgePoly(const MultiPoly& p) {
  EdgePoly out(std::max(0, p.degree(0)) + 1);
  for (const auto& [m, c] : p.terms()) {
    for (int s = 1; s < kNumVarSlots; ++s)
      if (m.e[s]) throw std::logic_error("density: numerator involves a spectator variable");
    out[m.e[0]] += EdgeCoeff::term(c, m.e[kSlotH], 2 * m.e[kSlotG]);
  }
  return out;
}

EdgePoly derivePoly(const EdgePoly& p) {
  EdgePoly out(p.size() > 1 ? p.size() - 1 : 0);
  for (size_t d = 1; d < p.size(); ++d) out[d - 1] = p[d].scaled(Rational(long(d)));
  return out;
}

// evaluate at x = sign * 2 g^{1/2}
EdgeCoeff evalAtEdge(const EdgePoly& p, int sign) {
  EdgeCoeff out;
  Rational two(1);
  for (size_t d = 0; d < p.size(); ++d) {
    Rational c = two;
    if (sign < 0 && d % 2) c = -c;
    out += (p[d] * EdgeCoeff::term(c, 0, int(d))).scaled(Rational(1));
    two *= Rational(2);
  }
  return out;
}

// (2r)^{-e} with r = 2 g^{1/2}: 4^{-e} g^{-e/2}; sign for (x -> -r) pole is
// handled by the caller.
EdgeCoeff inv2rPow(int e) {
  Rational c(1);
  for (int t = 0; t < e; ++t) c /= Rational(4);
  return EdgeCoeff::term(c, 0, -e);
}

}  // namespace

SmoothedDensity densityFromResolvent(const SpectralExpr& w, int l) {
  SmoothedDensity d;
  d.l = l;
  std::map<int, EdgeCoeff> deltaPlus, deltaMinus;
  for (const auto& [sigma, P] : w.parts()) {
    if (((sigma % 2) + 2) % 2 == 1) {
      // P y^{-(2m+1)} -> (-1)^m P / pi * (4g-x^2)^{-(2m+1)/2} on the support
      int m = (sigma - 1) / 2;  // exact: sigma odd, so sigma-1 is even (sigma=-1 -> m=-1)
      bool neg = ((m % 2) + 2) % 2 == 1;
      d.bulk.push_back({neg ? -P : P, -sigma});
      continue;
    }
    if (sigma == 0) continue;  // polynomial part carries no jump
    // rational part: P(x) / (x^2-4g)^m with poles only at +-2 sqrt g
    int m = sigma / 2;
    EdgePoly numer = toEdgePoly(P);
    // coefficients at (x - r)^{-s}: (1/(m-s)!) d^{m-s}[P/(x+r)^m] at x=r;
    // d^t[P (x+r)^{-m}] = sum_u C(t,u) P^{(u)} (-1)^{t-u} (m)_{t-u} (x+r)^{-m-t+u}
    std::vector<EdgePoly> derivs(m);  // P, P', ...
    derivs[0] = numer;
    for (int t = 1; t < m; ++t) derivs[t] = derivePoly(derivs[t - 1]);
    for (int side = 0; side < 2; ++side) {
      int sign = side == 0 ? 1 : -1;  // pole at sign * r; the other factor sits at (x + sign*r)
      for (int s = 1; s <= m; ++s) {
        int t = m - s;
        EdgeCoeff acc;
        for (int u = 0; u <= t; ++u) {
          EdgeCoeff pu = evalAtEdge(derivs[u], sign);
          Rational c = binomial(t, u) * pochhammerInt(Rational(m), t - u);
          if ((t - u) % 2) c = -c;
          // (x + sign*r)^{-m-t+u} at x = sign*r is (2 sign r)^{-(m+t-u)}
          EdgeCoeff denom = inv2rPow(m + t - u);
          if (sign < 0 && (m + t - u) % 2) denom = denom.scaled(Rational(-1));
          acc += (pu * denom).scaled(c * Rational(1) / factorial(t));
        }
        // c/(x-a)^{k+1} -> c (-1)^k delta^{(k)}(x-a)/k!
        int kOrd = s - 1;
        EdgeCoeff dcoef = acc.scaled(((kOrd % 2) ? Rational(-1) : Rational(1)) / factorial(kOrd));
        if (sign > 0) deltaPlus[kOrd] += dcoef;
        else deltaMinus[kOrd] += dcoef;
      }
    }
  }
  // normalize to the eps basis: coefficient of delta^(k)(x+r) must equal
  // (-1)^k times the coefficient of delta^(k)(x-r)
  for (const auto& [k, cp] : deltaPlus) {
    EdgeCoeff expectMinus = (k % 2) ? -cp : cp;
    auto it = deltaMinus.find(k);
    EdgeCoeff cm = it == deltaMinus.end() ? EdgeCoeff() : it->second;
    if (!(cm == expectMinus))
      throw UnreducibleRationalPart("edge distribution is not eps-symmetric at order " +
                                    std::to_string(k));
    if (!cp.isZero()) d.delta.push_back({k, cp});
  }
  for (const auto& [k, cm] : deltaMinus)
    if (!deltaPlus.count(k) && !cm.isZero())
      throw UnreducibleRationalPart("stray delta at -2 sqrt g of order " + std::to_string(k));
  std::sort(d.bulk.begin(), d.bulk.end(), [](const BulkTerm& a, const BulkTerm& b) { return a.e < b.e; });
  return d;
}

MultiPoly polynomialMean(const SmoothedDensity& d, int twoSigma) {
  if (twoSigma % 2 != 0) return MultiPoly();  // odd moments vanish by symmetry
  int sigma = twoSigma / 2;
  MultiPoly out;
  for (const auto& b : d.bulk) {
    const int m = (-b.e - 1) / 2;  // e odd, exact division (e = 1 -> m = -1)
    for (const auto& [mono, c] : b.numer.terms()) {
      int dx = mono.e[0];
      if (dx % 2) continue;  // odd integrand
      int q = sigma + dx / 2;
      if (q < m) continue;  // Beta continuation vanishes
      // int x^{2q} (c/pi)(4g-x^2)^{-(2m+1)/2} = c (4g)^{q-m} r_q r_{-m} / (q-m)!
      Rational val = c * halfGammaRatio(q) * halfGammaRatio(-m) / factorial(q - m);
      mpz_class f;
      mpz_ui_pow_ui(f.get_mpz_t(), 4, q - m);
      val *= Rational(f);
      Monomial mm = mono;
      mm.e[0] = 0;
      int ge = int(mm.e[kSlotG]) + (q - m);
      mm.e[kSlotG] = static_cast<uint8_t>(ge);
      out += MultiPoly::fromTerms({{mm, val}});
    }
  }
  for (const auto& dt : d.delta) {
    // int x^{2s} eps^{(j)} = 2 (-1)^j (2s)(2s-1)...(2s-j+1) r^{2s-j}
    int j = dt.j;
    if (j > twoSigma) continue;
    Rational c = Rational(2) * ((j % 2) ? Rational(-1) : Rational(1)) *
                 pochhammerInt(Rational(twoSigma - j + 1), j);
    // r^{2s-j} = 2^{2s-j} g^{(2s-j)/2}
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, twoSigma - j);
    EdgeCoeff contrib = dt.coef.scaled(c * Rational(f)) * EdgeCoeff::term(Rational(1), 0, twoSigma - j);
    out += contrib.toPoly();
  }
  return out;
}

SpectralExpr stieltjesOfDensity(const SmoothedDensity& d) {
  SpectralExpr out;
  for (const auto& b : d.bulk) {
    int sigma = -b.e;
    int m = (sigma - 1) / 2;
    bool neg = ((m % 2) + 2) % 2 == 1;
    out += SpectralExpr::term(neg ? -b.numer : b.numer, sigma);
  }
  if (!d.delta.empty()) {
    int J = 0;
    for (const auto& dt : d.delta) J = std::max(J, dt.j);
    // sum_j C_j (-1)^j j! [ (x-r)^{J-j}(x+r)^{J+1} + (-1)^j (x-r)^{J+1}(x+r)^{J-j} ]
    // over the common denominator (x^2-4g)^{J+1}
    int len = 2 * J + 2;
    EdgePoly acc(len + 1);
    auto addBinomProd = [&](int e1, int e2, const EdgeCoeff& c) {
      // c * (x-r)^{e1} (x+r)^{e2}
      for (int u = 0; u <= e1; ++u)
        for (int v = 0; v <= e2; ++v) {
          Rational bc = binomial(e1, u) * binomial(e2, v);
          int rpow = (e1 - u) + (e2 - v);
          if ((e1 - u) % 2) bc = -bc;
          mpz_class f;
          mpz_ui_pow_ui(f.get_mpz_t(), 2, rpow);
          acc[u + v] += (c * EdgeCoeff::term(bc * Rational(f), 0, rpow));
        }
    };
    for (const auto& dt : d.delta) {
      Rational base = factorial(dt.j);
      if (dt.j % 2) base = -base;
      addBinomProd(J - dt.j, J + 1, dt.coef.scaled(base));
      Rational base2 = base * ((dt.j % 2) ? Rational(-1) : Rational(1));
      addBinomProd(J + 1, J - dt.j, dt.coef.scaled(base2));
    }
    MultiPoly numer;
    for (int u = 0; u <= len; ++u) {
      if (acc[u].isZero()) continue;
      numer += acc[u].toPoly() * MultiPoly::variable(0, u);
    }
    out += SpectralExpr::term(numer, 2 * (J + 1));
  }
  return out;
}

namespace {

// Laurent polynomial in t with double coefficients; exponents may be negative.
using Laurent = std::map<int, double>;

Laurent lMulInvT(const Laurent& a, double s) {
  Laurent r;
  for (auto& [e, c] : a) r[e - 1] += c * s;
  return r;
}
Laurent lDeriv(const Laurent& a) {
  Laurent r;
  for (auto& [e, c] : a)
    if (e != 0) r[e - 1] += c * e;
  return r;
}
double lEval(const Laurent& a, double t) {
  double s = 0;
  for (auto& [e, c] : a) s += c * std::pow(t, e);
  return s;
}

}  // namespace

double statisticMeanAtOrder(const SmoothedDensity& d, const SmoothStatistic& a, double g,
                            double h, const QuadratureConfig& cfg) {
  if (a.smoothness < d.maxDeltaOrder())
    throw InsufficientSmoothness("statistic smoothness below the deepest delta order");
  const double r = 2.0 * std::sqrt(g);
  double total = 0;

  for (const auto& b : d.bulk) {
    const int n = std::max(0, (-b.e - 1) / 2);  // alpha = n + 1/2 for e < 0
    // f(t) = (r/pi) (4g)^{e/2} a(r t) numer(r t); the integral is
    // int_0^1 y^{-1/2} (1-y)^{e/2} F(y) dy with F(y) = (f(sqrt y)+f(-sqrt y))/2
    std::vector<double> px(std::max(0, b.numer.degree(0)) + 1, 0.0);
    for (const auto& [mono, c] : b.numer.terms())
      px[mono.e[0]] += c.toDouble() * std::pow(g, mono.e[kSlotG]) * std::pow(h, mono.e[kSlotH]);
    auto polyEval = [&](double x, int order) {
      double s = 0;
      for (int dd = order; dd < int(px.size()); ++dd) {
        double f = 1;
        for (int t = 0; t < order; ++t) f *= (dd - t);
        s += px[dd] * f * std::pow(x, dd - order);
      }
      return s;
    };
    const double scale = (r / M_PI) * std::pow(4.0 * g, 0.5 * b.e);
    auto fDeriv = [&](double t, int u) {
      // d^u/dt^u [a(rt) numer(rt)] = r^u sum_v C(u,v) a^{(v)}(rt) numer^{(u-v)}(rt)
      double s = 0;
      for (int v = 0; v <= u; ++v) {
        double av = v == 0 ? a.value(r * t) : a.deriv(r * t, v);
        s += binomial(u, v).toDouble() * av * polyEval(r * t, u - v);
      }
      return scale * std::pow(r, u) * s;
    };
    const int maxDy = n - 1 + cfg.extraSubtractions + 16;
    // F^{(m)}(1) via the operator d/dy = (1/2t) d/dt applied at t = +-1
    std::vector<double> fDerivAt1(maxDy + 2), fDerivAtM1(maxDy + 2);
    int avail = std::min(a.smoothness, maxDy + 1);
    for (int u = 0; u <= avail; ++u) {
      fDerivAt1[u] = fDeriv(1.0, u);
      fDerivAtM1[u] = fDeriv(-1.0, u);
    }
    std::vector<std::map<int, Laurent>> ops(maxDy + 1);  // m -> (u -> coeff Laurent)
    ops[0][0] = Laurent{{0, 1.0}};
    for (int m = 1; m <= maxDy; ++m)
      for (auto& [u, c] : ops[m - 1]) {
        Laurent dc = lMulInvT(lDeriv(c), 0.5);
        for (auto& [e, v] : dc) ops[m][u][e] += v;
        Laurent shift = lMulInvT(c, 0.5);
        for (auto& [e, v] : shift) ops[m][u + 1][e] += v;
      }
    SmoothFn F;
    F.value = [&, px](double y) {
      double t = std::sqrt(y);
      return 0.5 * (fDeriv(t, 0) + fDeriv(-t, 0));
    };
    F.derivAtOne = [&, avail](int m) {
      if (m > maxDy) return 0.0;
      double s = 0;
      for (auto& [u, c] : ops[m]) {
        if (u > avail) continue;  // out of declared smoothness; edge tail truncates
        s += lEval(c, 1.0) * fDerivAt1[u] + lEval(c, -1.0) * fDerivAtM1[u];
      }
      return 0.5 * s;
    };
    if (b.e > 0) {
      // integrable semicircle factor: direct quadrature on x = r sin(theta)
      total += adaptiveGK(
          [&](double th) {
            double x = r * std::sin(th);
            double w = std::pow(4 * g - x * x, 0.5 * b.e);
            return a.value(x) * polyEval(x, 0) / M_PI * w * r * std::cos(th);
          },
          -M_PI / 2, M_PI / 2, cfg.relTol, cfg.maxDepth);
    } else {
      total += hadamardFinitePart(F, n, cfg);
    }
  }

  for (const auto& dt : d.delta) {
    double c = dt.coef.evalDouble(g, h);
    double aPlus = dt.j == 0 ? a.value(r) : a.deriv(r, dt.j);
    double aMinus = dt.j == 0 ? a.value(-r) : a.deriv(-r, dt.j);
    double sgn = (dt.j % 2) ? -1.0 : 1.0;
    total += c * sgn * (aPlus + sgn * aMinus);
  }
  return total;
}

std::vector<double> linearStatisticMeans(const std::vector<SmoothedDensity>& ds,
                                         const SmoothStatistic& a, double g, double h,
                                         const QuadratureConfig& cfg) {
  std::vector<double> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(statisticMeanAtOrder(d, a, g, h, cfg));
  return out;
}

double assembleStatisticSeries(const std::vector<double>& perOrder, double g, double N,
                               double kappa) {
  double out = 0;
  double f = 1.0 / g;
  double ratio = g / (std::sqrt(kappa) * N);
  for (double v : perOrder) {
    out += f * v;
    f *= ratio;
  }
  return out;
}

}  // namespace gbe
