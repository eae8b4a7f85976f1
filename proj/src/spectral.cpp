#include "gbe/spectral.hpp"

#include <sstream>
#include <stdexcept>

namespace gbe {

SpectralExpr SpectralExpr::term(MultiPoly numer, int sigma) {
  SpectralExpr e;
  if (!numer.isZero()) e.t_[sigma] = std::move(numer);
  e.normalize();
  return e;
}

MultiPoly SpectralExpr::numerAt(int sigma) const {
  auto it = t_.find(sigma);
  return it == t_.end() ? MultiPoly() : it->second;
}

void SpectralExpr::reducePair(int slot, int& sigma, MultiPoly& numer) {
  if (numer.isZero()) { sigma = 0; return; }
  const MultiPoly curve = curveSquare(slot);
  const int floor = (((sigma % 2) + 2) % 2 == 0) ? 0 : -1;
  if (sigma < floor) {
    // positive even powers of y expand into the numerator
    while (sigma < floor) {
      numer = numer * curve;
      sigma += 2;
    }
  }
  while (sigma - 2 >= floor) {
    bool ok;
    MultiPoly q = numer.divExact(curve, &ok);
    if (!ok) break;
    numer = std::move(q);
    sigma -= 2;
  }
}

void SpectralExpr::normalize() {
  // combine parity classes: lift everything in a class to the maximal sigma
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<std::pair<int, MultiPoly>> cls;
    for (auto& [s, p] : t_)
      if (((s % 2) + 2) % 2 == parity) cls.push_back({s, p});
    if (cls.size() <= 1) continue;
    const MultiPoly curve = curveSquare(0);
    int smax = cls.back().first;
    MultiPoly sum;
    for (auto& [s, p] : cls) {
      MultiPoly lifted = p;
      for (int t = 0; t < (smax - s) / 2; ++t) lifted = lifted * curve;
      sum += lifted;
      t_.erase(s);
    }
    if (!sum.isZero()) t_[smax] = std::move(sum);
  }
  // minimal representative per class
  std::map<int, MultiPoly> out;
  for (auto& [s, p] : t_) {
    int sigma = s;
    MultiPoly numer = p;
    reducePair(0, sigma, numer);
    if (!numer.isZero()) {
      auto it = out.find(sigma);
      if (it == out.end()) out[sigma] = std::move(numer);
      else { it->second += numer; if (it->second.isZero()) out.erase(it); }
    }
  }
  t_ = std::move(out);
}

SpectralExpr& SpectralExpr::operator+=(const SpectralExpr& o) {
  for (const auto& [s, p] : o.t_) {
    auto it = t_.find(s);
    if (it == t_.end()) t_[s] = p;
    else { it->second += p; if (it->second.isZero()) t_.erase(it); }
  }
  normalize();
  return *this;
}

SpectralExpr SpectralExpr::operator-() const {
  SpectralExpr r = *this;
  for (auto& [s, p] : r.t_) p = -p;
  return r;
}

SpectralExpr operator*(const SpectralExpr& a, const SpectralExpr& b) {
  SpectralExpr r;
  for (const auto& [sa, pa] : a.t_)
    for (const auto& [sb, pb] : b.t_) {
      MultiPoly prod = pa * pb;
      auto it = r.t_.find(sa + sb);
      if (it == r.t_.end()) r.t_[sa + sb] = std::move(prod);
      else it->second += prod;
    }
  r.normalize();
  return r;
}

SpectralExpr SpectralExpr::scaled(const Rational& c) const {
  if (c.isZero()) return {};
  SpectralExpr r = *this;
  for (auto& [s, p] : r.t_) p = p.scaled(c);
  return r;
}

SpectralExpr SpectralExpr::timesPoly(const MultiPoly& p) const {
  SpectralExpr r;
  for (const auto& [s, q] : t_) r.t_[s] = q * p;
  r.normalize();
  return r;
}

SpectralExpr SpectralExpr::dividedByY() const {
  SpectralExpr r;
  for (const auto& [s, p] : t_) r.t_[s + 1] = p;
  r.normalize();
  return r;
}

SpectralExpr SpectralExpr::timesY() const {
  SpectralExpr r;
  for (const auto& [s, p] : t_) r.t_[s - 1] = p;
  r.normalize();
  return r;
}

SpectralExpr SpectralExpr::differentiated() const {
  SpectralExpr r;
  auto add = [&r](int s, MultiPoly p) {
    if (p.isZero()) return;
    auto it = r.t_.find(s);
    if (it == r.t_.end()) r.t_[s] = std::move(p);
    else it->second += p;
  };
  for (const auto& [s, p] : t_) {
    add(s, p.derivative(0));
    add(s + 2, (p * pX()).scaled(Rational(-s)));
  }
  r.normalize();
  return r;
}

SpectralExpr SpectralExpr::substituteH(const Rational& value) const {
  SpectralExpr r;
  for (const auto& [s, p] : t_) {
    MultiPoly q = p.substitute(kSlotH, value);
    if (!q.isZero()) r.t_[s] = std::move(q);
  }
  r.normalize();
  return r;
}

TruncatedSeries<MultiPoly> SpectralExpr::seriesAtInfinity(int order) const {
  // lowest possible exponent of xi = 1/x over all terms
  int lo = 0;
  for (const auto& [s, p] : t_) lo = std::min(lo, s - p.degree(0));
  TruncatedSeries<MultiPoly> out(lo, order);
  for (const auto& [s, p] : t_) {
    // y^{-sigma} = xi^{sigma} (1 - 4 g xi^2)^{-sigma/2}
    Rational expo = Rational(-s, 2);
    for (const auto& [m, c] : p.terms()) {
      int d = m.e[0];
      Monomial gh = m;
      gh.e[0] = 0;
      // c * x^d * sum_t genBinom(expo,t) (-4g)^t xi^{s+2t}
      for (int t = 0; s - d + 2 * t < order; ++t) {
        Rational bc = binomialGeneral(expo, t);
        if (bc.isZero()) continue;
        mpz_class four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, t);
        Rational coef = c * bc * Rational(four) * ((t % 2) ? Rational(-1) : Rational(1));
        Monomial mg = gh;
        int gExp = int(mg.e[kSlotG]) + t;
        if (gExp > 255) throw std::overflow_error("seriesAtInfinity: g exponent overflow");
        mg.e[kSlotG] = static_cast<uint8_t>(gExp);
        out.addCoeff(s - d + 2 * t, MultiPoly::fromTerms({{mg, coef}}));
      }
    }
  }
  return out;
}

std::string SpectralExpr::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")";
    if (s > 0) os << "/y^" << s;
    if (s < 0) os << "*y^" << -s;
  }
  return os.str();
}

std::string SpectralExpr::latex() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : t_) {
    if (!first) os << " + ";
    first = false;
    if (s > 0) os << "\\frac{" << p.str() << "}{y^{" << s << "}}";
    else if (s < 0) os << "\\left(" << p.str() << "\\right) y^{" << -s << "}";
    else os << "\\left(" << p.str() << "\\right)";
  }
  return os.str();
}

SpectralExpr spectralY() { return SpectralExpr::term(MultiPoly(1), -1); }
SpectralExpr spectralInvY(int sigma) { return SpectralExpr::term(MultiPoly(1), sigma); }

}  // namespace gbe
