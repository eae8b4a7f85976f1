#include "gbe/correlator.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace gbe {

namespace {

int npoles(int n) { return n * (n - 1) / 2; }

// Taylor coefficients (1/m!) D^m [P(u) y(u)^{-sigma}] of a one-variable
// spectral factor, re-expressed in variable slot `outSlot`.
std::vector<SpectralExpr> factorTaylor(const SpectralFactor& f, int srcSlot, int outSlot, int orders) {
  std::array<int, kNumVarSlots> toZero{};
  for (int s = 0; s < kNumVarSlots; ++s) toZero[s] = s;
  toZero[srcSlot] = 0;
  toZero[0] = srcSlot;  // swap so the factor lands on slot 0
  SpectralExpr e = SpectralExpr::term(f.numer.relabeled(toZero), f.sigma);
  std::array<int, kNumVarSlots> toOut{};
  for (int s = 0; s < kNumVarSlots; ++s) toOut[s] = s;
  toOut[0] = outSlot;
  toOut[outSlot] = 0;
  std::vector<SpectralExpr> out;
  out.reserve(orders + 1);
  Rational fact(1);
  for (int m = 0; m <= orders; ++m) {
    if (m > 0) {
      e = e.differentiated();
      fact *= Rational(m);
    }
    SpectralExpr relab;
    for (const auto& [s, p] : e.parts())
      relab += SpectralExpr::term(p.relabeled(toOut), s);
    out.push_back(relab.scaled(Rational(1) / fact));
  }
  return out;
}

}  // namespace

Correlator Correlator::fromSpectral(const SpectralExpr& e) {
  Correlator c(1);
  for (const auto& [s, p] : e.parts()) {
    CorrTerm t;
    t.fac.resize(1);
    t.fac[0] = {p, s};
    c.addTerm(std::move(t));
  }
  c.consolidate();
  return c;
}

SpectralExpr Correlator::toSpectral() const {
  if (n_ != 1) throw std::logic_error("toSpectral: correlator is not one-variable");
  SpectralExpr out;
  for (const auto& t : terms_) {
    MultiPoly numer = t.fac[0].numer.timesMonomial(
        t.coef, MultiPoly::monomial(Rational(1), {{kSlotG, t.gExp}, {kSlotH, t.hExp}}).terms()[0].first);
    out += SpectralExpr::term(std::move(numer), t.fac[0].sigma);
  }
  return out;
}

void Correlator::normalizeTerm(CorrTerm& t) const {
  if (t.coef.isZero()) { t.fac.clear(); return; }
  t.fac.resize(n_);
  t.poles.resize(npoles(n_), 0);
  for (int v = 0; v < n_; ++v) {
    auto& f = t.fac[v];
    if (f.numer.isZero()) { t.coef = Rational(0); t.fac.clear(); return; }
    SpectralExpr::reducePair(v, f.sigma, f.numer);
    // pull out rational content and the g/h monomial gcd
    Rational c = f.numer.content();
    if (!c.isOne()) {
      f.numer = f.numer.scaled(Rational(1) / c);
      t.coef *= c;
    }
    Monomial mg = f.numer.monomialGcd();
    Monomial gh;
    gh.e[kSlotG] = mg.e[kSlotG];
    gh.e[kSlotH] = mg.e[kSlotH];
    if (gh.e[kSlotG] || gh.e[kSlotH]) {
      f.numer = f.numer.divByMonomial(gh);
      t.gExp += gh.e[kSlotG];
      t.hExp += gh.e[kSlotH];
    }
  }
  for (auto k : t.poles)
    if (int(k) > kPoleCap) throw PoleCapExceeded();
}

int Correlator::cmpTerm(const CorrTerm& a, const CorrTerm& b) {
  if (a.poles != b.poles) return a.poles < b.poles ? -1 : 1;
  for (size_t v = 0; v < a.fac.size(); ++v) {
    if (a.fac[v].sigma != b.fac[v].sigma) return a.fac[v].sigma < b.fac[v].sigma ? -1 : 1;
  }
  if (a.gExp != b.gExp) return a.gExp < b.gExp ? -1 : 1;
  if (a.hExp != b.hExp) return a.hExp < b.hExp ? -1 : 1;
  for (size_t v = 0; v < a.fac.size(); ++v) {
    int c = a.fac[v].numer.cmp(b.fac[v].numer);
    if (c != 0) return c;
  }
  return 0;
}

void Correlator::addTerm(CorrTerm t) {
  normalizeTerm(t);
  if (t.coef.isZero()) return;
  terms_.push_back(std::move(t));
}

void Correlator::consolidate() {
  std::sort(terms_.begin(), terms_.end(),
            [](const CorrTerm& a, const CorrTerm& b) { return cmpTerm(a, b) < 0; });
  std::vector<CorrTerm> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && cmpTerm(out.back(), t) == 0) {
      out.back().coef += t.coef;
      if (out.back().coef.isZero()) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Correlator& Correlator::operator+=(const Correlator& o) {
  if (o.n_ != n_) throw std::logic_error("correlator add: variable count mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  consolidate();
  return *this;
}

Correlator Correlator::scaled(const Rational& c) const {
  Correlator r(n_);
  if (c.isZero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Correlator operator*(const Correlator& a, const Correlator& b) {
  if (a.n_ != b.n_) throw std::logic_error("correlator mul: variable count mismatch");
  Correlator r(a.n_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      CorrTerm t;
      t.coef = ta.coef * tb.coef;
      t.gExp = ta.gExp + tb.gExp;
      t.hExp = ta.hExp + tb.hExp;
      t.fac.resize(a.n_);
      for (int v = 0; v < a.n_; ++v) {
        t.fac[v].numer = ta.fac[v].numer * tb.fac[v].numer;
        t.fac[v].sigma = ta.fac[v].sigma + tb.fac[v].sigma;
      }
      t.poles.resize(npoles(a.n_), 0);
      for (int idx = 0; idx < npoles(a.n_); ++idx) {
        int k = int(ta.poles[idx]) + int(tb.poles[idx]);
        if (k > kPoleCap) throw PoleCapExceeded();
        t.poles[idx] = static_cast<uint8_t>(k);
      }
      r.addTerm(std::move(t));
    }
  }
  r.consolidate();
  return r;
}

Correlator Correlator::differentiated(int v) const {
  Correlator r(n_);
  for (const auto& t : terms_) {
    {  // numerator factor: P' y^{-s} - s x P y^{-s-2}
      CorrTerm t1 = t;
      t1.fac[v].numer = t.fac[v].numer.derivative(v);
      r.addTerm(std::move(t1));
      CorrTerm t2 = t;
      t2.fac[v].numer = t.fac[v].numer * MultiPoly::variable(v);
      t2.fac[v].sigma += 2;
      t2.coef *= Rational(-t.fac[v].sigma);
      r.addTerm(std::move(t2));
    }
    for (int other = 0; other < n_; ++other) {
      if (other == v) continue;
      int i = std::min(v, other), j = std::max(v, other);
      int idx = CorrTerm::poleIndex(i, j);
      int k = t.poles[idx];
      if (k == 0) continue;
      CorrTerm tp = t;
      if (k + 1 > kPoleCap) throw PoleCapExceeded();
      tp.poles[idx] = static_cast<uint8_t>(k + 1);
      tp.coef *= Rational(v == i ? -k : k);
      r.addTerm(std::move(tp));
    }
  }
  r.consolidate();
  return r;
}

Correlator Correlator::timesGH(int dg, int dh) const {
  Correlator r = *this;
  for (auto& t : r.terms_) { t.gExp += dg; t.hExp += dh; }
  return r;
}

Correlator Correlator::timesPole(int i, int j) const {
  Correlator r = *this;
  int idx = CorrTerm::poleIndex(i, j);
  for (auto& t : r.terms_) {
    if (t.poles[idx] + 1 > kPoleCap) throw PoleCapExceeded();
    t.poles[idx] = static_cast<uint8_t>(t.poles[idx] + 1);
  }
  r.consolidate();
  return r;
}

Correlator Correlator::dividedByY(int v) const {
  Correlator r(n_);
  for (const auto& t : terms_) {
    CorrTerm t2 = t;
    t2.fac[v].sigma += 1;
    r.addTerm(std::move(t2));
  }
  r.consolidate();
  return r;
}

Correlator Correlator::relabeled(int newN, const std::vector<int>& map) const {
  if (int(map.size()) != n_) throw std::logic_error("relabeled: map size mismatch");
  std::array<int, kNumVarSlots> slotMap{};
  for (int s = 0; s < kNumVarSlots; ++s) slotMap[s] = s;
  for (int v = 0; v < n_; ++v) slotMap[v] = map[v];
  Correlator r(newN);
  for (const auto& t : terms_) {
    CorrTerm nt;
    nt.coef = t.coef;
    nt.gExp = t.gExp;
    nt.hExp = t.hExp;
    nt.fac.resize(newN);
    for (int v = 0; v < n_; ++v) {
      nt.fac[map[v]].numer = t.fac[v].numer.relabeled(slotMap);
      nt.fac[map[v]].sigma = t.fac[v].sigma;
    }
    nt.poles.resize(npoles(newN), 0);
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        int k = t.poles[CorrTerm::poleIndex(i, j)];
        if (k == 0) continue;
        int a = map[i], b = map[j];
        if (a > b) {
          std::swap(a, b);
          if (k % 2) nt.coef = -nt.coef;  // (x_i-x_j)^{-k} = (-1)^k (x_j-x_i)^{-k}
        }
        nt.poles[CorrTerm::poleIndex(a, b)] = static_cast<uint8_t>(k);
      }
    r.terms_.push_back(std::move(nt));
  }
  return r;
}

Correlator Correlator::mergedDiagonal(int i, int j, int extraOrder) const {
  if (!(0 <= i && i < j && j < n_)) throw std::logic_error("mergedDiagonal: need 0 <= i < j < n");
  int maxK = 0;
  for (const auto& t : terms_) maxK = std::max(maxK, int(t.poles[CorrTerm::poleIndex(i, j)]));
  if (extraOrder < maxK)
    throw std::logic_error("mergedDiagonal: extraOrder below the largest diagonal pole order");

  // renumbering of the surviving variables (entry j is never used)
  std::vector<int> keepMap(n_);
  for (int v = 0; v < n_; ++v) keepMap[v] = v < j ? v : v - 1;

  const int E = extraOrder;
  Correlator out(n_ - 1);
  // negative tau-orders, accumulated across all terms: order -d at index d-1
  std::vector<std::vector<CorrTerm>> residue(E);

  for (const auto& t : terms_) {
    const int K = t.poles[CorrTerm::poleIndex(i, j)];
    // base partial term on the merged space: everything except fac[j] and
    // the poles that involve j
    CorrTerm base;
    base.coef = t.coef * Rational((K % 2) ? -1 : 1);  // (x_i-x_j)^{-K} = (-1)^K tau^{-K}
    base.gExp = t.gExp;
    base.hExp = t.hExp;
    base.fac.resize(n_ - 1);
    base.poles.assign(npoles(n_ - 1), 0);
    for (int v = 0; v < n_; ++v) {
      if (v == j) continue;
      base.fac[keepMap[v]].numer = t.fac[v].numer.relabeled([&] {
        std::array<int, kNumVarSlots> m{};
        for (int s = 0; s < kNumVarSlots; ++s) m[s] = s;
        m[v] = keepMap[v];
        if (keepMap[v] != v) m[keepMap[v]] = v;
        return m;
      }());
      base.fac[keepMap[v]].sigma = t.fac[v].sigma;
    }
    for (int jj = 1; jj < n_; ++jj)
      for (int ii = 0; ii < jj; ++ii) {
        if (ii == j || jj == j) continue;
        int k = t.poles[CorrTerm::poleIndex(ii, jj)];
        if (k) base.poles[CorrTerm::poleIndex(keepMap[ii], keepMap[jj])] = static_cast<uint8_t>(k);
      }

    // tau-series of the regular part, coefficients as partial term lists
    std::vector<std::vector<CorrTerm>> series(E + 1);
    series[0].push_back(std::move(base));

    auto convolveSpectral = [&](const std::vector<SpectralExpr>& coeffs) {
      std::vector<std::vector<CorrTerm>> next(E + 1);
      for (int m = 0; m <= E; ++m) {
        for (const auto& pt : series[m]) {
          for (int d = 0; m + d <= E; ++d) {
            for (const auto& [sig, numer] : coeffs[d].parts()) {
              CorrTerm nt = pt;
              int vi = keepMap[i];
              nt.fac[vi].numer = nt.fac[vi].numer * numer;
              nt.fac[vi].sigma += sig;
              next[m + d].push_back(std::move(nt));
            }
          }
        }
      }
      series = std::move(next);
    };

    // fold in fac[j], Taylor-expanded about x_i
    convolveSpectral(factorTaylor(t.fac[j], j, keepMap[i], E));

    // fold in the poles that involve j (other than the (i,j) pole itself)
    for (int other = 0; other < n_; ++other) {
      if (other == j || other == i) continue;
      int a = std::min(other, j), b = std::max(other, j);
      int k = t.poles[CorrTerm::poleIndex(a, b)];
      if (k == 0) continue;
      // (x_a - x_j)^{-k} (a<j) expands as sum_m C(k-1+m,m) tau^m u^{-k-m},
      // (x_j - x_b)^{-k} (j<b) as sum_m C(k-1+m,m) (-tau)^m u^{-k-m},
      // with u the oriented difference between `other` and x_i.
      bool otherFirst = other < j;  // pole was (x_other - x_j)
      int oi = keepMap[other], ni = keepMap[i];
      int pi = std::min(oi, ni), pj = std::max(oi, ni);
      std::vector<std::vector<CorrTerm>> next(E + 1);
      for (int m = 0; m <= E; ++m) {
        for (const auto& pt : series[m]) {
          for (int d = 0; m + d <= E; ++d) {
            CorrTerm nt = pt;
            Rational c = binomial(k - 1 + d, d);
            if (!otherFirst && (d % 2)) c = -c;
            // orient u = x_other - x_i (if otherFirst) or x_i - x_other
            int kk = k + d;
            bool firstIsOther = otherFirst;
            if ((firstIsOther && oi > ni) || (!firstIsOther && ni > oi)) {
              if (kk % 2) c = -c;
            }
            int newK = int(nt.poles[CorrTerm::poleIndex(pi, pj)]) + kk;
            if (newK > kPoleCap) throw PoleCapExceeded();
            nt.poles[CorrTerm::poleIndex(pi, pj)] = static_cast<uint8_t>(newK);
            nt.coef *= c;
            next[m + d].push_back(std::move(nt));
          }
        }
      }
      series = std::move(next);
    }

    // tau^{m-K}: m == K contributes the limit, m < K must cancel
    for (int m = 0; m <= E; ++m) {
      if (m < K) {
        for (auto& pt : series[m]) residue[K - m - 1].push_back(std::move(pt));
      } else if (m == K) {
        for (auto& pt : series[m]) out.addTerm(std::move(pt));
      }
    }
  }

  for (int d = 0; d < E; ++d) {
    if (residue[d].empty()) continue;
    Correlator res(n_ - 1);
    for (auto& pt : residue[d]) res.addTerm(std::move(pt));
    res.consolidate();
    if (!res.isZeroExpanded()) {
#ifdef GBE_MERGE_DEBUG
      fprintf(stderr, "residue at order -%d:\n", d + 1);
      for (const auto& t : res.terms()) {
        fprintf(stderr, "  coef=%s g^%d h^%d", t.coef.str().c_str(), t.gExp, t.hExp);
        for (size_t v = 0; v < t.fac.size(); ++v)
          fprintf(stderr, " fac%zu=(%s,s%d)", v, t.fac[v].numer.str().c_str(), t.fac[v].sigma);
        fprintf(stderr, " poles:");
        for (auto pk : t.poles) fprintf(stderr, " %d", int(pk));
        fprintf(stderr, "\n");
      }
#endif
      throw DiagonalPoleResidue("nonzero coefficient at (x_j - x_i)^{-" + std::to_string(d + 1) + "}");
    }
  }

  out.consolidate();
  return out;
}

bool Correlator::isZeroExpanded() const {
  if (terms_.empty()) return true;
  // group by parity signature of the sigma vector
  std::map<std::vector<int>, std::vector<const CorrTerm*>> groups;
  for (const auto& t : terms_) {
    std::vector<int> sig(n_);
    for (int v = 0; v < n_; ++v) sig[v] = ((t.fac[v].sigma % 2) + 2) % 2;
    groups[sig].push_back(&t);
  }
  for (const auto& [sig, ts] : groups) {
    std::vector<int> smax(n_, INT32_MIN);
    std::vector<int> kmax(npoles(n_), 0);
    for (const auto* t : ts) {
      for (int v = 0; v < n_; ++v) smax[v] = std::max(smax[v], t->fac[v].sigma);
      for (int idx = 0; idx < npoles(n_); ++idx)
        kmax[idx] = std::max(kmax[idx], int(t->poles[idx]));
    }
    MultiPoly joint;
    for (const auto* t : ts) {
      MultiPoly part = MultiPoly::monomial(t->coef, {{kSlotG, t->gExp}, {kSlotH, t->hExp}});
      for (int v = 0; v < n_; ++v) {
        part = part * t->fac[v].numer;
        for (int u = 0; u < (smax[v] - t->fac[v].sigma) / 2; ++u) part = part * curveSquare(v);
      }
      for (int jj = 1; jj < n_; ++jj)
        for (int ii = 0; ii < jj; ++ii) {
          int d = kmax[CorrTerm::poleIndex(ii, jj)] - int(t->poles[CorrTerm::poleIndex(ii, jj)]);
          MultiPoly diff = MultiPoly::variable(ii) - MultiPoly::variable(jj);
          for (int u = 0; u < d; ++u) part = part * diff;
        }
      joint += part;
    }
    if (!joint.isZero()) return false;
  }
  return true;
}

bool Correlator::equalsExpanded(const Correlator& o) const {
  Correlator d = *this;
  d += o.scaled(Rational(-1));
  return d.isZeroExpanded();
}

bool Correlator::symmetricIn(int a, int b) const {
  std::vector<int> map(n_);
  for (int v = 0; v < n_; ++v) map[v] = v;
  std::swap(map[a], map[b]);
  Correlator swapped = relabeled(n_, map);
  swapped.consolidate();
  return equalsExpanded(swapped);
}

}  // namespace gbe
