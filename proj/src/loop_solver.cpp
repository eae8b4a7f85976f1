#include "gbe/loop_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbe {

namespace {

SpectralExpr baseResolvent() {
  // W_1^0 = (x - y)/2, the root of W^2 - xW + g = 0 decaying at infinity
  return SpectralExpr::term(pX().scaled(Rational(1, 2)), 0) +
         SpectralExpr::term(pConst(-1, 2), -1);
}

}  // namespace

const Correlator& HierarchyStore::dep(int n, int l, int fromN, int fromL) {
  deps_[{fromN, fromL}].push_back({n, l});
  return get(n, l);
}

const Correlator& HierarchyStore::get(int n, int l) {
  if (n < 1 || l < 0) return empty_;
  auto key = std::make_pair(n, l);
  auto it = store_.find(key);
  if (it != store_.end()) return it->second;
  if (!inProgress_.insert(key).second)
    throw std::logic_error("hierarchy dependency cycle at (" + std::to_string(n) + "," +
                           std::to_string(l) + ")");
  Correlator solved = solve(n, l);
  inProgress_.erase(key);
  return store_.emplace(key, std::move(solved)).first->second;
}

Correlator HierarchyStore::solve(int n, int l) {
  if (n == 1 && l == 0) return Correlator::fromSpectral(baseResolvent());
  Correlator known = assembleKnown(n, l);
  return known.dividedByY(0);
}

Correlator HierarchyStore::assembleKnown(int n, int l) {
  Correlator known(n);

  // (a) subset convolution sum over J (subsets of the spectator variables
  // {1..n-1}) and depth splittings l1 + l2 = l, excluding the two slots where
  // the unknown W_n^l itself appears against W_1^0
  int nspec = n - 1;
  for (int mask = 0; mask < (1 << nspec); ++mask) {
    std::vector<int> J, comp;
    for (int b = 0; b < nspec; ++b) ((mask >> b) & 1 ? J : comp).push_back(b + 1);
    int n1 = int(J.size()) + 1, n2 = n - int(J.size());
    for (int l1 = 0; l1 <= l; ++l1) {
      int l2 = l - l1;
      if (n1 == n && l1 == l) continue;  // unknown * W_1^0
      if (n2 == n && l2 == l) continue;  // W_1^0 * unknown
      const Correlator& A = dep(n1, l1, n, l);
      if (A.isEmpty()) continue;
      const Correlator& B = dep(n2, l2, n, l);
      if (B.isEmpty()) continue;
      std::vector<int> mapA(n1), mapB(n2);
      mapA[0] = 0;
      for (size_t t = 0; t < J.size(); ++t) mapA[t + 1] = J[t];
      mapB[0] = 0;
      for (size_t t = 0; t < comp.size(); ++t) mapB[t + 1] = comp[t];
      known += A.relabeled(n, mapA) * B.relabeled(n, mapB);
    }
  }

  // (b) diagonal merge of the (n+1)-point correlator two depths up
  if (l >= 2) {
    const Correlator& M = dep(n + 1, l - 2, n, l);
    if (!M.isEmpty()) {
      int maxK = 0;
      for (const auto& t : M.terms()) maxK = std::max(maxK, int(t.poles[CorrTerm::poleIndex(0, 1)]));
      int extra = mergeExtraOrder >= 0 ? std::max(mergeExtraOrder, maxK) : maxK;
      known += M.mergedDiagonal(0, 1, extra);
    }
  }

  // (c) h d/dx of the previous depth (the kappa-1 term of the loop equation
  // carries one factor of h after the rescaling)
  if (l >= 1) {
    const Correlator& D = dep(n, l - 1, n, l);
    if (!D.isEmpty()) known += D.differentiated(0).timesGH(0, 1);
  }

  // (d) difference-quotient terms in each spectator variable
  if (n >= 2) {
    const Correlator& Wm = dep(n - 1, l, n, l);
    if (!Wm.isEmpty()) {
      for (int iv = 1; iv < n; ++iv) {
        std::vector<int> map1(n - 1), map2(n - 1);
        map1[0] = 0;
        int t = 1;
        for (int v = 1; v < n; ++v)
          if (v != iv) map1[t++] = v;
        for (int v = 0; v < n - 1; ++v) map2[v] = v + 1;
        Correlator diff = Wm.relabeled(n, map1) + Wm.relabeled(n, map2).scaled(Rational(-1));
        known += diff.timesPole(0, iv).differentiated(iv);
      }
    }
  }

  return known;
}

std::vector<SpectralExpr> HierarchyStore::resolventExpansion(int lMax) {
  std::vector<SpectralExpr> out;
  out.reserve(lMax + 1);
  for (int l = 0; l <= lMax; ++l) out.push_back(resolventCoeff(l));
  return out;
}

bool HierarchyStore::residualIsZero(int n, int l) {
  const Correlator& W = get(n, l);
  Correlator resid = assembleKnown(n, l);
  // + (2 W_1^0 - x) * W_n^l
  SpectralExpr front = baseResolvent().scaled(Rational(2)) - SpectralExpr::fromPoly(pX());
  std::vector<int> map0{0};
  resid += Correlator::fromSpectral(front).relabeled(n, map0) * W;
  if (n == 1 && l == 0) {
    Correlator gterm(1);
    CorrTerm t;
    t.fac.resize(1);
    t.gExp = 1;
    gterm.addTerm(std::move(t));
    resid += gterm;
  }
  return resid.isZeroExpanded();
}

bool HierarchyStore::divisionWasExact(int n, int l) {
  // multiplying the solution back by y must reproduce the known slice
  const Correlator& W = get(n, l);
  if (n == 1 && l == 0) return true;
  Correlator known = assembleKnown(n, l);
  Correlator back(n);
  for (const auto& t : W.terms()) {
    CorrTerm t2 = t;
    t2.fac[0].sigma -= 1;
    back.addTerm(std::move(t2));
  }
  back.consolidate();
  return back.equalsExpanded(known);
}

std::vector<std::pair<int, int>> HierarchyStore::solvedKeys() const {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(store_.size());
  for (const auto& [k, v] : store_) keys.push_back(k);
  return keys;
}

StructureReport canonicalCheck(const SpectralExpr& w, int l) {
  StructureReport rep;
  if (l == 0) {
    // base term (x-y)/2 by convention
    if (!(w == SpectralExpr::term(pX().scaled(Rational(1, 2)), 0) +
              SpectralExpr::term(pConst(-1, 2), -1)))
      rep.fail("W_1^0 is not (x-y)/2");
    return rep;
  }
  for (const auto& [sigma, numer] : w.parts()) {
    if (sigma != 3 * l - 2 && sigma != 3 * l - 1)
      rep.fail("unexpected y-exponent " + std::to_string(sigma));
    // split by h-power
    std::map<int, MultiPoly> blocks;
    for (const auto& [m, c] : numer.terms()) {
      Monomial mm = m;
      int hp = mm.e[kSlotH];
      mm.e[kSlotH] = 0;
      blocks[hp] += MultiPoly::fromTerms({{mm, c}});
    }
    for (const auto& [hp, block] : blocks) {
      if (hp > l || ((l - hp) % 2) != 0)
        rep.fail("h-power " + std::to_string(hp) + " incompatible with depth " + std::to_string(l));
      int dx = block.degree(0);
      int expect;
      if (l % 2 == 0 && hp == 0) {
        if (sigma != 3 * l - 1) {
          rep.fail("pure term of even depth must sit over y^(3l-1)");
          continue;
        }
        expect = l - 2;
      } else {
        expect = (sigma == 3 * l - 2) ? l - 1 : l;
      }
      if (dx != expect)
        rep.fail("x-degree " + std::to_string(dx) + " != " + std::to_string(expect) +
                 " at y-exponent " + std::to_string(sigma) + ", h-power " + std::to_string(hp));
      // parity: numerators are even or odd according to the x-degree parity
      for (const auto& [m, c] : block.terms())
        if ((int(m.e[0]) - dx) % 2 != 0)
          rep.fail("numerator at y^" + std::to_string(sigma) + ", h^" + std::to_string(hp) +
                   " mixes x-parities");
    }
    // the h-power set must be exactly {l, l-2, ...} across the two exponents
  }
  std::set<int> hs;
  for (const auto& [sigma, numer] : w.parts())
    for (const auto& [m, c] : numer.terms()) hs.insert(m.e[kSlotH]);
  for (int hp = l; hp >= (l % 2); hp -= 2)
    if (!hs.count(hp)) rep.fail("missing h-power " + std::to_string(hp));
  return rep;
}

}  // namespace gbe
