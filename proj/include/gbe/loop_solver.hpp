#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gbe/correlator.hpp"

namespace gbe {

struct StructureReport {
  bool pass = true;
  std::vector<std::string> violations;
  void fail(std::string v) {
    pass = false;
    violations.push_back(std::move(v));
  }
};

// Demand-driven solver for the Gaussian loop-equation hierarchy. Entry (n,l)
// is the N-independent coefficient W_n^l of the connected n-point correlator
// at depth l in the 1/N expansion; the quadratic base W_1^0 = (x - y)/2 seeds
// the recursion and every other entry is (known part)/y, where the known part
// collects the subset-convolution slice, the (n+1)-point diagonal merge, the
// h-weighted x-derivative of the previous depth, and the difference-quotient
// terms in the spectator variables.
class HierarchyStore {
 public:
  // W_n^l; returns an empty correlator for n < 1 or l < 0.
  const Correlator& get(int n, int l);

  SpectralExpr resolventCoeff(int l) { return get(1, l).toSpectral(); }
  std::vector<SpectralExpr> resolventExpansion(int lMax);

  // Substitutes the stored (n,l) slice back into its loop equation and tests
  // the residual for exact vanishing.
  bool residualIsZero(int n, int l);

  // Division by y must be exact in the ring: the even/odd parts of the known
  // slice recombine so that no y-parity obstruction remains. Verified by
  // round-tripping the division.
  bool divisionWasExact(int n, int l);

  // Solved entries and the dependency edges discovered while solving.
  const std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>& dependencies() const {
    return deps_;
  }
  std::vector<std::pair<int, int>> solvedKeys() const;

  // Test hook: when >= 0, every diagonal merge uses this Taylor order instead
  // of the per-merge minimum.
  int mergeExtraOrder = -1;

 private:
  std::map<std::pair<int, int>, Correlator> store_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> deps_;
  Correlator empty_{1};
  std::set<std::pair<int, int>> inProgress_;

  Correlator solve(int n, int l);
  Correlator assembleKnown(int n, int l);
  const Correlator& dep(int n, int l, int fromN, int fromL);
};

// Structural report against the two-denominator form of W_1^l: h-powers
// {l, l-2, ...}, y-exponents {3l-2, 3l-1}, the numerator x-degree table and
// the parity of each numerator.
StructureReport canonicalCheck(const SpectralExpr& w, int l);

}  // namespace gbe
