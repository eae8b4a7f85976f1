#pragma once

#include <string>
#include <vector>

#include "gbe/loop_solver.hpp"

namespace gbe {

struct CheckResult {
  std::string id;
  std::string anchor;  // which known result the check pins down
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string id, std::string anchor, bool ok, std::string detail = "");
};

// The nine acceptance suites. All resolvent-based suites share one store so
// the hierarchy is solved once per process.
VerificationReport verifyGoldenResolvent(HierarchyStore& store);
VerificationReport verifyGoldenMoments(HierarchyStore& store);      // p <= 10
VerificationReport verifyGoldenDensities(HierarchyStore& store);    // l <= 6
VerificationReport verifyMomentIdentity(HierarchyStore& store);
VerificationReport verifyOdeResiduals(HierarchyStore& store);
VerificationReport verifyClassical(HierarchyStore& store);          // p <= 12
VerificationReport verifyStructureDuality(HierarchyStore& store);   // p <= 10
VerificationReport verifyHadamard();
VerificationReport verifyMonteCarlo(long samples, uint64_t seed, int threads);

// name in {resolvent, moments, densities, identity, odes, classical,
// structure, hadamard, mc, golden, all}
std::vector<VerificationReport> runSuites(const std::string& name, HierarchyStore& store,
                                          long mcSamples, uint64_t mcSeed, int threads);

}  // namespace gbe
