#pragma once

#include <vector>

#include "gbe/density.hpp"
#include "gbe/moments.hpp"
#include "gbe/spectral.hpp"

namespace gbe {

// Reference closed forms used by the verification suites: the first seven
// resolvent coefficients, the smoothed densities through order six, the
// even moments through m_20, and the classical-ensemble moment lists.

const std::vector<SpectralExpr>& goldenResolvent();        // W_1^0 .. W_1^6
const std::vector<SmoothedDensity>& goldenDensities();     // rho_0 .. rho_6
const std::vector<MomentPoly>& goldenMoments();            // m_0 .. m_20 (p = 0..10)
const std::vector<MultiPoly>& goldenMomentsGUE();          // m_0 .. m_12 in N
const std::vector<MultiPoly>& goldenMomentsGOE();
const std::vector<MultiPoly>& goldenMomentsGSE();

}  // namespace gbe
