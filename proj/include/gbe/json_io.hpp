#pragma once

#include <json.hpp>

#include "gbe/density.hpp"
#include "gbe/loop_solver.hpp"
#include "gbe/moments.hpp"

namespace gbe {

using nlohmann::json;

// Canonical form: [{"sigma": s, "coeffs": [[x, g, h, "num/den"], ...]}, ...]
json spectralToJson(const SpectralExpr& e);
SpectralExpr spectralFromJson(const json& j);
std::string spectralToLatex(const SpectralExpr& e);

// {"p": p, "coeffs": [[degN, degKinv, "num/den"], ...]}
json momentToJson(const MomentPoly& m);
MomentPoly momentFromJson(const json& j);
std::string momentToLatex(const MomentPoly& m);

// {"l": l, "bulk": [{"e": e, "numer": [[x,g,h,"num/den"],...]}, ...],
//  "delta": [{"j": j, "coef": [[hExp, halfG, "num/den"], ...]}, ...]}
json densityToJson(const SmoothedDensity& d);
SmoothedDensity densityFromJson(const json& j);

json dagToJson(const HierarchyStore& store);

}  // namespace gbe
