#include "gbe/json_io.hpp"

#include <sstream>

namespace gbe {

namespace {

json ghPolyToJson(const MultiPoly& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) {
    for (int s = 1; s < kNumVarSlots; ++s)
      if (m.e[s]) throw std::logic_error("serialization: expected a one-variable numerator");
    arr.push_back({int(m.e[0]), int(m.e[kSlotG]), int(m.e[kSlotH]), c.str()});
  }
  return arr;
}

MultiPoly ghPolyFromJson(const json& arr) {
  std::vector<MultiPoly::Term> ts;
  for (const auto& t : arr) {
    Monomial m;
    m.e[0] = uint8_t(t[0].get<int>());
    m.e[kSlotG] = uint8_t(t[1].get<int>());
    m.e[kSlotH] = uint8_t(t[2].get<int>());
    ts.push_back({m, Rational::parse(t[3].get<std::string>())});
  }
  return MultiPoly::fromTerms(std::move(ts));
}

}  // namespace

json spectralToJson(const SpectralExpr& e) {
  json out = json::array();
  for (const auto& [sigma, numer] : e.parts())
    out.push_back({{"sigma", sigma}, {"coeffs", ghPolyToJson(numer)}});
  return out;
}

SpectralExpr spectralFromJson(const json& j) {
  SpectralExpr e;
  for (const auto& part : j)
    e += SpectralExpr::term(ghPolyFromJson(part.at("coeffs")), part.at("sigma").get<int>());
  return e;
}

std::string spectralToLatex(const SpectralExpr& e) { return e.latex(); }

json momentToJson(const MomentPoly& m) {
  json coeffs = json::array();
  for (const auto& [key, c] : m.coef) coeffs.push_back({key.first, key.second, c.str()});
  return {{"p", m.p}, {"coeffs", coeffs}};
}

MomentPoly momentFromJson(const json& j) {
  MomentPoly m;
  m.p = j.at("p").get<int>();
  for (const auto& t : j.at("coeffs"))
    m.coef[{t[0].get<int>(), t[1].get<int>()}] = Rational::parse(t[2].get<std::string>());
  return m;
}

std::string momentToLatex(const MomentPoly& m) {
  std::ostringstream os;
  os << "m_{" << 2 * m.p << "} = ";
  bool firstRow = true;
  for (int a = m.degreeN(); a >= 1; --a) {
    auto row = m.nRow(a);
    if (row.empty()) continue;
    if (!firstRow) os << "+";
    firstRow = false;
    bool paren = row.size() > 1;
    if (paren) os << "N^{" << a << "}\\left(";
    bool first = true;
    for (const auto& [dk, c] : row) {
      std::string cs = c.str();
      if (!first && c.sign() > 0) os << "+";
      first = false;
      os << cs;
      if (dk == 1) os << "\\kappa^{-1}";
      else if (dk > 1) os << "\\kappa^{-" << dk << "}";
    }
    if (paren) os << "\\right)";
    else os << (row.begin()->second == Rational(1) ? "" : " ") << "N^{" << a << "}";
  }
  return os.str();
}

json densityToJson(const SmoothedDensity& d) {
  json bulk = json::array();
  for (const auto& b : d.bulk) bulk.push_back({{"e", b.e}, {"numer", ghPolyToJson(b.numer)}});
  json delta = json::array();
  for (const auto& t : d.delta) {
    json coef = json::array();
    for (const auto& [key, c] : t.coef.parts())
      coef.push_back({key.first, key.second, c.str()});
    delta.push_back({{"j", t.j}, {"coef", coef}});
  }
  return {{"l", d.l}, {"bulk", bulk}, {"delta", delta}};
}

SmoothedDensity densityFromJson(const json& j) {
  SmoothedDensity d;
  d.l = j.at("l").get<int>();
  for (const auto& b : j.at("bulk"))
    d.bulk.push_back({ghPolyFromJson(b.at("numer")), b.at("e").get<int>()});
  for (const auto& t : j.at("delta")) {
    EdgeCoeff c;
    for (const auto& e : t.at("coef"))
      c += EdgeCoeff::term(Rational::parse(e[2].get<std::string>()), e[0].get<int>(),
                           e[1].get<int>());
    d.delta.push_back({t.at("j").get<int>(), c});
  }
  return d;
}

json dagToJson(const HierarchyStore& store) {
  json nodes = json::array();
  for (const auto& [key, edges] : store.dependencies()) {
    json deps = json::array();
    for (const auto& [n, l] : edges) deps.push_back({n, l});
    nodes.push_back({{"n", key.first}, {"l", key.second}, {"uses", deps}});
  }
  return nodes;
}

}  // namespace gbe
