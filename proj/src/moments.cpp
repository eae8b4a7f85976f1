#include "gbe/moments.hpp"

#include <complex>
#include <sstream>

namespace gbe {

Rational MomentPoly::at(int degN, int degK) const {
  auto it = coef.find({degN, degK});
  return it == coef.end() ? Rational(0) : it->second;
}

std::map<int, Rational> MomentPoly::nRow(int degN) const {
  std::map<int, Rational> row;
  for (const auto& [key, c] : coef)
    if (key.first == degN) row[key.second] = c;
  return row;
}

int MomentPoly::degreeN() const {
  int d = 0;
  for (const auto& [key, c] : coef) d = std::max(d, key.first);
  return d;
}

Rational MomentPoly::eval(const Rational& N, const Rational& kinv) const {
  Rational out(0);
  for (const auto& [key, c] : coef) {
    Rational v = c;
    for (int t = 0; t < key.first; ++t) v *= N;
    for (int t = 0; t < key.second; ++t) v *= kinv;
    out += v;
  }
  return out;
}

std::string MomentPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = coef.rbegin(); it != coef.rend(); ++it) {
    const auto& [key, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*N^" << key.first << "*k^" << key.second;
  }
  return first ? "0" : os.str();
}

MomentPoly momentPolynomial(int p, const std::vector<SpectralExpr>& resolvent) {
  if (int(resolvent.size()) <= p)
    throw InsufficientOrder("moment p=" + std::to_string(p) + " needs resolvent depth >= p");
  MomentPoly m;
  m.p = p;
  for (int l = 0; l <= p; ++l) {
    auto series = resolvent[l].seriesAtInfinity(2 * p + 2);
    MultiPoly c = series.coeff(2 * p + 1);
    for (const auto& [mono, r] : c.terms()) {
      int a = mono.e[kSlotG];
      int j = mono.e[kSlotH];
      if (a != p + 1 - l)
        throw std::logic_error("moment assembly: g power did not cancel");
      if (j > l || ((l - j) % 2) != 0)
        throw std::logic_error("moment assembly: stray half power of kappa");
      int base = (l - j) / 2;
      for (int t = 0; t <= j; ++t) {
        Rational add = r * binomial(j, t) * ((t % 2) ? Rational(-1) : Rational(1));
        auto key = std::make_pair(p + 1 - l, base + t);
        auto it = m.coef.find(key);
        if (it == m.coef.end()) m.coef[key] = add;
        else {
          it->second += add;
          if (it->second.isZero()) m.coef.erase(it);
        }
      }
    }
  }
  return m;
}

bool checkDuality(const MomentPoly& m) {
  // transformed coefficient of N^a k^{l+1-a-b} is (-1)^{a+l+1} times coef(a,b)
  std::map<std::pair<int, int>, Rational> tr;
  int l = m.p;
  for (const auto& [key, c] : m.coef) {
    auto [a, b] = key;
    int kk = l + 1 - a - b;
    if (kk < 0) return false;
    Rational v = ((a + l + 1) % 2) ? -c : c;
    tr[{a, kk}] += v;
    if (tr[{a, kk}].isZero()) tr.erase({a, kk});
  }
  return tr == m.coef;
}

StructureReport checkStructure(const MomentPoly& m) {
  StructureReport rep;
  int p = m.p;
  if (m.degreeN() != p + 1) rep.fail("degree in N is not p+1");
  for (const auto& [key, c] : m.coef)
    if (key.first == 0) rep.fail("nonvanishing tail coefficient (constant in N)");
  if (m.at(p + 1, 0) != catalan(p)) rep.fail("leading coefficient is not the Catalan number");
  for (const auto& [key, c] : m.coef)
    if (key.first == p + 1 && key.second != 0) rep.fail("leading N row must be constant in kappa");
  for (int a = 1; a <= p; ++a) {
    auto row = m.nRow(a);
    if (row.empty()) continue;
    int j = p + 1 - a;  // expected k-degree
    int dmax = row.rbegin()->first;
    if (dmax != j) rep.fail("N^" + std::to_string(a) + " row has k-degree " + std::to_string(dmax) +
                            ", expected " + std::to_string(j));
    // numerator in kappa: coefficient of kappa^{j-t} is row[t]
    auto at = [&](int t) { auto it = row.find(t); return it == row.end() ? Rational(0) : it->second; };
    bool anti = (j % 2) != 0;
    for (int t = 0; t <= j; ++t) {
      if (!anti && at(t) != at(j - t))
        rep.fail("N^" + std::to_string(a) + " numerator not palindromic");
      if (anti && at(t) != -at(j - t))
        rep.fail("N^" + std::to_string(a) + " numerator not anti-palindromic");
    }
    if (anti) {
      Rational sum(0);
      for (int t = 0; t <= j; ++t) sum += at(t);
      if (!sum.isZero()) rep.fail("anti-palindromic numerator lacks kappa-1 factor");
    }
  }
  return rep;
}

namespace {
Rational pow2(long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e >= 0 ? e : -e);
  Rational r{z};
  return e >= 0 ? r : Rational(1) / r;
}
Rational fallingProduct(long l, int count) {
  // l (l-1) ... (l-count+1)
  Rational r(1);
  for (int t = 0; t < count; ++t) r *= Rational(l - t);
  return r;
}
}  // namespace

MultiPoly subleadingClosedForm(int l, int depth) {
  if (l < depth) throw std::domain_error("subleadingClosedForm: requires l >= depth");
  const Rational R = halfGammaRatio(l) / factorial(l);
  const Rational L(l);
  auto hpow = [&](const Rational& c, int j) { return MultiPoly::monomial(c, {{kSlotH, j}}); };
  switch (depth) {
    case 1:
      return hpow(pow2(2 * l - 1) * (Rational(-1) + R), 1);
    case 2:
      return hpow(Rational(1, 3) * pow2(2 * l - 2) * L * (Rational(-3) + Rational(5 * l + 1) * R), 2) +
             hpow(Rational(1, 3) * pow2(2 * l - 2) * L * Rational(l - 1) * R, 0);
    case 3:
      return hpow(Rational(5, 3) * pow2(2 * l - 6) * L * L * Rational(l - 1) *
                      (Rational(-3) + Rational(8) * R), 3) +
             hpow(Rational(1, 3) * pow2(2 * l - 7) * fallingProduct(l, 2) *
                      (Rational(28 - 17 * l) + Rational(16) * Rational(l - 1) * R), 1);
    case 4:
      return hpow(pow2(2 * l - 7) * fallingProduct(l, 3) *
                      (Rational(8 - 15 * l, 3) +
                       Rational(4) * Rational(1105L * l * l - 193L * l - 42) * R / Rational(945)), 4) +
             hpow(pow2(2 * l - 8) * fallingProduct(l, 3) *
                      (Rational(28 - 17 * l, 3) +
                       Rational(16) * Rational(590L * l * l - 1259L * l - 84) * R / Rational(945)), 2) +
             hpow(pow2(2 * l - 5) * fallingProduct(l, 4) * Rational(5 * l - 2) * R / Rational(45), 0);
    case 5:
      return hpow(pow2(2 * l - 13) * L * fallingProduct(l, 4) *
                      (Rational(99 - 113 * l, 3) +
                       Rational(128) * Rational(1105L * l - 1243) * R / Rational(945)), 5) +
             hpow(pow2(2 * l - 14) * fallingProduct(l, 4) *
                      (Rational(-(5677L * l * l - 17271L * l + 4952), 45) +
                       Rational(302080L * l * l - 698368L * l + 10752) * R / Rational(945)), 3) +
             hpow(pow2(2 * l - 13) * fallingProduct(l, 4) *
                      (Rational(-(l - 1), 15) * Rational(239L * l - 886) +
                       Rational(128) * Rational(l - 3) * Rational(5 * l - 2) * R / Rational(45)), 1);
    case 6: {
      long ll = l;
      Rational cub1 = Rational(82825L * ll * ll * ll - 135690L * ll * ll + 8081L * ll + 1716);
      Rational cub2 = Rational(5929L * ll * ll * ll - 23320L * ll * ll + 12861L * ll + 312);
      Rational cub3 = Rational(93427L * ll * ll * ll - 549765L * ll * ll + 623360L * ll + 9438);
      return hpow(pow2(2 * l - 14) * fallingProduct(l, 5) *
                      (Rational(-(565L * ll * ll - 1295L * ll + 512), 15) +
                       Rational(128) * cub1 * R / Rational(405405)), 6) +
             hpow(pow2(2 * l - 15) * fallingProduct(l, 5) *
                      (Rational(-(5677L * ll * ll - 19991L * ll + 9432), 45) +
                       Rational(256) * cub2 * R / Rational(12285)), 4) +
             hpow(pow2(2 * l - 14) * fallingProduct(l, 5) *
                      (Rational(-(ll - 1) * (239L * ll - 886), 15) +
                       Rational(128) * cub3 * R / Rational(405405)), 2) +
             hpow(pow2(2 * l - 7) * fallingProduct(l, 6) *
                      Rational(35L * ll * ll - 77L * ll + 12) * R / Rational(2835), 0);
    }
    default:
      throw std::domain_error("subleadingClosedForm: depth must be 1..6");
  }
}

bool subleadingMatchesMoment(const MomentPoly& m, int depth) {
  int l = m.p;
  MultiPoly phi = subleadingClosedForm(l, depth);
  std::map<int, Rational> expected;
  for (const auto& [mono, c] : phi.terms()) {
    int j = mono.e[kSlotH];
    if ((depth - j) % 2 != 0) throw std::logic_error("subleading: stray half power");
    int base = (depth - j) / 2;
    for (int t = 0; t <= j; ++t) {
      expected[base + t] += c * binomial(j, t) * ((t % 2) ? Rational(-1) : Rational(1));
      if (expected[base + t].isZero()) expected.erase(base + t);
    }
  }
  return expected == m.nRow(l + 1 - depth);
}

std::vector<std::complex<double>> polynomialRoots(const std::vector<double>& coeffs) {
  using C = std::complex<double>;
  int deg = int(coeffs.size()) - 1;
  while (deg > 0 && coeffs[deg] == 0.0) --deg;
  if (deg <= 0) return {};
  std::vector<C> a(coeffs.begin(), coeffs.begin() + deg + 1);
  for (auto& v : a) v /= a[deg];
  auto eval = [&](C z) {
    C p = 0;
    for (int i = deg; i >= 0; --i) p = p * z + a[i];
    return p;
  };
  auto evalD = [&](C z) {
    C p = 0;
    for (int i = deg; i >= 1; --i) p = p * z + a[i] * double(i);
    return p;
  };
  std::vector<C> z(deg);
  C seed(0.4, 0.9);
  C w(1, 0);
  for (int u = 0; u < deg; ++u) { w *= seed; z[u] = w; }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (int u = 0; u < deg; ++u) {
      C denom(1, 0);
      for (int v = 0; v < deg; ++v)
        if (v != u) denom *= (z[u] - z[v]);
      C step = eval(z[u]) / denom;
      z[u] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  for (int u = 0; u < deg; ++u)
    for (int it = 0; it < 6; ++it) {
      C d = evalD(z[u]);
      if (std::abs(d) < 1e-300) break;
      z[u] -= eval(z[u]) / d;
    }
  return z;
}

ZeroReport unitCircleZeros(const MomentPoly& m, double tol) {
  (void)tol;
  ZeroReport rep;
  for (int a = 1; a <= m.degreeN() - 1; ++a) {
    auto row = m.nRow(a);
    if (row.empty()) continue;
    int j = row.rbegin()->first;
    if (j == 0) continue;
    // numerator coefficients in kappa: kappa^u gets row[j-u]
    std::vector<double> coeffs(j + 1, 0.0);
    for (const auto& [t, c] : row) coeffs[j - t] = c.toDouble();
    auto roots = polynomialRoots(coeffs);
    for (size_t u = 0; u < roots.size(); ++u) {
      rep.maxDeviation = std::max(rep.maxDeviation, std::abs(std::abs(roots[u]) - 1.0));
      ++rep.rootsChecked;
      for (size_t v = u + 1; v < roots.size(); ++v)
        rep.minSeparation = std::min(rep.minSeparation, std::abs(roots[u] - roots[v]));
    }
  }
  return rep;
}

}  // namespace gbe
