#include "gbe/classical.hpp"

#include <algorithm>
#include <cstdint>

namespace gbe {

const char* ensembleName(Ensemble e) {
  switch (e) {
    case Ensemble::GUE: return "GUE";
    case Ensemble::GOE: return "GOE";
    case Ensemble::GSE: return "GSE";
  }
  return "?";
}

Rational ensembleKappa(Ensemble e) {
  switch (e) {
    case Ensemble::GUE: return Rational(1);
    case Ensemble::GOE: return Rational(1, 2);
    case Ensemble::GSE: return Rational(2);
  }
  return Rational(0);
}

Rational kappaHalfPowerTimesHPower(const Rational& kappa, int l, int j) {
  if ((l - j) % 2 != 0) throw std::domain_error("kappa^{-l/2} h^j is irrational for l-j odd");
  // (sqrt(k)-1/sqrt(k))^j kappa^{-l/2} = sum_t C(j,t)(-1)^t kappa^{(j-2t-l)/2}
  Rational out(0);
  for (int t = 0; t <= j; ++t) {
    int e2 = j - 2 * t - l;  // even
    Rational kp(1);
    for (int u = 0; u < std::abs(e2) / 2; ++u) kp *= kappa;
    if (e2 < 0) kp = Rational(1) / kp;
    out += binomial(j, t) * ((t % 2) ? Rational(-1) : Rational(1)) * kp;
  }
  return out;
}

namespace {

template <typename Ring>
std::vector<Ring> recurrenceMomentsT(Ensemble e, int pMax, const Ring& N, const Ring& one) {
  std::vector<Ring> m(std::max(2, pMax + 1));
  auto C = [&](long v) {
    Ring r = one;
    r = r.scaled(Rational(v));
    return r;
  };
  switch (e) {
    case Ensemble::GUE: {
      m[0] = N;
      m[1] = N * N;
      for (int p = 2; p <= pMax; ++p)
        m[p] = (N * m[p - 1].scaled(Rational(4 * p - 2)) +
                m[p - 2].scaled(Rational(long(p - 1) * (2 * p - 1) * (2 * p - 3))))
                   .scaled(Rational(1, p + 1));
      break;
    }
    case Ensemble::GOE: {
      Ring twoN1 = N.scaled(Rational(2)) - one;  // 2N-1
      m[0] = N;
      m[1] = N * N + N;
      for (int p = 2; p <= pMax; ++p) {
        Ring acc = twoN1 * m[p - 1].scaled(Rational(4 * p - 1));
        Ring mid = C(10L * p * p - 9 * p) - (N * N).scaled(Rational(8)) + N.scaled(Rational(8));
        acc += (mid * m[p - 2]).scaled(Rational(2 * p - 3));
        if (p >= 3)
          acc += (twoN1 * m[p - 3])
                     .scaled(Rational(-5L * (2 * p - 3) * (2 * p - 4) * (2 * p - 5)));
        if (p >= 4)
          acc += m[p - 4].scaled(
              Rational(-2L * (2 * p - 3) * (2 * p - 4) * (2 * p - 5) * (2 * p - 6) * (2 * p - 7)));
        m[p] = acc.scaled(Rational(1, p + 1));
      }
      break;
    }
    case Ensemble::GSE: {
      Ring fourN1 = N.scaled(Rational(4)) + one;  // 4N+1
      m[0] = N;
      m[1] = N * N - N.scaled(Rational(1, 2));
      for (int p = 2; p <= pMax; ++p) {
        Ring acc = (fourN1 * m[p - 1]).scaled(Rational(4 * p - 1, 2));
        Ring mid = C(10L * p * p - 9 * p) - (N * N).scaled(Rational(32)) - N.scaled(Rational(16));
        acc += (mid * m[p - 2]).scaled(Rational(2 * p - 3, 4));
        if (p >= 3)
          acc += (fourN1 * m[p - 3])
                     .scaled(Rational(-5L * (2 * p - 3) * (2 * p - 4) * (2 * p - 5), 8));
        if (p >= 4)
          acc += m[p - 4].scaled(Rational(
              -1L * (2 * p - 3) * (2 * p - 4) * (2 * p - 5) * (2 * p - 6) * (2 * p - 7), 8));
        m[p] = acc.scaled(Rational(1, p + 1));
      }
      break;
    }
  }
  m.resize(pMax + 1);
  return m;
}

// Minimal ring shim so the same recurrence code serves Rational and MultiPoly.
struct RatRing {
  Rational v;
  bool isZero() const { return v.isZero(); }
  RatRing scaled(const Rational& c) const { return {v * c}; }
  RatRing operator*(const RatRing& o) const { return {v * o.v}; }
  RatRing operator+(const RatRing& o) const { return {v + o.v}; }
  RatRing operator-(const RatRing& o) const { return {v - o.v}; }
  RatRing& operator+=(const RatRing& o) { v += o.v; return *this; }
};

struct PolyRing {
  MultiPoly v;
  bool isZero() const { return v.isZero(); }
  PolyRing scaled(const Rational& c) const { return {v.scaled(c)}; }
  PolyRing operator*(const PolyRing& o) const { return {v * o.v}; }
  PolyRing operator+(const PolyRing& o) const { return {v + o.v}; }
  PolyRing operator-(const PolyRing& o) const { return {v - o.v}; }
  PolyRing& operator+=(const PolyRing& o) { v += o.v; return *this; }
};

}  // namespace

std::vector<MultiPoly> recurrenceMomentsSym(Ensemble e, int pMax) {
  auto r = recurrenceMomentsT<PolyRing>(e, pMax, {pN()}, {pConst(1)});
  std::vector<MultiPoly> out;
  out.reserve(r.size());
  for (auto& x : r) out.push_back(std::move(x.v));
  return out;
}

std::vector<Rational> recurrenceMoments(Ensemble e, int pMax, const Rational& N) {
  auto r = recurrenceMomentsT<RatRing>(e, pMax, {N}, {Rational(1)});
  std::vector<Rational> out;
  out.reserve(r.size());
  for (auto& x : r) out.push_back(std::move(x.v));
  return out;
}

namespace {

Rational pow2r(long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e >= 0 ? e : -e);
  Rational r(z);
  return e >= 0 ? r : Rational(1) / r;
}

Rational mehtaGUE(int p, long N) {
  // (2p)!/(2^p p!) * sum_j C(p,j) C(N,j+1) 2^j
  Rational sum(0);
  Rational twoJ(1);
  for (int j = 0; j <= p; ++j) {
    sum += binomial(p, j) * binomialGeneral(Rational(N), j + 1) * twoJ;
    twoJ *= Rational(2);
  }
  return factorial(2 * p) / (pow2r(p) * factorial(p)) * sum;
}

Rational mezzadriSimmGUE(int p, long N) {
  if (N < 1) throw std::domain_error("mezzadriSimmGUE: N >= 1");
  SqrtPiValue acc;
  if (N % 2 == 0) {
    long half = N / 2;
    SqrtPiValue pref = SqrtPiValue(pow2r(N + p), 0) * gammaExact(Rational(half + 1)) *
                       gammaExact(Rational(half)) /
                       (SqrtPiValue(Rational(2 * p + 1), 1) * gammaExact(Rational(N)));
    long jmax = std::min<long>(half - 1, p);
    for (long j = 0; j <= jmax; ++j) {
      SqrtPiValue term = pochhammerHalf(Rational(half - j), p);
      term.r *= binomial(p, j) * binomial(p + 1, j + 1);
      acc += pref * term;
    }
  } else {
    long half = (N + 1) / 2;
    SqrtPiValue gg = gammaExact(Rational(half));
    SqrtPiValue pref = SqrtPiValue(pow2r(N + p), 0) * gg * gg /
                       (SqrtPiValue(Rational(2 * p + 1), 1) * gammaExact(Rational(N)));
    long jmax = std::min<long>((N - 1) / 2, p);
    for (long j = 0; j <= jmax; ++j) {
      SqrtPiValue term = pochhammerHalf(Rational(half - j), p);
      term.r *= binomial(p, j) * binomial(p + 1, j);
      acc += pref * term;
    }
  }
  return acc.rationalPart();
}

Rational gouldenJacksonGOE(int p, long N) {
  Rational sum(0);
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p; ++j) {
      Rational t = binomialGeneral(Rational(2 * p - 1, 2), p - j) *
                   binomialGeneral(Rational(i + j - 1), i) *
                   binomialGeneral(Rational(N - 1, 2), j);
      sum += pow2r(2 * p - i) * t;
    }
  return mehtaGUE(p, N - 1) + factorial(p) * sum;
}

Rational phiGOE(int p, long N) {
  // N even
  long half = N / 2;
  if (N > 2 * p) {
    Rational sum(0);
    for (long j = 0; j <= p; ++j)
      sum += pow2r(3 * j) * pochhammerInt(Rational(N + 1 - 2 * j, 2), j) /
             (factorial(2 * j) * factorial(p - j));
    return factorial(2 * p) * sum;
  }
  Rational first(0);
  for (long j = 0; j + half <= p; ++j)
    for (long i = 0; i <= half - 1; ++i) {
      Rational t = binomial(N - 1, 2 * j) * pow2r(-j - 2 * i) /
                   (factorial(2 * j + 2 * i + 1) * factorial(p - half - j));
      first += ((j % 2) ? -t : t);
    }
  first *= factorial(2 * p) * pow2r(half) / factorial(half - 1);
  Rational second(0);
  for (long j = 0; j <= half - 1; ++j)
    for (long i = 0; i <= j; ++i)
      second += factorial(half - i - 1) * binomial(N - 1, N - 2 * i - 1) /
                (factorial(j - i) * factorial(p - j) * pow2r(p - 2 * j));
  second *= factorial(2 * p) / factorial(half - 1);
  return first + second;
}

Rational mezzadriSimmGOE(int p, long N) {
  if (N % 2 != 0) throw ParityUnsupported("mezzadriSimmGOE: bulk formula needs N even");
  long half = N / 2;
  Rational sum(0);
  long jmax = std::min<long>(half - 1, p);
  for (long j = 1; j <= jmax; ++j) {
    long imax = std::min<long>(p, half - 1 - j);
    for (long i = 0; i <= imax; ++i) {
      SqrtPiValue num = pochhammerHalf(Rational(half - i - j), p);
      SqrtPiValue den = pochhammerHalf(Rational(half - j), 0);
      Rational ratio = (num / den).rationalPart();
      sum += binomial(p, i) * binomial(p, i + j) * ratio;
    }
  }
  return mehtaGUE(p, N - 1) - pow2r(p) * sum + phiGOE(p, N);
}

Rational mezzadriSimmGSE(int p, long N) {
  SqrtPiValue pref = gammaExact(Rational(N + 1)) * gammaExact(Rational(N)) /
                     (SqrtPiValue(pow2r(2 * (1 - N)), 1) * gammaExact(Rational(2 * N)));
  SqrtPiValue acc;
  long jmax = std::min<long>(N, p);
  for (long j = 1; j <= jmax; ++j) {
    long imax = std::min<long>(N - j, p - j);
    for (long i = 0; i <= imax; ++i) {
      SqrtPiValue term = pochhammerHalf(Rational(N - i - j + 1), p - 1);  // (a)_{p-1/2}
      term.r *= binomial(p, i) * binomial(p, i + j);
      acc += pref * term;
    }
  }
  return pow2r(-p - 1) * mehtaGUE(p, 2 * N) - acc.rationalPart();
}

}  // namespace

Rational closedFormMoment(Ensemble e, MomentFormula f, int p, long N) {
  switch (f) {
    case MomentFormula::MehtaGUE:
      if (e != Ensemble::GUE) throw MethodUnsupported("MehtaGUE applies to the GUE");
      return mehtaGUE(p, N);
    case MomentFormula::MezzadriSimmGUE:
      if (e != Ensemble::GUE) throw MethodUnsupported("MezzadriSimmGUE applies to the GUE");
      return mezzadriSimmGUE(p, N);
    case MomentFormula::GouldenJacksonGOE:
      if (e != Ensemble::GOE) throw MethodUnsupported("GouldenJacksonGOE applies to the GOE");
      return gouldenJacksonGOE(p, N);
    case MomentFormula::MezzadriSimmGOE:
      if (e != Ensemble::GOE) throw MethodUnsupported("MezzadriSimmGOE applies to the GOE");
      return mezzadriSimmGOE(p, N);
    case MomentFormula::MezzadriSimmGSE:
      if (e != Ensemble::GSE) throw MethodUnsupported("MezzadriSimmGSE applies to the GSE");
      return mezzadriSimmGSE(p, N);
  }
  throw MethodUnsupported("unknown formula");
}

std::vector<Rational> harerZagier(int pMax, long N) {
  // X(sigma) = ((1+sigma)/(1-sigma))^N, phi = (X-1)/(2 sigma); sigma = s^2
  int len = pMax + 2;
  std::vector<Rational> A(len, Rational(0)), B(len, Rational(0)), X(len, Rational(0));
  for (int t = 0; t < len; ++t) {
    A[t] = binomial(N, t);
    B[t] = binomial(N - 1 + t, t);  // (1-sigma)^{-N}
  }
  for (int t = 0; t < len; ++t)
    for (int u = 0; u + t < len; ++u) X[t + u] += A[t] * B[u];
  std::vector<Rational> out(pMax + 1);
  for (int p = 0; p <= pMax; ++p)
    out[p] = doubleFactorialOdd(p) * X[p + 1] * Rational(1, 2);
  return out;
}

std::vector<Rational> gueUSeries(int pMax, long N) {
  // coefficient of tau^p in e^{-tau/2} 1F1(1+N, 2; tau), times N
  std::vector<Rational> E(pMax + 1), F(pMax + 1), out(pMax + 1, Rational(0));
  for (int a = 0; a <= pMax; ++a) {
    E[a] = ((a % 2) ? Rational(-1) : Rational(1)) * pow2r(-a) / factorial(a);
    F[a] = pochhammerInt(Rational(1 + N), a) / (factorial(a + 1) * factorial(a));
  }
  for (int a = 0; a <= pMax; ++a)
    for (int b = 0; a + b <= pMax; ++b) out[a + b] += E[a] * F[b];
  for (auto& c : out) c *= Rational(N);
  return out;
}

namespace {

// ODE on the exponential generating function u(t) = sum_q c_q t^{2q}:
// terms (derivative order d, power of t e, coefficient).
struct UOdeTerm {
  int d, e;
  Rational c;
};

bool seriesOdeHolds(const std::vector<Rational>& u, const std::vector<UOdeTerm>& terms) {
  // u[q] is the t^{2q} coefficient; odd coefficients vanish.
  int qMax = int(u.size()) - 1;
  auto uCoeff = [&](int j) { return (j < 0 || j % 2) ? Rational(0) : (j / 2 <= qMax ? u[j / 2] : Rational(0)); };
  auto uDeriv = [&](int j, int d) {
    // coefficient of t^j in u^{(d)} = (j+d)!/j! * u_{j+d}
    Rational f(1);
    for (int t = 0; t < d; ++t) f *= Rational(j + d - t);
    return f * uCoeff(j + d);
  };
  int mTop = INT32_MAX;
  for (const auto& t : terms) mTop = std::min(mTop, 2 * qMax - t.d + t.e);
  for (int M = 0; M <= mTop; ++M) {
    Rational acc(0);
    for (const auto& t : terms) acc += t.c * uDeriv(M - t.e, t.d);
    if (!acc.isZero()) return false;
  }
  return true;
}

}  // namespace

bool uOdeCheck(Ensemble e, int pMax, const Rational& N) {
  auto m = recurrenceMoments(e, pMax, N);
  std::vector<Rational> u(pMax + 1);
  for (int p = 0; p <= pMax; ++p) u[p] = m[p] / factorial(2 * p);
  std::vector<UOdeTerm> terms;
  switch (e) {
    case Ensemble::GUE:
      terms = {{2, 1, Rational(1)}, {1, 0, Rational(3)}, {0, 3, Rational(-1)},
               {0, 1, Rational(-4) * N}};
      break;
    case Ensemble::GOE:
      terms = {{4, 1, Rational(1)},
               {3, 0, Rational(5)},
               {2, 3, Rational(-5)},
               {2, 1, Rational(-8) * N + Rational(4)},
               {1, 2, Rational(-36)},
               {1, 0, Rational(-20) * N + Rational(10)},
               {0, 5, Rational(4)},
               {0, 3, Rational(20) * N - Rational(10)},
               {0, 1, Rational(16) * N * N - Rational(16) * N - Rational(44)}};
      break;
    case Ensemble::GSE:
      terms = {{4, 1, Rational(1)},
               {3, 0, Rational(5)},
               {2, 3, Rational(-5, 4)},
               {2, 1, Rational(-8) * N - Rational(2)},
               {1, 2, Rational(-9)},
               {1, 0, Rational(-20) * N - Rational(5)},
               {0, 5, Rational(1, 4)},
               {0, 3, Rational(5) * N + Rational(5, 4)},
               {0, 1, Rational(16) * N * N + Rational(8) * N - Rational(11)}};
      break;
  }
  if (!seriesOdeHolds(u, terms)) return false;
  if (e == Ensemble::GOE) {
    // factored form: U = u'' - (4t^2+4N-2)u satisfies tU'' + 5U' - t(t^2+4N-2)U = 0
    int qMax = pMax - 1;
    std::vector<Rational> U(qMax + 1, Rational(0));
    auto uc = [&](int q) { return (q >= 0 && q <= pMax) ? u[q] : Rational(0); };
    for (int q = 0; q <= qMax; ++q)
      U[q] = Rational(2 * q + 2) * Rational(2 * q + 1) * uc(q + 1) - Rational(4) * uc(q - 1) -
             (Rational(4) * N - Rational(2)) * uc(q);
    std::vector<UOdeTerm> uf = {{2, 1, Rational(1)},
                                {1, 0, Rational(5)},
                                {0, 3, Rational(-1)},
                                {0, 1, Rational(-4) * N + Rational(2)}};
    if (!seriesOdeHolds(U, uf)) return false;
  }
  return true;
}

namespace {

struct VOdeTerm {
  int d;       // derivative order in x
  int eps;     // power of 1/N
  MultiPoly c; // coefficient in (x, g)
};

struct VOde {
  std::vector<VOdeTerm> lhs;
  std::vector<std::pair<int, MultiPoly>> rhs;  // (power of 1/N, coefficient)
};

VOde vOdeFor(Ensemble e) {
  switch (e) {
    case Ensemble::GUE:
      return {{{3, 2, parsePoly("g^2")}, {1, 0, parsePoly("4*g-x^2")}, {0, 0, parsePoly("x")}},
              {{0, parsePoly("2*g")}}};
    case Ensemble::GOE:
      return {{{5, 4, parsePoly("-4*g^4")},
               {3, 2, parsePoly("5*g^2*(x^2-4*g)")},
               {3, 3, parsePoly("10*g^3")},
               {2, 2, parsePoly("-6*g^2*x")},
               {1, 0, parsePoly("-(x^2-4*g)^2")},
               {1, 1, parsePoly("-4*g*x^2+16*g^2")},
               {1, 2, parsePoly("2*g^2")},
               {0, 0, parsePoly("x*(x^2-4*g)")},
               {0, 1, parsePoly("2*g*x")}},
              {{0, parsePoly("2*g*(x^2-4*g)")}, {1, parsePoly("10*g^2")}}};
    case Ensemble::GSE:
      return {{{5, 4, parsePoly("-1/4*g^4")},
               {3, 2, parsePoly("5/4*g^2*(x^2-4*g)")},
               {3, 3, parsePoly("-5/4*g^3")},
               {2, 2, parsePoly("-3/2*g^2*x")},
               {1, 0, parsePoly("-(x^2-4*g)^2")},
               {1, 1, parsePoly("2*g*x^2-8*g^2")},
               {1, 2, parsePoly("1/2*g^2")},
               {0, 0, parsePoly("x*(x^2-4*g)")},
               {0, 1, parsePoly("-g*x")}},
              {{0, parsePoly("2*g*(x^2-4*g)")}, {1, parsePoly("-5*g^2")}}};
  }
  throw std::logic_error("vOdeFor");
}

// kappa-specialized depth-l slice of (g/N) * resolvent: g^l kappa^{-l/2} W_1^l(h).
SpectralExpr vSlice(const SpectralExpr& w, const Rational& kappa, int l) {
  SpectralExpr out;
  for (const auto& [sigma, numer] : w.parts()) {
    for (const auto& [mono, c] : numer.terms()) {
      int j = mono.e[kSlotH];
      Monomial mm = mono;
      mm.e[kSlotH] = 0;
      int ge = int(mm.e[kSlotG]) + l;
      if (ge > 255) throw std::overflow_error("vSlice: g exponent overflow");
      mm.e[kSlotG] = static_cast<uint8_t>(ge);
      Rational factor = kappaHalfPowerTimesHPower(kappa, l, j);
      if (factor.isZero()) continue;
      out += SpectralExpr::term(MultiPoly::fromTerms({{mm, c * factor}}), sigma);
    }
  }
  return out;
}

}  // namespace

ResidualReport odeResidual(Ensemble e, const std::vector<SpectralExpr>& resolvent) {
  const Rational kappa = ensembleKappa(e);
  const int lMax = int(resolvent.size()) - 1;
  const bool oddZero = (kappa == Rational(1));
  VOde ode = vOdeFor(e);

  // V_l and its x-derivatives
  std::vector<std::vector<SpectralExpr>> dV(lMax + 1);
  int dMax = 0;
  for (const auto& t : ode.lhs) dMax = std::max(dMax, t.d);
  for (int l = 0; l <= lMax; ++l) {
    dV[l].resize(dMax + 1);
    dV[l][0] = vSlice(resolvent[l], kappa, l);
    for (int d = 1; d <= dMax; ++d) dV[l][d] = dV[l][d - 1].differentiated();
  }

  auto determined = [&](int l) {
    return l < 0 || l <= lMax || (oddZero && (l % 2 != 0));
  };

  ResidualReport rep;
  int r = 0;
  int firstUndet = -1;
  for (;; ++r) {
    bool ok = true;
    for (const auto& t : ode.lhs)
      if (!determined(r - t.eps)) ok = false;
    if (!ok) { firstUndet = r; break; }
    SpectralExpr acc;
    for (const auto& t : ode.lhs) {
      int l = r - t.eps;
      if (l < 0 || l > lMax) continue;  // known zero
      acc += dV[l][t.d].timesPoly(t.c);
    }
    for (const auto& [eps, c] : ode.rhs)
      if (eps == r) acc += SpectralExpr::fromPoly(-c);
    if (!acc.isZero()) break;
  }
  rep.firstUndetermined = firstUndet;
  rep.verifiedZeroThrough = r - 1;
  rep.cleanThroughDetermined = (firstUndet == r);
  return rep;
}

std::vector<std::map<int, MultiPoly>> etaRecursion(int jMax) {
  std::vector<std::map<int, MultiPoly>> rows(jMax + 1);
  if (jMax >= 1) rows[1][2] = pG(3);  // eta_1 = g^3 (x^2-4g)^{-5/2}
  for (int j = 1; j + 1 <= jMax; ++j) {
    auto at = [&](int r) -> MultiPoly {
      auto it = rows[j].find(r);
      return it == rows[j].end() ? MultiPoly() : it->second;
    };
    for (int r = 2 * (j + 1); r <= 3 * (j + 1) - 1; ++r) {
      MultiPoly inner = at(r - 2).scaled(Rational(r - 1)) + (at(r - 3) * pG()).scaled(Rational(4 * r - 10));
      MultiPoly c = (inner * pG(2)).scaled(Rational(long(2 * r - 3) * (2 * r - 1), r + 1));
      if (!c.isZero()) rows[j + 1][r] = c;
    }
  }
  return rows;
}

SpectralExpr etaFromTable(const std::map<int, MultiPoly>& row) {
  SpectralExpr out;
  for (const auto& [r, c] : row) out += SpectralExpr::term(c, 2 * r + 1);
  return out;
}

std::vector<Rational> largeNMomentExpansion(Ensemble e, int p, int order) {
  if (order > 6) throw DomainError("largeNMomentExpansion: order <= 6");
  const Rational R = halfGammaRatio(p) / factorial(p);
  auto fall = [&](int count) {
    Rational r(1);
    for (int t = 0; t < count; ++t) r *= Rational(p - t);
    return r;
  };
  long pl = p;
  std::vector<Rational> c(order + 1, Rational(0));
  switch (e) {
    case Ensemble::GUE: {
      if (order >= 0) c[0] = Rational(1);
      if (order >= 2) c[2] = Rational(1, 12) * Rational(p + 1) * fall(2);
      if (order >= 4) c[4] = Rational(1, 1440) * Rational(p + 1) * fall(4) * Rational(5 * pl - 2);
      if (order >= 6)
        c[6] = Rational(1, 362880) * Rational(p + 1) * fall(6) *
               Rational(35 * pl * pl - 77 * pl + 12);
      break;
    }
    case Ensemble::GOE: {
      if (order >= 0) c[0] = catalan(p);
      if (order >= 1) c[1] = pow2r(2 * p - 1) * (Rational(1) - R);
      if (order >= 2) c[2] = Rational(1, 3) * pow2r(2 * p - 2) * fall(1) * (Rational(-3) + Rational(7 * pl - 1) * R);
      if (order >= 3)
        c[3] = Rational(1, 3) * pow2r(2 * p - 4) * fall(2) *
               (Rational(8 * pl - 7) - Rational(14 * pl - 4) * R);
      if (order >= 4)
        c[4] = Rational(1, 45) * pow2r(2 * p - 5) * fall(3) *
               (Rational(-15) * Rational(8 * pl - 9) + Rational(185 * pl * pl - 317 * pl + 6) * R);
      if (order >= 5)
        c[5] = Rational(1, 45) * pow2r(2 * p - 8) * fall(4) *
               (Rational(320 * pl * pl - 1008 * pl + 487) -
                Rational(4) * Rational(185 * pl * pl - 387 * pl + 28) * R);
      if (order >= 6)
        c[6] = Rational(1, 2835) * pow2r(2 * p - 9) * fall(5) *
               (Rational(-63) * Rational(320 * pl * pl - 1168 * pl + 675) +
                Rational(4) * Rational(6209 * pl * pl * pl - 29106 * pl * pl + 26605 * pl - 60) * R);
      break;
    }
    case Ensemble::GSE: {
      if (order >= 0) c[0] = catalan(p);
      if (order >= 1) c[1] = pow2r(2 * p - 2) * (Rational(-1) + R);
      if (order >= 2) c[2] = Rational(1, 3) * pow2r(2 * p - 4) * fall(1) * (Rational(-3) + Rational(7 * pl - 1) * R);
      if (order >= 3)
        c[3] = Rational(1, 3) * pow2r(2 * p - 7) * fall(2) *
               (Rational(-8 * pl + 7) + Rational(2) * Rational(7 * pl - 2) * R);
      if (order >= 4)
        c[4] = Rational(1, 45) * pow2r(2 * p - 9) * fall(3) *
               (Rational(-15) * Rational(8 * pl - 9) + Rational(185 * pl * pl - 317 * pl + 6) * R);
      if (order >= 5)
        c[5] = Rational(1, 45) * pow2r(2 * p - 13) * fall(4) *
               (Rational(-320 * pl * pl + 1008 * pl - 487) +
                Rational(4) * Rational(185 * pl * pl - 387 * pl + 28) * R);
      if (order >= 6)
        c[6] = Rational(1, 2835) * pow2r(2 * p - 15) * fall(5) *
               (Rational(-63) * Rational(320 * pl * pl - 1168 * pl + 675) +
                Rational(4) * Rational(6209 * pl * pl * pl - 29106 * pl * pl + 26605 * pl - 60) * R);
      break;
    }
  }
  return c;
}

bool gseGoeDuality(int p) {
  MultiPoly goe = recurrenceMomentsSym(Ensemble::GOE, p)[p];
  MultiPoly gse = recurrenceMomentsSym(Ensemble::GSE, p)[p];
  MultiPoly transformed = goe.substitutePoly(kSlotN, pN().scaled(Rational(-2)));
  Rational scale = pow2r(-p - 1) * (((p + 1) % 2) ? Rational(-1) : Rational(1));
  return gse == transformed.scaled(scale);
}

}  // namespace gbe
