#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "gbe/rational.hpp"

namespace gbe {

// Fixed global indeterminate alphabet. Slots 0..7 are the eigenvalue
// variables x0..x7 (x means x0 wherever only one variable is in play),
// then the coupling g, the beta-deformation h = sqrt(kappa)-1/sqrt(kappa),
// the matrix dimension N, and k = 1/kappa.
inline constexpr int kNumVarSlots = 8;
inline constexpr int kSlotG = 8;
inline constexpr int kSlotH = 9;
inline constexpr int kSlotN = 10;
inline constexpr int kSlotK = 11;
inline constexpr int kAlphabet = 12;

struct Monomial {
  std::array<uint8_t, kAlphabet> e{};

  int totalDegree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  Monomial times(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic: higher total degree first, then lex on the slots.
struct MonomialGradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

// Multivariate polynomial over Q in the fixed alphabet. Terms are kept in
// strictly decreasing graded-lex order with no zero coefficients; equality
// of normal forms is plain equality of the term vectors.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Rational c);
  explicit MultiPoly(long n) : MultiPoly(Rational(n)) {}
  // Monomial c * prod slot^exp.
  static MultiPoly monomial(Rational c, std::initializer_list<std::pair<int, int>> exps);
  static MultiPoly variable(int slot, int exp = 1);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  int degree(int slot) const;
  int totalDegree() const;
  // Leading term in graded-lex order; polynomial must be nonzero.
  const Term& leading() const { return terms_.front(); }
  Rational coefficientOf(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly timesMonomial(const Rational& c, const Monomial& m) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  // Total order for use as a map key (degree-then-term comparison).
  int cmp(const MultiPoly& o) const;

  MultiPoly derivative(int slot) const;
  // Substitute slot := value (a rational constant).
  MultiPoly substitute(int slot, const Rational& value) const;
  // Substitute slot := given polynomial (used for x -> -x parity checks
  // and small rewrites; cost is exponential in degree, keep inputs small).
  MultiPoly substitutePoly(int slot, const MultiPoly& value) const;
  // Rename variable slots: exponent of slot s moves to slot mapping[s].
  // Slots not mentioned keep their position. Mapping must be injective.
  MultiPoly relabeled(const std::array<int, kNumVarSlots>& mapping) const;

  // Exact division; sets ok=false (and returns 0) if not exactly divisible.
  MultiPoly divExact(const MultiPoly& divisor, bool* ok) const;
  bool divisibleBy(const MultiPoly& divisor) const;

  // Rational content (gcd of coefficients with the sign of the leading
  // coefficient); zero polynomial has content 0.
  Rational content() const;
  // Largest monomial in g and h (and any slot in `slots`) dividing all terms.
  Monomial monomialGcd() const;
  MultiPoly divByMonomial(const Monomial& m) const;

  // Evaluate with every slot assigned. Slots with exponent>0 must be present.
  Rational evalFull(const std::map<int, Rational>& assign) const;

  std::string str(const std::function<std::string(int)>& slotName = nullptr) const;

  // Construction from raw sorted-or-unsorted term list (normalizes).
  static MultiPoly fromTerms(std::vector<Term> ts);

 private:
  std::vector<Term> terms_;
  void normalize();
};

// Convenience builders on the conventional slots.
MultiPoly pX(int exp = 1);  // x0^exp
MultiPoly pG(int exp = 1);
MultiPoly pH(int exp = 1);
MultiPoly pN(int exp = 1);
MultiPoly pK(int exp = 1);
MultiPoly pConst(Rational c);
MultiPoly pConst(long n, long d = 1);
// x_slot^2 - 4g, the square of the spectral curve in a given variable.
MultiPoly curveSquare(int slot);

// Parses expressions over the alphabet with +, -, *, ^, parentheses and
// rational literals, e.g. "2*N^3+5*N^2*(-1+k)". Variables: x (== x0),
// x1..x7, g, h, N, k. Exponents are non-negative integers.
MultiPoly parsePoly(const std::string& src);

}  // namespace gbe
