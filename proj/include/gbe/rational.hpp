#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gbe {

// Exact rational scalar. Thin wrapper over GMP's mpq_class; always kept in
// canonical form (gcd(|num|,den)=1, den>0). No implicit conversion to or
// from floating point: call toDouble() explicitly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Parses "num", "num/den" or a plain decimal string like "-1.25".
  static Rational parse(const std::string& s);
  // Decimal expansion with the given number of fractional digits
  // (round-to-nearest, ties away from zero).
  std::string toDecimalString(int digits) const;
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool isInteger() const { return v_.get_den() == 1; }
  // Requires the value to fit in a signed long.
  long toLong() const;
  double toDouble() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// n! as an exact integer-valued rational. n must be >= 0.
Rational factorial(long n);
// Binomial coefficient with arbitrary rational top argument and integer k>=0:
// a(a-1)...(a-k+1)/k!.
Rational binomialGeneral(const Rational& a, long k);
// Integer binomial; zero for k<0 or (n>=0 && k>n).
Rational binomial(long n, long k);
// (2n-1)!! with (-1)!! = 1.
Rational doubleFactorialOdd(long n);
// Catalan number C_n = (2n)!/(n!(n+1)!).
Rational catalan(long n);
// Gamma(j + 1/2) = sqrt(pi) * halfGammaRatio(j) for any integer j
// (j may be negative; the ratio is the exact rational part).
Rational halfGammaRatio(long j);

// A rational multiple of an integer power of sqrt(pi). Closed-form moment
// evaluations mix Gamma functions at integer and half-integer arguments;
// every intermediate is representable as r * sqrt(pi)^e and the e's must
// cancel to zero by the end of each evaluation, which callers assert.
struct SqrtPiValue {
  Rational r;
  int piPow = 0;  // exponent of sqrt(pi)

  SqrtPiValue() = default;
  SqrtPiValue(Rational rr, int p) : r(std::move(rr)), piPow(p) {}

  SqrtPiValue operator*(const SqrtPiValue& o) const { return {r * o.r, piPow + o.piPow}; }
  SqrtPiValue operator/(const SqrtPiValue& o) const { return {r / o.r, piPow - o.piPow}; }
  SqrtPiValue& operator+=(const SqrtPiValue& o);
  // The sqrt(pi) tag must have cancelled; throws otherwise.
  Rational rationalPart() const;
};

// Gamma(a) for a = n or n + 1/2, n integer, as a SqrtPiValue.
// Integer a must be >= 1.
SqrtPiValue gammaExact(const Rational& a);
// Pochhammer (a)_m for rational a and m a non-negative integer.
Rational pochhammerInt(const Rational& a, long m);
// Pochhammer (a)_{p+1/2} = Gamma(a+p+1/2)/Gamma(a) for a = integer or
// half-integer (a > 0), p integer with a+p+1/2 > 0.
SqrtPiValue pochhammerHalf(const Rational& a, long p);

}  // namespace gbe
