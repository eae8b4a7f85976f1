#include "gbe/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gbe {

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::toLong() const {
  if (!isInteger()) throw std::domain_error("Rational: not an integer");
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: does not fit long");
  return v_.get_num().get_si();
}

Rational Rational::parse(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q(s);
    q.canonicalize();
    return Rational(q);
  }
  // decimal string: sign? digits '.' digits
  bool neg = !s.empty() && s[0] == '-';
  std::string digits = s;
  digits.erase(dot, 1);
  if (neg) digits.erase(0, 1);
  size_t frac = s.size() - dot - 1;
  mpz_class num(digits.empty() ? "0" : digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  mpq_class q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::toDecimalString(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num2 = num() * scale * 2;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num2.get_mpz_t(), den().get_mpz_t());
  // round half away from zero on |value|
  mpz_class scaled = (q + (q < 0 ? 0 : 1)) / 2;  // floor((q+1)/2) for q>=0
  if (q < 0) scaled = -((-q + 1) / 2);
  bool neg = scaled < 0;
  mpz_class a = abs(scaled);
  std::string ds = a.get_str();
  if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out = ds.substr(0, ds.size() - digits);
  if (digits > 0) out += "." + ds.substr(ds.size() - digits);
  if (neg && !(a == 0)) out.insert(0, "-");
  return out;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

Rational binomialGeneral(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long t = 0; t < k; ++t) num *= (a - Rational(t));
  return num / factorial(k);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  return binomialGeneral(Rational(n), k);
}

Rational doubleFactorialOdd(long n) {
  // (2n-1)!! = (2n)! / (2^n n!)
  if (n < 0) throw std::domain_error("doubleFactorialOdd: n < 0");
  Rational r = factorial(2 * n) / factorial(n);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
  return r / Rational(p);
}

Rational catalan(long n) { return factorial(2 * n) / (factorial(n) * factorial(n + 1)); }

Rational halfGammaRatio(long j) {
  // Gamma(j+1/2) = sqrt(pi) * (2j)!/(4^j j!)        for j >= 0
  //             = sqrt(pi) * (-4)^{|j|} |j|!/(2|j|)! for j < 0
  if (j >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 4, j);
    return factorial(2 * j) / (Rational(p) * factorial(j));
  }
  long m = -j;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, m);
  Rational s = Rational(p) * factorial(m) / factorial(2 * m);
  return (m % 2 == 0) ? s : -s;
}

SqrtPiValue& SqrtPiValue::operator+=(const SqrtPiValue& o) {
  if (o.r.isZero()) return *this;
  if (r.isZero()) { *this = o; return *this; }
  if (piPow != o.piPow) throw std::logic_error("SqrtPiValue: adding mismatched sqrt(pi) powers");
  r += o.r;
  return *this;
}

Rational SqrtPiValue::rationalPart() const {
  if (!r.isZero() && piPow != 0) throw std::logic_error("SqrtPiValue: sqrt(pi) tag did not cancel");
  return r;
}

SqrtPiValue gammaExact(const Rational& a) {
  if (a.isInteger()) {
    long n = a.toLong();
    if (n < 1) throw std::domain_error("gammaExact: Gamma at non-positive integer");
    return {factorial(n - 1), 0};
  }
  Rational j2 = a - Rational(1, 2);
  if (!j2.isInteger()) throw std::domain_error("gammaExact: argument not integer or half-integer");
  return {halfGammaRatio(j2.toLong()), 1};
}

Rational pochhammerInt(const Rational& a, long m) {
  Rational out(1);
  for (long t = 0; t < m; ++t) out *= (a + Rational(t));
  return out;
}

SqrtPiValue pochhammerHalf(const Rational& a, long p) {
  return gammaExact(a + Rational(2 * p + 1, 2)) / gammaExact(a);
}

}  // namespace gbe
