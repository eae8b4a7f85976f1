#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gbe {

// Truncated Laurent series sum_{e=lowest}^{order-1} c[e-lowest] * var^e,
// known modulo var^order. The coefficient ring is a template parameter;
// it must provide default construction (zero), +=, *, unary -, isZero().
//
// `order` is tracked conservatively: an arithmetic result never claims more
// precision than the operands support.
template <typename Coef>
class TruncatedSeries {
 public:
  TruncatedSeries() : lowest_(0), order_(0) {}
  TruncatedSeries(int lowest, int order) : lowest_(lowest), order_(order) {
    if (order < lowest) throw std::domain_error("TruncatedSeries: order < lowest");
    c_.resize(order - lowest);
  }

  int lowest() const { return lowest_; }
  int order() const { return order_; }

  const Coef& coeff(int e) const {
    static const Coef zero{};
    if (e >= order_) throw std::domain_error("TruncatedSeries: coefficient beyond truncation");
    if (e < lowest_) return zero;
    return c_[e - lowest_];
  }
  void setCoeff(int e, Coef v) {
    if (e < lowest_ || e >= order_) throw std::domain_error("TruncatedSeries: exponent out of range");
    c_[e - lowest_] = std::move(v);
  }
  void addCoeff(int e, const Coef& v) {
    if (e >= order_) return;  // beyond tracked precision
    if (e < lowest_) {
      c_.insert(c_.begin(), lowest_ - e, Coef{});
      lowest_ = e;
    }
    c_[e - lowest_] += v;
  }

  // First exponent with a nonzero coefficient, or order() if none.
  int valuation() const {
    for (int e = lowest_; e < order_; ++e)
      if (!coeff(e).isZero()) return e;
    return order_;
  }
  bool isZero() const { return valuation() == order_; }

  TruncatedSeries truncated(int newOrder) const {
    TruncatedSeries r(lowest_, std::min(order_, newOrder));
    for (int e = r.lowest_; e < r.order_; ++e) r.setCoeff(e, coeff(e));
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int lo = std::min(a.lowest_, b.lowest_);
    int ord = std::min(a.order_, b.order_);
    TruncatedSeries r(lo, ord);
    for (int e = lo; e < ord; ++e) {
      Coef v{};
      if (e >= a.lowest_ && e < a.order_) v += a.coeff(e);
      if (e >= b.lowest_ && e < b.order_) v += b.coeff(e);
      r.setCoeff(e, std::move(v));
    }
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    // result is known modulo var^min(a.order+b.val, b.order+a.val) where the
    // valuations bound the lowest contributing exponents
    int ord = std::min(a.order_ + b.lowest_, b.order_ + a.lowest_);
    int lo = a.lowest_ + b.lowest_;
    TruncatedSeries r(lo, ord);
    for (int ea = a.lowest_; ea < a.order_; ++ea) {
      if (a.coeff(ea).isZero()) continue;
      for (int eb = b.lowest_; eb < b.order_; ++eb) {
        if (ea + eb >= ord) break;
        if (b.coeff(eb).isZero()) continue;
        r.addCoeff(ea + eb, a.coeff(ea) * b.coeff(eb));
      }
    }
    return r;
  }

  // d/dvar: exponents shift down by one; one order of precision is lost
  // at the top only when the top coefficient is consumed.
  TruncatedSeries differentiated() const {
    TruncatedSeries r(lowest_ - 1, order_ - 1);
    for (int e = lowest_; e < order_; ++e) {
      if (e == 0) continue;
      r.setCoeff(e - 1, scaleInt(coeff(e), e));  // ADL customization point
    }
    return r;
  }

  // Multiplicative inverse; requires a nonzero leading coefficient and a
  // coefficient division routine (exact in the coefficient ring).
  template <typename DivFn>
  TruncatedSeries inverted(DivFn divide) const {
    int v = valuation();
    if (v == order_) throw std::domain_error("TruncatedSeries: inverting zero series");
    int len = order_ - v;
    TruncatedSeries r(-v, -v + len);
    const Coef& lead = coeff(v);
    r.setCoeff(-v, divide(Coef(1), lead));
    for (int m = 1; m < len; ++m) {
      Coef acc{};
      for (int t = 1; t <= m; ++t) acc += coeff(v + t) * r.coeff(-v + m - t);
      r.setCoeff(-v + m, divide(-acc, lead));
    }
    return r;
  }

 private:
  int lowest_;
  int order_;
  std::vector<Coef> c_;
};

}  // namespace gbe
