#include "gbe/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gbe {

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kAlphabet; ++i) {
    int s = int(e[i]) + int(o.e[i]);
    if (s > 255) throw std::overflow_error("Monomial exponent overflow");
    r.e[i] = static_cast<uint8_t>(s);
  }
  return r;
}

MultiPoly::MultiPoly(Rational c) {
  if (!c.isZero()) terms_.push_back({Monomial{}, std::move(c)});
}

MultiPoly MultiPoly::monomial(Rational c, std::initializer_list<std::pair<int, int>> exps) {
  if (c.isZero()) return {};
  Monomial m;
  for (auto [slot, ex] : exps) {
    if (ex < 0 || ex > 255) throw std::domain_error("monomial exponent out of range");
    m.e[slot] = static_cast<uint8_t>(ex);
  }
  MultiPoly p;
  p.terms_.push_back({m, std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(int slot, int exp) { return monomial(Rational(1), {{slot, exp}}); }

bool MultiPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.totalDegree() == 0);
}

int MultiPoly::degree(int slot) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.e[slot]));
  return d;
}

int MultiPoly::totalDegree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.totalDegree());
  return d;
}

Rational MultiPoly::coefficientOf(const Monomial& m) const {
  MonomialGradedLexGreater gt;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& mm) { return gt(t.first, mm); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

void MultiPoly::normalize() {
  MonomialGradedLexGreater gt;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return gt(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second.isZero()) out.pop_back();
    } else if (!t.second.isZero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

MultiPoly MultiPoly::fromTerms(std::vector<Term> ts) {
  MultiPoly p;
  p.terms_ = std::move(ts);
  p.normalize();
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) { terms_ = o.terms_; return *this; }
  MonomialGradedLexGreater gt;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!c.isZero()) out.push_back({terms_[i].first, std::move(c)});
      ++i; ++j;
    } else if (gt(terms_[i].first, o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else {
      out.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += o.operator-(); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.isZero()) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::timesMonomial(const Rational& c, const Monomial& m) const {
  if (c.isZero()) return {};
  MultiPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) r.terms_.push_back({mm.times(m), cc * c});
  // multiplying by a fixed monomial preserves graded-lex order
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  if (b.size() == 1) return a.timesMonomial(b.terms()[0].second, b.terms()[0].first);
  if (a.size() == 1) return b.timesMonomial(a.terms()[0].second, a.terms()[0].first);
  // accumulate via map for robustness on large operands
  std::map<Monomial, Rational, MonomialGradedLexGreater> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma.times(mb);
      auto [it, inserted] = acc.try_emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.isZero()) acc.erase(it);
      }
    }
  }
  std::vector<MultiPoly::Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc) ts.push_back({m, std::move(c)});
  MultiPoly r;
  // map is already in descending graded-lex order
  return MultiPoly::fromTerms(std::move(ts));
}

int MultiPoly::cmp(const MultiPoly& o) const {
  MonomialGradedLexGreater gt;
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (!(terms_[i].first == o.terms_[i].first))
      return gt(terms_[i].first, o.terms_[i].first) ? 1 : -1;
    if (terms_[i].second != o.terms_[i].second)
      return terms_[i].second < o.terms_[i].second ? -1 : 1;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

MultiPoly MultiPoly::derivative(int slot) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    int e = m.e[slot];
    if (e == 0) continue;
    Monomial mm = m;
    mm.e[slot] = static_cast<uint8_t>(e - 1);
    ts.push_back({mm, c * Rational(e)});
  }
  return fromTerms(std::move(ts));
}

MultiPoly MultiPoly::substitute(int slot, const Rational& value) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    int e = m.e[slot];
    Rational cc = c;
    if (e > 0) {
      if (value.isZero()) continue;
      Rational p(1);
      for (int t = 0; t < e; ++t) p *= value;
      cc *= p;
    }
    Monomial mm = m;
    mm.e[slot] = 0;
    ts.push_back({mm, std::move(cc)});
  }
  return fromTerms(std::move(ts));
}

MultiPoly MultiPoly::substitutePoly(int slot, const MultiPoly& value) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    int e = m.e[slot];
    mm.e[slot] = 0;
    MultiPoly piece = MultiPoly::fromTerms({{mm, c}});
    for (int t = 0; t < e; ++t) piece = piece * value;
    out += piece;
  }
  return out;
}

MultiPoly MultiPoly::relabeled(const std::array<int, kNumVarSlots>& mapping) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (int s = kNumVarSlots; s < kAlphabet; ++s) mm.e[s] = m.e[s];
    for (int s = 0; s < kNumVarSlots; ++s) {
      if (m.e[s] == 0) continue;
      int to = mapping[s];
      if (to < 0 || to >= kNumVarSlots) throw std::domain_error("relabeled: bad mapping");
      if (mm.e[to] != 0) throw std::domain_error("relabeled: mapping not injective");
      mm.e[to] = m.e[s];
    }
    ts.push_back({mm, c});
  }
  return fromTerms(std::move(ts));
}

namespace {
bool monomialDivides(const Monomial& d, const Monomial& m) {
  for (int i = 0; i < kAlphabet; ++i)
    if (d.e[i] > m.e[i]) return false;
  return true;
}
Monomial monomialQuot(const Monomial& m, const Monomial& d) {
  Monomial r;
  for (int i = 0; i < kAlphabet; ++i) r.e[i] = static_cast<uint8_t>(m.e[i] - d.e[i]);
  return r;
}
}  // namespace

MultiPoly MultiPoly::divExact(const MultiPoly& divisor, bool* ok) const {
  *ok = true;
  if (divisor.isZero()) throw std::domain_error("divExact: divisor is zero");
  MultiPoly rem = *this;
  std::vector<Term> quot;
  const auto& [dlm, dlc] = divisor.leading();
  while (!rem.isZero()) {
    const auto& [lm, lc] = rem.leading();
    if (!monomialDivides(dlm, lm)) { *ok = false; return {}; }
    Monomial qm = monomialQuot(lm, dlm);
    Rational qc = lc / dlc;
    quot.push_back({qm, qc});
    rem -= divisor.timesMonomial(qc, qm);
  }
  return fromTerms(std::move(quot));
}

bool MultiPoly::divisibleBy(const MultiPoly& divisor) const {
  bool ok;
  (void)divExact(divisor, &ok);
  return ok;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class ng = 0, dl = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class n = abs(c.num());
    mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational c(mpq_class(ng, dl));
  if (terms_.front().second.sign() < 0) c = -c;
  return c;
}

Monomial MultiPoly::monomialGcd() const {
  Monomial g;
  if (terms_.empty()) return g;
  for (int i = 0; i < kAlphabet; ++i) g.e[i] = 255;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kAlphabet; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
  return g;
}

MultiPoly MultiPoly::divByMonomial(const Monomial& m) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) {
    if (!monomialDivides(m, mm)) throw std::domain_error("divByMonomial: not divisible");
    ts.push_back({monomialQuot(mm, m), c});
  }
  return fromTerms(std::move(ts));
}

Rational MultiPoly::evalFull(const std::map<int, Rational>& assign) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < kAlphabet; ++i) {
      if (m.e[i] == 0) continue;
      auto it = assign.find(i);
      if (it == assign.end()) throw std::domain_error("evalFull: unassigned slot");
      for (int t = 0; t < m.e[i]; ++t) v *= it->second;
    }
    out += v;
  }
  return out;
}

std::string MultiPoly::str(const std::function<std::string(int)>& slotName) const {
  auto name = [&](int s) -> std::string {
    if (slotName) return slotName(s);
    switch (s) {
      case kSlotG: return "g";
      case kSlotH: return "h";
      case kSlotN: return "N";
      case kSlotK: return "k";
      default: return s == 0 ? "x" : ("x" + std::to_string(s));
    }
  };
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() >= 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.sign() < 0 ? -c : c;
    bool hasVar = m.totalDegree() > 0;
    if (!a.isOne() || !hasVar) os << a.str();
    bool firstVar = !(!a.isOne() || !hasVar);
    for (int s = 0; s < kAlphabet; ++s) {
      if (m.e[s] == 0) continue;
      if (!firstVar) os << "*";
      firstVar = false;
      os << name(s);
      if (m.e[s] > 1) os << "^" << int(m.e[s]);
    }
  }
  return os.str();
}

MultiPoly pX(int exp) { return MultiPoly::variable(0, exp); }
MultiPoly pG(int exp) { return MultiPoly::variable(kSlotG, exp); }
MultiPoly pH(int exp) { return MultiPoly::variable(kSlotH, exp); }
MultiPoly pN(int exp) { return MultiPoly::variable(kSlotN, exp); }
MultiPoly pK(int exp) { return MultiPoly::variable(kSlotK, exp); }
MultiPoly pConst(Rational c) { return MultiPoly(std::move(c)); }
MultiPoly pConst(long n, long d) { return MultiPoly(Rational(n, d)); }

MultiPoly curveSquare(int slot) {
  return MultiPoly::variable(slot, 2) - MultiPoly::monomial(Rational(4), {{kSlotG, 1}});
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& src) : s(src) {}

  void skipWs() { while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos; }
  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::domain_error("parsePoly: " + msg + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
  }

  MultiPoly parseExpr() {
    MultiPoly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = parseTerm();
    if (neg) acc = -acc;
    while (true) {
      skipWs();
      if (eat('+')) acc += parseTerm();
      else if (eat('-')) acc -= parseTerm();
      else break;
    }
    return acc;
  }

  MultiPoly parseTerm() {
    MultiPoly acc = parsePower();
    while (true) {
      skipWs();
      if (eat('*')) { acc = acc * parsePower(); continue; }
      // implicit multiplication before a variable or '('
      if (pos < s.size() && (isalpha((unsigned char)s[pos]) || s[pos] == '(')) {
        acc = acc * parsePower();
        continue;
      }
      break;
    }
    return acc;
  }

  MultiPoly parsePower() {
    MultiPoly base = parseAtom();
    skipWs();
    if (eat('^')) {
      long e = parseInt();
      if (e < 0) fail("negative exponent");
      MultiPoly r(Rational(1));
      for (long t = 0; t < e; ++t) r = r * base;
      return r;
    }
    return base;
  }

  long parseInt() {
    skipWs();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  MultiPoly parseAtom() {
    skipWs();
    if (pos >= s.size()) fail("unexpected end");
    if (eat('(')) {
      MultiPoly e = parseExpr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    char c = s[pos];
    if (isdigit((unsigned char)c)) {
      size_t start = pos;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
      mpz_class num(s.substr(start, pos - start));
      skipWs();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skipWs();
        size_t ds = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (ds == pos) fail("expected denominator");
        mpz_class den(s.substr(ds, pos - ds));
        return MultiPoly(Rational(mpq_class(num, den)));
      }
      return MultiPoly(Rational(mpq_class(num)));
    }
    if (isalpha((unsigned char)c)) {
      ++pos;
      int slot;
      switch (c) {
        case 'g': slot = kSlotG; break;
        case 'h': slot = kSlotH; break;
        case 'N': slot = kSlotN; break;
        case 'k': slot = kSlotK; break;
        case 'x': {
          slot = 0;
          if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            slot = s[pos] - '0';
            if (slot >= kNumVarSlots) fail("variable slot out of range");
            ++pos;
          }
          break;
        }
        default: fail(std::string("unknown variable '") + c + "'");
      }
      return MultiPoly::variable(slot);
    }
    fail("unexpected character");
  }
};

}  // namespace

MultiPoly parsePoly(const std::string& src) {
  PolyParser p(src);
  MultiPoly r = p.parseExpr();
  p.skipWs();
  if (p.pos != src.size()) p.fail("trailing input");
  return r;
}

}  // namespace gbe
