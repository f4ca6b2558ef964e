#include "core/intpoly.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qpart {

// ---------------------------------------------------------------------------
// PolyZ

PolyZ::PolyZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::constant(const BigInt& c) { return PolyZ(std::vector<BigInt>{c}); }

PolyZ PolyZ::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return PolyZ(std::move(v));
}

PolyZ PolyZ::variable() { return monomial(1, 1); }

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt PolyZ::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt PolyZ::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

PolyZ PolyZ::compose_affine(const BigInt& a, const BigInt& b) const {
  // Horner in the ring Z[x] with x -> a*x + b.
  std::vector<BigInt> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<BigInt> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += a * acc[k];
      next[k] += b * acc[k];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return PolyZ(std::move(acc));
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyZ(std::move(r));
}

namespace {

template <class Coeff>
std::string format_terms(std::span<const Coeff> coeffs, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff& c = coeffs[k];
    if (c == 0) continue;
    Coeff mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::string PolyZ::to_string(std::string_view var) const {
  return format_terms<BigInt>(coeffs_, var);
}

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(std::vector<BigInt> numerators, BigInt denominator)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("PolyQ: zero denominator");
  normalize();
}

PolyQ::PolyQ(const PolyZ& p) : num_(p), den_(1) {}

PolyQ PolyQ::from_rationals(std::span<const BigRat> coeffs) {
  BigInt den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
  return PolyQ(std::move(num), den);
}

void PolyQ::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  BigInt g = den_;
  for (const auto& c : num_.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    std::vector<BigInt> v(num_.coeffs().begin(), num_.coeffs().end());
    for (auto& c : v) c /= g;
    num_ = PolyZ(std::move(v));
    den_ /= g;
  }
}

BigRat PolyQ::coeff(std::size_t k) const {
  BigRat r(num_.coeff(k), den_);
  r.canonicalize();
  return r;
}

BigRat PolyQ::operator()(const BigInt& n) const {
  BigRat r(num_(n), den_);
  r.canonicalize();
  return r;
}

BigInt PolyQ::nonconstant_denominator() const {
  BigInt lcm = 1;
  for (std::size_t k = 1; k < num_.coeffs().size(); ++k) {
    BigRat c = coeff(k);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return lcm;
}

PolyQ PolyQ::compose_affine(const BigInt& a, const BigInt& b) const {
  PolyZ n = num_.compose_affine(a, b);
  return PolyQ(std::vector<BigInt>(n.coeffs().begin(), n.coeffs().end()), den_);
}

std::string PolyQ::to_string(std::string_view var) const {
  std::vector<BigRat> c;
  for (std::size_t k = 0; k < num_.coeffs().size(); ++k) c.push_back(coeff(k));
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    BigRat mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << '-';
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Order and bounds

int eventual_sign(const PolyZ& p) { return p.is_zero() ? 0 : sgn(p.lead()); }

PolyZ abs_poly(const PolyZ& p) { return eventual_sign(p) < 0 ? -p : p; }

BigInt cauchy_bound(const PolyZ& p) {
  if (p.degree() < 1) return 0;
  BigInt max_abs = 0;
  for (int k = 0; k < p.degree(); ++k) {
    BigInt a = abs(p.coeffs()[k]);
    if (a > max_abs) max_abs = a;
  }
  BigInt lead = abs(p.lead());
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

BigInt stable_bound(std::span<const PolyZ> signs, std::span<const RatioGap> ratios) {
  BigInt bound = 0;
  auto raise = [&bound](const BigInt& b) {
    if (b > bound) bound = b;
  };
  for (const auto& p : signs) raise(cauchy_bound(p));
  for (const auto& r : ratios) {
    if (sgn(r.gap) <= 0) throw DomainError("stable_bound: gap must be positive");
    if (r.denominator.is_zero()) throw DomainError("stable_bound: zero denominator");
    if (r.numerator.degree() >= r.denominator.degree())
      throw DomainError("stable_bound: ratio does not tend to zero");
    raise(cauchy_bound(r.denominator));
    if (r.numerator.is_zero()) continue;
    raise(cauchy_bound(r.numerator));
    // Past both sign bounds, |s/g| < P/Q  <=>  P*|g| - Q*|s| > 0.
    PolyZ h = abs_poly(r.denominator) * r.gap.get_num() - abs_poly(r.numerator) * r.gap.get_den();
    raise(cauchy_bound(h));
  }
  return bound;
}

std::pair<PolyQ, PolyQ> divide_Q(const PolyZ& f, const PolyZ& g) {
  if (g.is_zero()) throw DomainError("divide_Q: division by the zero polynomial");
  std::vector<BigRat> rem(f.coeffs().begin(), f.coeffs().end());
  const int dg = g.degree();
  const int df = f.degree();
  std::vector<BigRat> quo(df >= dg ? static_cast<std::size_t>(df - dg + 1) : 0);
  BigRat lead(g.lead());
  for (int k = df; k >= dg; --k) {
    BigRat c = rem[k] / lead;
    if (c == 0) continue;
    quo[k - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[k - dg + j] -= c * BigRat(g.coeffs()[j]);
  }
  if (static_cast<int>(rem.size()) > dg) rem.resize(std::max(dg, 0));
  return {PolyQ::from_rationals(quo), PolyQ::from_rationals(rem)};
}

// ---------------------------------------------------------------------------
// Parsing

BigInt parse_bigint(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  std::size_t digits = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = digits; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  return BigInt(s, 10);
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  PolyZ parse() {
    PolyZ p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + msg + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyZ expr() {
    PolyZ acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  PolyZ term() {
    PolyZ acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  PolyZ unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  PolyZ power() {
    PolyZ base = primary();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (e > 4096) fail("exponent too large");
    PolyZ r = PolyZ::constant(1);
    for (unsigned long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  PolyZ primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyZ p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'n') {
      ++pos_;
      return PolyZ::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return PolyZ::constant(BigInt(std::string(s_.substr(start, pos_ - start)), 10));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyZ parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qpart
