#include "core/quasipoly.hpp"

#include "core/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace qpart {

namespace {

std::atomic<Period> g_period_cap{1'000'000};

}  // namespace

Period period_cap() { return g_period_cap.load(); }

void set_period_cap(Period cap) {
  if (cap == 0) throw DomainError("period cap must be positive");
  g_period_cap.store(cap);
}

Period lcm_period(Period a, Period b, Period cap) {
  Period g = std::gcd(a, b);
  Period x = a / g;
  if (b != 0 && x > cap / b) {
    throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
  }
  Period l = x * b;
  if (l > cap) throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
  return l;
}

// ---------------------------------------------------------------------------
// QuasiPoly

QuasiPoly::QuasiPoly() : components_(1) {}

QuasiPoly::QuasiPoly(Period period, BigInt lower_boundary, std::vector<PolyZ> components)
    : period_(period), boundary_(std::move(lower_boundary)), components_(std::move(components)) {
  if (period_ == 0) throw DomainError("quasi-polynomial period must be positive");
  if (components_.size() != period_)
    throw DomainError("quasi-polynomial needs exactly one component per residue class");
  if (boundary_ < 0) throw DomainError("lower boundary must be nonnegative");
}

QuasiPoly QuasiPoly::from_poly(const PolyZ& p) { return QuasiPoly(1, 0, {p}); }

int QuasiPoly::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool QuasiPoly::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

QuasiPoly QuasiPoly::refine(Period period) const {
  if (period == 0 || period % period_ != 0)
    throw DomainError("refine: target period " + std::to_string(period) +
                      " is not a multiple of " + std::to_string(period_));
  if (period == period_) return *this;
  std::vector<PolyZ> out;
  out.reserve(period);
  for (Period j = 0; j < period; ++j) out.push_back(restrict_to(period, j));
  return QuasiPoly(period, boundary_, std::move(out));
}

PolyZ QuasiPoly::restrict_to(Period period, Period residue) const {
  if (period % period_ != 0 || residue >= period)
    throw DomainError("restrict_to: incompatible residue class");
  // n = period*x + residue = period_*((period/period_)*x + residue/period_) + residue%period_
  const PolyZ& f = components_[residue % period_];
  if (period == period_) return f;
  return f.compose_affine(BigInt(static_cast<unsigned long>(period / period_)),
                          BigInt(static_cast<unsigned long>(residue / period_)));
}

QuasiPoly QuasiPoly::raise_boundary(const BigInt& boundary) const {
  QuasiPoly r = *this;
  if (boundary > r.boundary_) r.boundary_ = boundary;
  return r;
}

namespace {

std::vector<Period> prime_factors(Period t) {
  std::vector<Period> ps;
  for (Period p = 2; p * p <= t; ++p) {
    if (t % p != 0) continue;
    ps.push_back(p);
    while (t % p == 0) t /= p;
  }
  if (t > 1) ps.push_back(t);
  return ps;
}

// h with h(p*x) == f(x), if it has integer coefficients.
bool unscale(const PolyZ& f, Period p, PolyZ& h) {
  std::vector<BigInt> c(f.coeffs().begin(), f.coeffs().end());
  BigInt scale = 1;
  const BigInt bp(static_cast<unsigned long>(p));
  for (auto& ck : c) {
    if (!mpz_divisible_p(ck.get_mpz_t(), scale.get_mpz_t())) return false;
    ck /= scale;
    scale *= bp;
  }
  h = PolyZ(std::move(c));
  return true;
}

}  // namespace

QuasiPoly QuasiPoly::reduce_period() const {
  QuasiPoly cur = *this;
  for (Period p : prime_factors(period_)) {
    while (cur.period_ % p == 0) {
      const Period coarse = cur.period_ / p;
      std::vector<PolyZ> merged(coarse);
      bool ok = true;
      for (Period r = 0; r < coarse && ok; ++r) {
        // Old residues r + coarse*k, k < p, are n = coarse*(p*m + k) + r.
        ok = unscale(cur.components_[r], p, merged[r]);
        for (Period k = 1; k < p && ok; ++k) {
          ok = cur.components_[r + coarse * k] ==
               merged[r].compose_affine(BigInt(static_cast<unsigned long>(p)),
                                        BigInt(static_cast<unsigned long>(k)));
        }
      }
      if (!ok) break;
      cur = QuasiPoly(coarse, cur.boundary_, std::move(merged));
    }
  }
  return cur;
}

BigInt QuasiPoly::operator()(const BigInt& n) const {
  if (n <= boundary_)
    throw DomainError("evaluation at n = " + n.get_str() + " is not above the lower boundary " +
                      boundary_.get_str());
  BigInt t(static_cast<unsigned long>(period_));
  BigInt i, m;
  mpz_fdiv_qr(m.get_mpz_t(), i.get_mpz_t(), n.get_mpz_t(), t.get_mpz_t());
  return components_[i.get_ui()](m);
}

BigInt eval_qp(const QuasiPoly& q, const BigInt& n) { return q(n); }

QuasiPoly QuasiPoly::operator-() const {
  QuasiPoly r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

std::pair<QuasiPoly, QuasiPoly> common_refinement(const QuasiPoly& a, const QuasiPoly& b) {
  Period t = lcm_period(a.period(), b.period(), period_cap());
  return {a.refine(t), b.refine(t)};
}

namespace {

template <class Op>
QuasiPoly componentwise(const QuasiPoly& a, const QuasiPoly& b, Op op) {
  auto [x, y] = common_refinement(a, b);
  std::vector<PolyZ> out;
  out.reserve(x.period());
  for (Period i = 0; i < x.period(); ++i) out.push_back(op(x.component(i), y.component(i)));
  BigInt c = a.lower_boundary() > b.lower_boundary() ? a.lower_boundary() : b.lower_boundary();
  return QuasiPoly(x.period(), c, std::move(out));
}

}  // namespace

QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b) {
  return componentwise(a, b, [](const PolyZ& f, const PolyZ& g) { return f + g; });
}

QuasiPoly operator-(const QuasiPoly& a, const QuasiPoly& b) {
  return componentwise(a, b, [](const PolyZ& f, const PolyZ& g) { return f - g; });
}

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
  auto is_constant = [](const QuasiPoly& q) { return q.period() == 1 && q.component(0).degree() <= 0; };
  if (is_constant(a) || is_constant(b)) {
    const QuasiPoly& c = is_constant(a) ? a : b;
    const QuasiPoly& q = is_constant(a) ? b : a;
    const BigInt k = c.component(0).coeff(0);
    std::vector<PolyZ> out;
    out.reserve(q.period());
    for (const auto& f : q.components()) out.push_back(f * k);
    return QuasiPoly(q.period(), std::max(a.lower_boundary(), b.lower_boundary()), std::move(out));
  }
  return componentwise(a, b, [](const PolyZ& f, const PolyZ& g) { return f * g; });
}

std::string QuasiPoly::to_string() const {
  std::ostringstream os;
  os << "period " << period_ << ", valid for n > " << boundary_.get_str();
  for (Period i = 0; i < period_; ++i) {
    os << "\n  n = ";
    if (period_ > 1) os << period_ << "*m";
    else os << "m";
    if (i > 0) os << " + " << i;
    os << ": " << components_[i].to_string("m");
  }
  return os.str();
}

bool is_nonneg(const QuasiPoly& q) {
  for (const auto& c : q.components())
    if (eventual_sign(c) < 0) return false;
  return true;
}

bool is_strict_pos(const QuasiPoly& q) {
  for (const auto& c : q.components())
    if (eventual_sign(c) <= 0) return false;
  return true;
}

bool equals(const QuasiPoly& a, const QuasiPoly& b) {
  auto [x, y] = common_refinement(a, b);
  return x.components() == y.components();
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const QuasiPoly& q) {
  nlohmann::ordered_json j;
  j["period"] = q.period();
  if (q.lower_boundary().fits_ulong_p())
    j["lower_boundary"] = static_cast<std::uint64_t>(q.lower_boundary().get_ui());
  else
    j["lower_boundary"] = q.lower_boundary().get_str();
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : q.components()) {
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(x.get_str());
    comps.push_back(std::move(coeffs));
  }
  j["components"] = std::move(comps);
  return j.dump();
}

namespace {

BigInt json_integer(const nlohmann::json& v, const char* what) {
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()), 10);
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()), 10);
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  throw ParseError(std::string("quasi-polynomial JSON: ") + what + " must be an integer");
}

}  // namespace

QuasiPoly quasi_poly_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quasi-polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("period") || !j.contains("components"))
    throw ParseError("quasi-polynomial JSON: needs \"period\" and \"components\"");
  BigInt t = json_integer(j["period"], "period");
  if (t < 1 || !t.fits_ulong_p()) throw ParseError("quasi-polynomial JSON: bad period");
  BigInt c = j.contains("lower_boundary") ? json_integer(j["lower_boundary"], "lower_boundary")
                                          : BigInt(0);
  if (c < 0) throw ParseError("quasi-polynomial JSON: negative lower boundary");
  const auto& comps = j["components"];
  if (!comps.is_array() || comps.size() != t.get_ui())
    throw ParseError("quasi-polynomial JSON: components must list one polynomial per residue");
  std::vector<PolyZ> polys;
  for (const auto& comp : comps) {
    if (!comp.is_array()) throw ParseError("quasi-polynomial JSON: component must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& x : comp) coeffs.push_back(json_integer(x, "coefficient"));
    polys.emplace_back(std::move(coeffs));
  }
  return QuasiPoly(t.get_ui(), c, std::move(polys));
}

QuasiPoly parse_quasi_poly(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return quasi_poly_from_json(text);
  return QuasiPoly::from_poly(parse_poly(text));
}

// ---------------------------------------------------------------------------
// Assembly

QuasiPoly assemble_cases(std::vector<CaseValue> cases, Period cap) {
  if (cases.empty()) throw InvariantViolation("assemble_cases: no cases");
  Period l = 1;
  BigInt boundary = 0;
  for (const auto& c : cases) {
    l = lcm_period(l, c.period, cap);
    if (c.boundary > boundary) boundary = c.boundary;
  }
  std::vector<PolyZ> comps(l);
  std::vector<bool> seen(l, false);
  for (auto& c : cases) {
    // n = l*z + r with r = residue + period*t means x = (l/period)*z + t.
    const Period stride = l / c.period;
    const BigInt scale(static_cast<unsigned long>(stride));
    for (Period t = 0; t < stride; ++t) {
      Period r = c.residue + c.period * t;
      if (seen[r]) throw InvariantViolation("assemble_cases: overlapping residue classes");
      seen[r] = true;
      comps[r] = stride == 1 ? std::move(c.value) : c.value.compose_affine(scale, BigInt(static_cast<unsigned long>(t)));
    }
  }
  for (bool s : seen)
    if (!s) throw InvariantViolation("assemble_cases: residue classes do not cover");
  return QuasiPoly(l, boundary, std::move(comps)).reduce_period();
}

// ---------------------------------------------------------------------------
// QuasiRational

QuasiRational::QuasiRational(Period period, BigInt lower_boundary, std::vector<Fraction> components)
    : period_(period), boundary_(std::move(lower_boundary)), components_(std::move(components)) {
  if (period_ == 0 || components_.size() != period_)
    throw DomainError("quasi-rational function needs one fraction per residue class");
  if (boundary_ < 0) throw DomainError("lower boundary must be nonnegative");
  for (const auto& f : components_)
    if (f.denominator.is_zero()) throw DomainError("quasi-rational function: zero denominator");
}

QuasiRational QuasiRational::from_quasi_poly(const QuasiPoly& numerator,
                                             const QuasiPoly& denominator) {
  auto [a, b] = common_refinement(numerator, denominator);
  std::vector<Fraction> comps;
  for (Period i = 0; i < a.period(); ++i) comps.push_back({a.component(i), b.component(i)});
  BigInt c = std::max(numerator.lower_boundary(), denominator.lower_boundary());
  return QuasiRational(a.period(), c, std::move(comps));
}

BigRat QuasiRational::operator()(const BigInt& n) const {
  if (n <= boundary_)
    throw DomainError("evaluation at n = " + n.get_str() + " is not above the lower boundary");
  BigInt t(static_cast<unsigned long>(period_));
  BigInt i, m;
  mpz_fdiv_qr(m.get_mpz_t(), i.get_mpz_t(), n.get_mpz_t(), t.get_mpz_t());
  const auto& f = components_[i.get_ui()];
  BigInt den = f.denominator(m);
  if (den == 0) throw DomainError("quasi-rational function: denominator vanishes at n = " + n.get_str());
  BigRat r(f.numerator(m), den);
  r.canonicalize();
  return r;
}

QuasiPoly QuasiRational::to_quasi_poly() const {
  const Period cap = period_cap();
  std::vector<CaseValue> cases;
  for (Period i = 0; i < period_; ++i) {
    const auto& f = components_[i];
    auto [q, s] = divide_Q(f.numerator, f.denominator);
    // An integer-valued ratio of polynomials has a polynomial quotient.
    if (!s.is_zero())
      throw InvariantViolation("quasi-rational function is not integer-valued on residue " +
                               std::to_string(i));
    BigInt split = q.nonconstant_denominator();
    if (!split.fits_ulong_p() || split.get_ui() > cap / period_)
      throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
    const Period p = split.get_ui();
    // The denominator polynomial must not vanish above the boundary.
    BigInt local = cauchy_bound(f.denominator);
    BigInt bound = BigInt(static_cast<unsigned long>(period_)) * local + static_cast<unsigned long>(i);
    if (boundary_ > bound) bound = boundary_;
    for (Period j = 0; j < p; ++j) {
      PolyQ piece = q.compose_affine(split, BigInt(static_cast<unsigned long>(j)));
      if (piece.denominator() != 1)
        throw InvariantViolation("quasi-rational function is not integer-valued on residue " +
                                 std::to_string(i));
      cases.push_back({period_ * p, i + period_ * j, bound, piece.numerator()});
    }
  }
  return assemble_cases(cases, cap);
}

}  // namespace qpart
