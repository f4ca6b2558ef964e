// Greatest common divisors and Bezout coefficients in R.
//
// On one residue class the inputs are integer polynomials A, B in the local
// variable x. Their gcd over Q, made primitive, splits off a polynomial
// factor h: A = h*A1, B = h*B1 with A1, B1 coprime over Q, and the extended
// Euclidean algorithm over Q yields U, V in Z[x] and a positive integer R
// with A1*U + B1*V = R. Every common divisor of A1(x) and B1(x) divides R,
// so gcd(A1(x), B1(x)) = gcd(A1(x), B1(x), R) depends only on x mod R. That
// pattern is computed one prime power of R at a time and reduced to its
// least period; the pointwise gcd is h times the pattern.

#include "core/gdiv.hpp"

#include "core/arith.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

namespace qpart {

namespace {

// Prime-power blocks above this size are not tabulated.
constexpr unsigned long kMaxBlock = 20'000'000;
constexpr unsigned long kTrialLimit = 1'000'000;

[[noreturn]] void cap_exceeded(Period cap) {
  throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
}

// Dense rational polynomials for the extended Euclidean algorithm over Q.
using QVec = std::vector<BigRat>;

void trim(QVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QVec to_qvec(const PolyZ& p) {
  QVec out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

QVec sub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::pair<QVec, QVec> divmod(QVec a, const QVec& b) {
  QVec q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRat(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    BigRat c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

BigInt lcm_denominators(const QVec& p, BigInt acc) {
  for (const auto& c : p) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

PolyZ scale_to_z(const QVec& p, const BigInt& factor) {
  std::vector<BigInt> out;
  for (const auto& c : p) {
    BigRat v = c * BigRat(factor);
    if (v.get_den() != 1) throw InvariantViolation("cofactor scaling left a fraction");
    out.push_back(v.get_num());
  }
  return PolyZ(std::move(out));
}

// Primitive integer multiple with positive leading coefficient.
PolyZ primitive(const QVec& p) {
  PolyZ z = scale_to_z(p, lcm_denominators(p, 1));
  BigInt content = 0;
  for (const auto& c : z.coeffs()) content = gcd_of(content, c);
  std::vector<BigInt> out;
  for (const auto& c : z.coeffs()) out.push_back(exact_div(c, content));
  PolyZ r(std::move(out));
  return eventual_sign(r) < 0 ? -r : r;
}

PolyZ exact_quotient(const PolyZ& a, const PolyZ& h) {
  auto [q, s] = divide_Q(a, h);
  if (!s.is_zero() || q.denominator() != 1)
    throw InvariantViolation("primitive factor does not divide exactly");
  return q.numerator();
}

PolyZ divide_coefficients(const PolyZ& p, const BigInt& r) {
  std::vector<BigInt> out;
  for (const auto& c : p.coeffs()) out.push_back(exact_div(c, r));
  return PolyZ(std::move(out));
}

// A = h*A1, B = h*B1 and A1*U + B1*V = R with R > 0.
struct Split {
  PolyZ h, a1, b1, u, v;
  BigInt r;
};

Split split_coprime(const PolyZ& a, const PolyZ& b) {
  QVec r0 = to_qvec(a), r1 = to_qvec(b);
  QVec s0{BigRat(1)}, s1{}, t0{}, t1{BigRat(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    QVec s2 = sub(s0, mul(q, s1));
    QVec t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Split out;
  out.h = primitive(r0);
  out.a1 = exact_quotient(a, out.h);
  out.b1 = exact_quotient(b, out.h);
  // s0*A + t0*B = r0 = c*h, hence (s0/c)*A1 + (t0/c)*B1 = 1.
  const BigRat c = r0.back() / BigRat(out.h.lead());
  for (auto& x : s0) x /= c;
  for (auto& x : t0) x /= c;
  out.r = lcm_denominators(t0, lcm_denominators(s0, 1));
  out.u = scale_to_z(s0, out.r);
  out.v = scale_to_z(t0, out.r);
  if (out.a1 * out.u + out.b1 * out.v != PolyZ::constant(out.r))
    throw InvariantViolation("cofactor identity failed");
  return out;
}

struct PrimePower {
  BigInt prime;
  unsigned exponent;
  BigInt value;
};

std::vector<PrimePower> factor(BigInt n) {
  std::vector<PrimePower> out;
  auto pull = [&](const BigInt& p) {
    PrimePower pp{p, 0, 1};
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      pp.value *= p;
      ++pp.exponent;
    }
    if (pp.exponent > 0) out.push_back(pp);
  };
  pull(2);
  for (unsigned long p = 3; p <= kTrialLimit && BigInt(p) * p <= n; p += 2) pull(p);
  if (n > 1) {
    if (n > BigInt(kTrialLimit) * kTrialLimit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw DomainError("gcd period bound " + n.get_str() + " could not be factored");
    out.push_back({n, 1, n});
  }
  return out;
}

PolyZ reduce_mod(const PolyZ& f, const BigInt& m) {
  std::vector<BigInt> c;
  for (const auto& x : f.coeffs()) c.push_back(mod_pos(x, m));
  return PolyZ(std::move(c));
}

// u*a + v*b = 1 in F_p[x], when a and b are coprime there.
struct ModCofactors {
  PolyZ u, v;
};

std::optional<ModCofactors> cofactors_mod(const PolyZ& a, const PolyZ& b, const BigInt& p) {
  PolyZ r0 = reduce_mod(a, p), r1 = reduce_mod(b, p);
  PolyZ s0 = PolyZ::constant(1), s1, t0, t1 = PolyZ::constant(1);
  while (!r1.is_zero()) {
    const BigInt inv = inverse_mod_of(r1.lead(), p);
    PolyZ q;
    while (!r0.is_zero() && r0.degree() >= r1.degree()) {
      PolyZ term = PolyZ::monomial(mod_pos(r0.lead() * inv, p), r0.degree() - r1.degree());
      q += term;
      r0 = reduce_mod(r0 - term * r1, p);
    }
    PolyZ s2 = reduce_mod(s0 - q * s1, p), t2 = reduce_mod(t0 - q * t1, p);
    std::swap(r0, r1);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) return std::nullopt;
  const BigInt inv = inverse_mod_of(r0.lead(), p);
  return ModCofactors{reduce_mod(s0 * inv, p), reduce_mod(t0 * inv, p)};
}

// x -> gcd(A1(x), B1(x)) restricted to one prime power, tabulated over its
// least period.
struct BlockPattern {
  Period period = 1;
  std::vector<unsigned long> values{1};
};

BlockPattern tabulate(const PolyZ& a, const PolyZ& b, const PrimePower& pp) {
  if (!pp.value.fits_ulong_p() || pp.value.get_ui() > kMaxBlock) {
    if (cofactors_mod(a, b, pp.prime)) return {};
    throw DomainError("gcd period would include the prime power " + pp.value.get_str() +
                      ", beyond the tabulation limit");
  }
  const unsigned long m = pp.value.get_ui();
  auto residues = [&](const PolyZ& f) {
    std::vector<unsigned long> c;
    for (const auto& x : f.coeffs()) c.push_back(mod_pos(x, pp.value).get_ui());
    return c;
  };
  const auto ca = residues(a), cb = residues(b);
  auto eval = [m](const std::vector<unsigned long>& c, unsigned long x) {
    unsigned long v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = (v * x + c[k]) % m;
    return v;
  };
  BlockPattern out;
  out.values.resize(m);
  for (unsigned long x = 0; x < m; ++x)
    out.values[x] = std::gcd(std::gcd(eval(ca, x), eval(cb, x)), m);
  const unsigned long p = pp.prime.get_ui();
  unsigned long per = m;
  while (per % p == 0) {
    const unsigned long smaller = per / p;
    bool periodic = true;
    for (unsigned long x = smaller; x < per && periodic; ++x)
      periodic = out.values[x] == out.values[x % smaller];
    if (!periodic) break;
    per = smaller;
  }
  out.period = per;
  out.values.resize(per);
  return out;
}

struct ClassGcd {
  BigInt local_bound;     // valid for x > local_bound
  Period period = 1;      // split of the class
  std::vector<PolyZ> values;
};

ClassGcd class_gcd(const PolyZ& a, const PolyZ& b, Period room) {
  if (a.is_zero() || b.is_zero()) {
    const PolyZ& f = a.is_zero() ? b : a;
    return {cauchy_bound(f), 1, {abs_poly(f)}};
  }
  Split s = split_coprime(a, b);
  std::vector<BlockPattern> blocks;
  Period total = 1;
  for (const auto& pp : factor(s.r)) {
    BlockPattern bp = tabulate(s.a1, s.b1, pp);
    if (bp.period > room / total) cap_exceeded(period_cap());
    total *= bp.period;
    if (bp.period > 1 || bp.values.front() != 1) blocks.push_back(std::move(bp));
  }
  ClassGcd out{cauchy_bound(s.h), total, {}};
  out.values.reserve(total);
  for (Period j = 0; j < total; ++j) {
    BigInt g = 1;
    for (const auto& bp : blocks) g *= bp.values[j % bp.period];
    out.values.push_back(s.h.compose_affine(BigInt(static_cast<unsigned long>(total)),
                                            BigInt(static_cast<unsigned long>(j))) *
                         g);
  }
  return out;
}

QuasiPoly gcd2(const QuasiPoly& f, const QuasiPoly& g) {
  const Period cap = period_cap();
  auto [a, b] = common_refinement(f, g);
  const Period t = a.period();
  const BigInt base = std::max(f.lower_boundary(), g.lower_boundary());
  std::vector<CaseValue> cases;
  for (Period i = 0; i < t; ++i) {
    ClassGcd c = class_gcd(a.component(i), b.component(i), cap / t);
    BigInt bound = BigInt(static_cast<unsigned long>(t)) * c.local_bound + static_cast<unsigned long>(i);
    if (base > bound) bound = base;
    for (Period j = 0; j < c.period; ++j) cases.push_back({t * c.period, i + t * j, bound, c.values[j]});
  }
  return assemble_cases(std::move(cases), cap);
}

struct ClassBezout {
  Period period = 1;
  BigInt local_bound;
  std::vector<PolyZ> gcd, u, v;
};

// How one prime power p^e of R enters the Bezout construction.
struct BezoutBlock {
  PrimePower pp;
  Period split = 1;                  // residue classes this block needs
  std::optional<ModCofactors> unit;  // A1, B1 coprime in F_p[x]
  bool coprime_values = true;        // p never divides both A1(x) and B1(x)
  BigInt idempotent;                 // 1 mod p^e, 0 mod the rest of R
};

// (u, v) with u*A1 + v*B1 == 1 (mod m) coefficientwise, from a pair that
// achieves it mod p; Newton steps w -> w*(2 - w) square the modulus.
void lift_unit(PolyZ& u, PolyZ& v, const PolyZ& a1, const PolyZ& b1, const BigInt& p,
               const BigInt& m) {
  for (BigInt reached = p; reached < m; reached *= reached) {
    PolyZ w = u * a1 + v * b1;
    PolyZ factor = PolyZ::constant(2) - w;
    u = reduce_mod(u * factor, m);
    v = reduce_mod(v * factor, m);
  }
}

struct SmallBezout {
  long g, s, t;
};

// s*a + t*b = g for non-negative a, b.
SmallBezout small_bezout(long a, long b) {
  long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const long q = a / b;
    a = std::exchange(b, a - q * b);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {a, s0, t0};
}

unsigned long eval_mod(const std::vector<unsigned long>& c, unsigned long x, unsigned long m) {
  unsigned long v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = (v * x + c[k]) % m;
  return v;
}

// p(scale*x + shift) / r, requiring exact division of every coefficient.
PolyZ compose_divide(std::vector<BigInt> c, const BigInt& scale, const BigInt& shift, const BigInt& r) {
  std::vector<BigInt> out(c.size());
  BigInt t;
  for (std::size_t i = c.size(); i-- > 0;) {
    for (std::size_t k = c.size() - i; k-- > 1;) {
      mpz_mul(out[k].get_mpz_t(), out[k].get_mpz_t(), shift.get_mpz_t());
      mpz_addmul(out[k].get_mpz_t(), out[k - 1].get_mpz_t(), scale.get_mpz_t());
    }
    mpz_mul(out[0].get_mpz_t(), out[0].get_mpz_t(), shift.get_mpz_t());
    out[0] += c[i];
  }
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), r.get_mpz_t()))
      throw InvariantViolation("Bezout identity failed on a class");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t());
  }
  return PolyZ(std::move(out));
}

std::vector<BigInt> dense(const PolyZ& p, std::size_t size) {
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  out.resize(size);
  return out;
}

// Classes where every block either is a unit in F_p[x] or has A1, B1
// constant mod p^e. Unit cofactors are lifted once in n, so on class j
//   u_sum = cu + g*UI,  v_sum = cv + g*VI
// and u = u_sum - z*U with z = (u_sum*A1 + v_sum*B1 - g)/R expands to
//   R*u = cu*B1V - cv*B1U + g*(UI*B1V - VI*B1U + U)
//   R*v = cv*A1U - cu*A1V + g*(VI*A1U - UI*A1V + V),
// which satisfies u*A1 + v*B1 = g once the division by R is exact.
void fixed_combination_classes(const Split& s, const std::vector<BezoutBlock>& blocks,
                               const BigInt& scale, ClassBezout& out) {
  PolyZ ui, vi;
  struct Residues {
    unsigned long m;
    std::vector<unsigned long> a, b;
    const BigInt* idempotent;
  };
  std::vector<Residues> constant_blocks;
  for (const auto& blk : blocks) {
    const BigInt& m = blk.pp.value;
    if (blk.unit) {
      PolyZ uk = blk.unit->u, vk = blk.unit->v;
      lift_unit(uk, vk, s.a1, s.b1, blk.pp.prime, m);
      ui += reduce_mod(uk * blk.idempotent, s.r);
      vi += reduce_mod(vk * blk.idempotent, s.r);
      continue;
    }
    Residues res{m.get_ui(), {}, {}, &blk.idempotent};
    for (const auto& x : s.a1.coeffs()) res.a.push_back(mod_pos(x, m).get_ui());
    for (const auto& x : s.b1.coeffs()) res.b.push_back(mod_pos(x, m).get_ui());
    constant_blocks.push_back(std::move(res));
  }
  const PolyZ bv = s.b1 * s.v, bu = s.b1 * s.u, au = s.a1 * s.u, av = s.a1 * s.v;
  const PolyZ wu = ui * bv - vi * bu + s.u, wv = vi * au - ui * av + s.v;
  std::size_t size = 1;
  for (const PolyZ* p : {&bv, &bu, &au, &av, &wu, &wv})
    size = std::max<std::size_t>(size, p->coeffs().size());
  const auto BV = dense(bv, size), BU = dense(bu, size), AU = dense(au, size), AV = dense(av, size);
  const auto WU = dense(wu, size), WV = dense(wv, size);
  const bool h_constant = s.h.degree() <= 0;

  std::vector<unsigned long> local(constant_blocks.size());
  std::vector<long> su(constant_blocks.size()), sv(constant_blocks.size());
  BigInt g, cu, cv, cof, term;
  for (Period j = 0; j < out.period; ++j) {
    g = 1;
    for (std::size_t k = 0; k < constant_blocks.size(); ++k) {
      const Residues& res = constant_blocks[k];
      const unsigned long x = j % res.m;
      const long ra = static_cast<long>(eval_mod(res.a, x, res.m));
      const long rb = static_cast<long>(eval_mod(res.b, x, res.m));
      const SmallBezout e = small_bezout(ra, rb);
      const SmallBezout f = small_bezout(e.g, static_cast<long>(res.m));
      const long m = static_cast<long>(res.m);
      local[k] = static_cast<unsigned long>(f.g);
      su[k] = (f.s % m) * (e.s % m) % m;
      sv[k] = (f.s % m) * (e.t % m) % m;
      mpz_mul_ui(g.get_mpz_t(), g.get_mpz_t(), local[k]);
    }
    cu = 0;
    cv = 0;
    for (std::size_t k = 0; k < constant_blocks.size(); ++k) {
      mpz_divexact_ui(cof.get_mpz_t(), g.get_mpz_t(), local[k]);
      cof *= *constant_blocks[k].idempotent;
      mpz_mul_si(term.get_mpz_t(), cof.get_mpz_t(), su[k]);
      cu += term;
      mpz_mul_si(term.get_mpz_t(), cof.get_mpz_t(), sv[k]);
      cv += term;
    }
    mpz_mod(cu.get_mpz_t(), cu.get_mpz_t(), s.r.get_mpz_t());
    mpz_mod(cv.get_mpz_t(), cv.get_mpz_t(), s.r.get_mpz_t());

    std::vector<BigInt> nu(size), nv(size);
    for (std::size_t k = 0; k < size; ++k) {
      mpz_mul(nu[k].get_mpz_t(), cu.get_mpz_t(), BV[k].get_mpz_t());
      mpz_submul(nu[k].get_mpz_t(), cv.get_mpz_t(), BU[k].get_mpz_t());
      mpz_addmul(nu[k].get_mpz_t(), g.get_mpz_t(), WU[k].get_mpz_t());
      mpz_mul(nv[k].get_mpz_t(), cv.get_mpz_t(), AU[k].get_mpz_t());
      mpz_submul(nv[k].get_mpz_t(), cu.get_mpz_t(), AV[k].get_mpz_t());
      mpz_addmul(nv[k].get_mpz_t(), g.get_mpz_t(), WV[k].get_mpz_t());
    }
    const BigInt shift(static_cast<unsigned long>(j));
    out.u.push_back(compose_divide(std::move(nu), scale, shift, s.r));
    out.v.push_back(compose_divide(std::move(nv), scale, shift, s.r));
    out.gcd.push_back(h_constant ? s.h * g : s.h.compose_affine(scale, shift) * g);
  }
}

ClassBezout class_bezout(const PolyZ& a, const PolyZ& b, Period room) {
  if (a.is_zero() && b.is_zero()) return {1, 0, {PolyZ()}, {PolyZ()}, {PolyZ()}};
  if (b.is_zero())
    return {1, cauchy_bound(a), {abs_poly(a)}, {PolyZ::constant(eventual_sign(a))}, {PolyZ()}};
  if (a.is_zero())
    return {1, cauchy_bound(b), {abs_poly(b)}, {PolyZ()}, {PolyZ::constant(eventual_sign(b))}};

  Split s = split_coprime(a, b);
  std::vector<BezoutBlock> blocks;
  Period period = 1;
  for (const auto& pp : factor(s.r)) {
    BezoutBlock blk{pp, 1, cofactors_mod(s.a1, s.b1, pp.prime), true, 0};
    if (!blk.unit) {
      // The split is p or p^e, so a prime beyond the room is refused untabulated.
      if (!pp.prime.fits_ulong_p() || pp.prime.get_ui() > room / period) cap_exceeded(period_cap());
      BlockPattern pat = tabulate(s.a1, s.b1, pp);
      blk.coprime_values = pat.period == 1 && pat.values.front() == 1;
      if (!pp.prime.fits_ulong_p()) cap_exceeded(period_cap());
      blk.split = blk.coprime_values ? pp.prime.get_ui() : pp.value.get_ui();
    }
    if (blk.split > room / period) cap_exceeded(period_cap());
    period *= blk.split;
    const BigInt rest = s.r / pp.value;
    blk.idempotent = rest * inverse_mod_of(mod_pos(rest, pp.value), pp.value);
    blocks.push_back(std::move(blk));
  }

  ClassBezout out;
  out.period = period;
  out.local_bound = cauchy_bound(s.h);
  out.gcd.reserve(period);
  out.u.reserve(period);
  out.v.reserve(period);
  const BigInt scale(static_cast<unsigned long>(period));
  bool per_class_lift = false;
  for (const auto& blk : blocks) per_class_lift |= blk.coprime_values && !blk.unit;
  if (!per_class_lift) {
    fixed_combination_classes(s, blocks, scale, out);
    return out;
  }
  for (Period j = 0; j < period; ++j) {
    const BigInt shift(static_cast<unsigned long>(j));
    const PolyZ a1 = s.a1.compose_affine(scale, shift);
    const PolyZ b1 = s.b1.compose_affine(scale, shift);
    const BigInt a0 = a1.coeff(0), b0 = b1.coeff(0);

    // The gcd on this class, one prime power at a time.
    BigInt g = 1;
    std::vector<BigInt> local(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const BigInt& m = blocks[k].pp.value;
      local[k] = gcd_of(gcd_of(mod_pos(a0, m), mod_pos(b0, m)), m);
      if (blocks[k].coprime_values) local[k] = 1;
      g *= local[k];
    }

    // Per block, a combination congruent to g mod p^e; glued by CRT.
    PolyZ u_sum, v_sum;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const BezoutBlock& blk = blocks[k];
      const BigInt& m = blk.pp.value;
      PolyZ uk, vk;
      if (blk.coprime_values) {
        if (blk.unit) {
          uk = blk.unit->u.compose_affine(scale, shift);
          vk = blk.unit->v.compose_affine(scale, shift);
        } else {
          // A1, B1 are constant mod p on this class and not both divisible by p.
          Bezout2<BigInt> e = extended_gcd(mod_pos(a0, blk.pp.prime), mod_pos(b0, blk.pp.prime));
          Bezout2<BigInt> f = extended_gcd(e.gcd, blk.pp.prime);
          uk = PolyZ::constant(f.s * e.s);
          vk = PolyZ::constant(f.s * e.t);
        }
        lift_unit(uk, vk, a1, b1, blk.pp.prime, m);
        uk = uk * g;
        vk = vk * g;
      } else {
        // A1, B1 are constant mod p^e on this class.
        const BigInt ra = mod_pos(a0, m), rb = mod_pos(b0, m);
        Bezout2<BigInt> e = ra == 0 && rb == 0 ? Bezout2<BigInt>{0, 0, 0} : extended_gcd(ra, rb);
        Bezout2<BigInt> f = extended_gcd(e.gcd, m);
        const BigInt cofactor = g / local[k];
        uk = PolyZ::constant(f.s * e.s * cofactor);
        vk = PolyZ::constant(f.s * e.t * cofactor);
      }
      u_sum += reduce_mod(uk * blk.idempotent, s.r);
      v_sum += reduce_mod(vk * blk.idempotent, s.r);
    }
    // u_sum*A1 + v_sum*B1 = g + R*z, and A1*U + B1*V = R.
    PolyZ z = divide_coefficients(u_sum * a1 + v_sum * b1 - PolyZ::constant(g), s.r);
    PolyZ u = u_sum - z * s.u.compose_affine(scale, shift);
    PolyZ v = v_sum - z * s.v.compose_affine(scale, shift);
    if (u * a1 + v * b1 != PolyZ::constant(g)) throw InvariantViolation("Bezout identity failed on a class");
    out.gcd.push_back(s.h.compose_affine(scale, shift) * g);
    out.u.push_back(std::move(u));
    out.v.push_back(std::move(v));
  }
  return out;
}

struct Bezout2Q {
  QuasiPoly gcd, u, v;
};

Bezout2Q bezout2(const QuasiPoly& f, const QuasiPoly& g) {
  const Period cap = period_cap();
  auto [a, b] = common_refinement(f, g);
  const Period t = a.period();
  const BigInt base = std::max(f.lower_boundary(), g.lower_boundary());
  std::vector<CaseValue> gs, us, vs;
  for (Period i = 0; i < t; ++i) {
    ClassBezout c = class_bezout(a.component(i), b.component(i), cap / t);
    BigInt bound = BigInt(static_cast<unsigned long>(t)) * c.local_bound + static_cast<unsigned long>(i);
    if (base > bound) bound = base;
    for (Period j = 0; j < c.period; ++j) {
      const Period p = t * c.period, r = i + t * j;
      gs.push_back({p, r, bound, std::move(c.gcd[j])});
      us.push_back({p, r, bound, std::move(c.u[j])});
      vs.push_back({p, r, bound, std::move(c.v[j])});
    }
  }
  return {assemble_cases(std::move(gs), cap), assemble_cases(std::move(us), cap),
          assemble_cases(std::move(vs), cap)};
}

void require_some_nonzero(const std::vector<QuasiPoly>& fs) {
  if (fs.empty()) throw DomainError("gcd of an empty list");
  for (const auto& f : fs)
    if (!f.is_zero()) return;
  throw DomainError("gcd of all-zero input is undefined");
}

}  // namespace

QuasiPoly ggcd(const std::vector<QuasiPoly>& fs) {
  require_some_nonzero(fs);
  QuasiPoly d = fs.front();
  if (fs.size() == 1) return gcd2(d, QuasiPoly());
  for (std::size_t k = 1; k < fs.size(); ++k) d = gcd2(d, fs[k]);
  return d;
}

BezoutResult bezout(const std::vector<QuasiPoly>& fs) {
  require_some_nonzero(fs);
  BezoutResult out{QuasiPoly(), std::vector<QuasiPoly>(fs.size())};
  for (std::size_t k = 0; k < fs.size(); ++k) {
    Bezout2Q step = bezout2(out.gcd, fs[k]);
    for (std::size_t j = 0; j < k; ++j) out.coefficients[j] = out.coefficients[j] * step.u;
    out.coefficients[k] = step.v;
    out.gcd = step.gcd;
  }
  return out;
}

QuasiPoly inverse_mod(const QuasiPoly& a, const QuasiPoly& b) {
  for (const auto& c : b.components())
    if (c.is_zero()) throw DomainError("inverse modulo a quasi-polynomial that vanishes on a residue class");
  BezoutResult r = bezout({a, b});
  if (!equals(r.gcd, QuasiPoly::constant(1)))
    throw DomainError("inverse requested for non-coprime quasi-polynomials");
  return gdiv_R(r.coefficients[0], b).remainder;
}

}  // namespace qpart
