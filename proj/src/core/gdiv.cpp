#include "core/gdiv.hpp"

#include "core/arith.hpp"
#include "core/errors.hpp"

namespace qpart {

DivResult gdiv_poly(const PolyZ& f, const PolyZ& g) {
  if (g.is_zero()) throw DomainError("generalized division by the zero polynomial");
  if (eventual_sign(g) < 0) {
    // f = P*g + r  <=>  f = (-P)*(-g) + r, with the same remainder condition.
    DivResult r = gdiv_poly(f, -g);
    return {-r.quotient, r.remainder};
  }

  // f/g = q + s/g with s/g -> 0. On n = D*m + i the rational quotient is an
  // integer polynomial in m plus a constant fraction c_i in [0, 1); the
  // floor of f/g is that polynomial, lowered by one when c_i = 0 and s/g
  // approaches zero from below.
  auto [q, s] = divide_Q(f, g);
  const BigInt d = q.nonconstant_denominator();
  const Period cap = period_cap();
  if (!d.fits_ulong_p() || d.get_ui() > cap)
    throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
  const Period period = d.get_ui();
  const int s_sign = eventual_sign(s.numerator());

  BigRat min_gap = 1;
  std::vector<PolyZ> quotients, remainders;
  quotients.reserve(period);
  remainders.reserve(period);
  for (Period i = 0; i < period; ++i) {
    const BigInt shift(static_cast<unsigned long>(i));
    PolyQ qi = q.compose_affine(d, shift);
    BigRat c0 = qi.coeff(0);
    BigInt whole = floor_div(c0.get_num(), c0.get_den());
    BigRat frac = c0 - whole;

    std::vector<BigInt> coeffs(std::max(qi.degree() + 1, 1));
    for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] = qi.coeff(k).get_num();
    coeffs[0] = whole;
    if (frac > 0) {
      BigRat gap = frac < 1 - frac ? frac : BigRat(1 - frac);
      if (gap < min_gap) min_gap = gap;
    } else if (s_sign < 0) {
      coeffs[0] -= 1;
    }
    PolyZ quotient(std::move(coeffs));
    PolyZ fi = f.compose_affine(d, shift);
    PolyZ gi = g.compose_affine(d, shift);
    remainders.push_back(fi - gi * quotient);
    quotients.push_back(std::move(quotient));
  }

  std::vector<PolyZ> signs{g};
  std::vector<RatioGap> ratios;
  if (s_sign != 0) {
    // |s_num / (s_den * g)| < gap  <=>  |s_num / g| < gap * s_den.
    ratios.push_back({s.numerator(), g, min_gap * BigRat(s.denominator())});
  }
  BigInt boundary = stable_bound(signs, ratios);
  return {QuasiPoly(period, boundary, std::move(quotients)).reduce_period(),
          QuasiPoly(period, boundary, std::move(remainders)).reduce_period()};
}

DivResult gdiv_R(const QuasiPoly& f, const QuasiPoly& g) {
  const Period cap = period_cap();
  auto [a, b] = common_refinement(f, g);
  const Period t = a.period();
  const BigInt base = std::max(f.lower_boundary(), g.lower_boundary());
  std::vector<CaseValue> quo, rem;
  for (Period i = 0; i < t; ++i) {
    if (b.component(i).is_zero()) {
      quo.push_back({t, i, base, PolyZ()});
      rem.push_back({t, i, base, a.component(i)});
      continue;
    }
    DivResult local = gdiv_poly(a.component(i), b.component(i));
    // Local results live on m with n = t*m + i.
    auto lift = [&](const QuasiPoly& r, std::vector<CaseValue>& out) {
      const Period p = r.period();
      if (p > cap / t) throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
      BigInt bound = BigInt(static_cast<unsigned long>(t)) * r.lower_boundary() +
                     static_cast<unsigned long>(i);
      if (base > bound) bound = base;
      for (Period j = 0; j < p; ++j) out.push_back({t * p, i + t * j, bound, r.component(j)});
    };
    lift(local.quotient, quo);
    lift(local.remainder, rem);
  }
  return {assemble_cases(quo, cap), assemble_cases(rem, cap)};
}

bool divides(const QuasiPoly& g, const QuasiPoly& f) {
  for (const auto& c : g.components())
    if (c.is_zero()) throw DomainError("divisor vanishes identically on a residue class");
  return gdiv_R(f, g).remainder.is_zero();
}

}  // namespace qpart
