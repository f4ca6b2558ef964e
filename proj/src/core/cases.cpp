#include "core/cases.hpp"

#include "core/errors.hpp"
#include "core/gdiv.hpp"

#include <utility>

namespace qpart {

void Case::require_local(const BigInt& bound) {
  BigInt b = BigInt(static_cast<unsigned long>(period_)) * bound + static_cast<unsigned long>(residue_);
  if (b > boundary_) boundary_ = b;
}

namespace {

Case* context_of(const SymInt& a, const SymInt& b) { return a.context() ? a.context() : b.context(); }

void require(Case* c, const BigInt& bound) {
  if (c != nullptr) c->require_local(bound);
}

}  // namespace

int sign(const SymInt& a) {
  require(a.context(), cauchy_bound(a.poly()));
  return eventual_sign(a.poly());
}

SymInt floor_div(const SymInt& a, const SymInt& b) {
  Case* c = context_of(a, b);
  const int sb = sign(b);
  if (sb == 0) throw DomainError("floor division by an eventually-zero quantity");
  if (sb < 0) return floor_div(-a, -b);
  DivResult r = gdiv_poly(a.poly(), b.poly());
  require(c, r.quotient.lower_boundary());
  if (r.quotient.period() > 1) {
    if (c == nullptr) throw InvariantViolation("periodic quotient of constants");
    c->split(r.quotient.period());
  }
  return {c, r.quotient.component(0)};
}

SymInt mod_pos(const SymInt& a, const SymInt& b) {
  if (sign(b) <= 0) throw DomainError("mod_pos: modulus must be eventually positive");
  return a - b * floor_div(a, b);
}

SymInt exact_div(const SymInt& a, const SymInt& b) {
  Case* c = context_of(a, b);
  if (b.poly().is_zero()) throw InvariantViolation("exact division by zero");
  auto [q, s] = divide_Q(a.poly(), b.poly());
  if (!s.is_zero())
    throw InvariantViolation("exact division failed: (" + a.poly().to_string("x") + ") / (" +
                             b.poly().to_string("x") + ")");
  BigInt split = q.nonconstant_denominator();
  if (split != 1) {
    if (c == nullptr) throw InvariantViolation("exact division of constants left a fraction");
    if (!split.fits_ulong_p()) throw DomainError("quasi-polynomial period exceeds the cap");
    c->split(split.get_ui());
  }
  if (q.denominator() != 1)
    throw InvariantViolation("exact division left a fractional constant: " + q.to_string("x"));
  return {c, q.numerator()};
}

std::vector<QuasiPoly> evaluate_by_cases(std::span<const QuasiPoly> inputs, const CaseFunction& fn,
                                         Period cap) {
  Period t0 = 1;
  BigInt c0 = 0;
  for (const auto& q : inputs) {
    t0 = lcm_period(t0, q.period(), cap);
    if (q.lower_boundary() > c0) c0 = q.lower_boundary();
  }

  std::vector<std::pair<Period, Period>> pending;
  for (Period i = t0; i-- > 0;) pending.emplace_back(t0, i);

  std::vector<std::vector<CaseValue>> outputs;
  while (!pending.empty()) {
    auto [t, i] = pending.back();
    pending.pop_back();
    Case ctx(t, i, c0);
    std::vector<SymInt> args;
    args.reserve(inputs.size());
    for (const auto& q : inputs) args.emplace_back(&ctx, q.restrict_to(t, i));
    try {
      std::vector<SymInt> out = fn(args);
      if (outputs.empty()) outputs.resize(out.size());
      if (out.size() != outputs.size()) throw InvariantViolation("case function changed its arity");
      for (std::size_t k = 0; k < out.size(); ++k)
        outputs[k].push_back({t, i, ctx.boundary(), out[k].poly()});
    } catch (const CaseSplit& s) {
      if (s.factor < 2) throw InvariantViolation("degenerate case split");
      if (s.factor > cap / t)
        throw DomainError("quasi-polynomial period exceeds the cap of " + std::to_string(cap));
      const Period nt = t * s.factor;
      for (Period j = s.factor; j-- > 0;) pending.emplace_back(nt, i + t * j);
    }
  }

  std::vector<QuasiPoly> result;
  result.reserve(outputs.size());
  for (const auto& cases : outputs) result.push_back(assemble_cases(cases, cap));
  return result;
}

}  // namespace qpart
