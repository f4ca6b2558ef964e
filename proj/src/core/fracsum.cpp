#include "core/fracsum.hpp"

#include "core/cases.hpp"
#include "core/errors.hpp"
#include "core/fracsum_impl.hpp"

namespace qpart {

namespace {

void require_modulus(const BigInt& r5) {
  if (r5 < 1) throw DomainError("fractional-part sum needs r5 >= 1, got " + r5.get_str());
}

detail::SumArgs<BigInt> args_of(const FracSumInstance& s) { return {s.r1, s.r2, s.r3, s.r4, s.r5}; }

FracSumInstance instance_of(const detail::SumArgs<BigInt>& a) {
  return {a.lo, a.hi, a.shift, a.mult, a.modulus};
}

}  // namespace

BigInt sum_bruteforce(const FracSumInstance& s) {
  require_modulus(s.r5);
  BigInt total = 0;
  BigInt term = mod_pos(s.r3 + s.r4 * s.r1, s.r5);
  const BigInt step = mod_pos(s.r4, s.r5);
  for (BigInt x = s.r1; x <= s.r2; ++x) {
    total += term;
    term += step;
    if (term >= s.r5) term -= s.r5;
  }
  return total;
}

BigInt sum_oriented(const FracSumInstance& s) {
  if (s.r2 >= s.r1 - 1) return sum_bruteforce(s);
  return -sum_bruteforce({s.r2 + 1, s.r1 - 1, s.r3, s.r4, s.r5});
}

LemmaOutcome lemma_step(const FracSumInstance& s) {
  require_modulus(s.r5);
  const BigInt g1 = mod_pos(s.r4, s.r5);
  if (g1 == 0) return {LemmaStatus::degenerate_modulus, 0};
  if (s.r1 > s.r2) return {LemmaStatus::ok, 0};
  const BigInt& r3 = s.r3;
  const BigInt& r5 = s.r5;
  const BigInt i0 = floor_div(r3 + g1 * s.r1, r5);
  const BigInt it = floor_div(r3 + g1 * s.r2, r5);
  if (it < i0 + 1) return {LemmaStatus::narrow_window, 0};

  // sum_{x=a}^{b} (r3 + g1*x - i*r5)
  auto block = [&](const BigInt& a, const BigInt& b, const BigInt& i) -> BigInt {
    if (a > b) return 0;
    return detail::linear_sum<BigInt>(a, b, BigInt(r3 - i * r5), g1);
  };
  BigInt total = block(s.r1, floor_div((i0 + 1) * r5 - r3, g1), i0);
  for (BigInt i = i0 + 1; i <= it - 1; ++i) {
    BigInt l1 = floor_div(i * r5 - r3, g1);
    BigInt l2 = floor_div((i + 1) * r5 - r3, g1);
    total += block(l1 + 1, l2, i);
  }
  total += block(floor_div(it * r5 - r3, g1) + 1, s.r2, it);

  // Blocks start at floor((i*r5 - r3)/g1) + 1, one too late when that
  // quotient is exact; each such i in [i0+1, it] overcounts by r5.
  BigInt q = 0;
  const BigInt d = gcd_of(r5, g1);
  if (mod_pos(r3, d) == 0) {
    const BigInt r5_red = exact_div(r5, d);
    const BigInt g1_red = exact_div(g1, d);
    const BigInt r3_red = exact_div(r3, d);
    const BigInt inv = inverse_mod_of(r5_red, g1_red);
    const BigInt r = mod_pos((r3_red - (i0 + 1) * r5_red) * inv, g1_red);
    q = floor_div(it - i0 - 1 - r, g1_red) + 1;
  }
  return {LemmaStatus::ok, total - q * r5};
}

BigInt sum_lemma(const FracSumInstance& s) {
  LemmaOutcome o = lemma_step(s);
  switch (o.status) {
    case LemmaStatus::ok:
      return o.value;
    case LemmaStatus::degenerate_modulus:
      return (s.r2 - s.r1 + 1) * mod_pos(s.r3, s.r5);
    case LemmaStatus::narrow_window:
      break;
  }
  const BigInt g = mod_pos(s.r4, s.r5);
  return detail::narrow_sum(args_of(s), g, floor_div(s.r3 + g * s.r1, s.r5),
                            floor_div(s.r3 + g * s.r2, s.r5));
}

ReciprocityStep reciprocity_step(const FracSumInstance& s) {
  require_modulus(s.r5);
  const BigInt g = mod_pos(s.r4, s.r5);
  if (g == 0) throw DomainError("reciprocity step: r5 divides r4 (degenerate modulus)");
  auto a = args_of(s);
  const BigInt i0 = floor_div(s.r3 + g * s.r1, s.r5);
  const BigInt it = floor_div(s.r3 + g * s.r2, s.r5);
  auto rec = detail::reciprocity<BigInt>(a, g, i0, it);
  BigRat value(rec.twice_g_a, BigInt(2 * g));
  value.canonicalize();
  return {value, {rec.lo2, rec.hi2, -s.r3, s.r5, g}};
}

EuclidChain euclid_chain(const FracSumInstance& s) {
  require_modulus(s.r5);
  std::vector<detail::ChainRecord<BigInt>> trace;
  auto res = detail::sum_chain(args_of(s), &trace);
  EuclidChain chain;
  for (const auto& t : trace) chain.levels.push_back({instance_of(t.args), t.g, t.q, t.twice_g_a});
  switch (res.stop) {
    case detail::ChainStop::empty_window: chain.end = ChainEnd::empty_window; break;
    case detail::ChainStop::divisible_modulus: chain.end = ChainEnd::divisible_modulus; break;
    case detail::ChainStop::narrow_window: chain.end = ChainEnd::narrow_window; break;
  }
  chain.tail = res.tail;
  chain.value = res.value;
#ifndef NDEBUG
  // Cross-check each hit count against a direct count when that is cheap.
  for (std::size_t k = 0; k + 1 < chain.levels.size(); ++k) {
    const auto& lv = chain.levels[k];
    const auto& in = lv.instance;
    BigInt i0 = floor_div(in.r3 + lv.g * in.r1, in.r5);
    BigInt it = floor_div(in.r3 + lv.g * in.r2, in.r5);
    if (it - i0 > 10000) continue;
    BigInt direct = 0;
    for (BigInt i = i0 + 1; i <= it; ++i)
      if (mod_pos(i * in.r5 - in.r3, lv.g) == 0) ++direct;
    if (direct != lv.q)
      throw InvariantViolation("hit count mismatch at chain level " + std::to_string(k));
  }
#endif
  return chain;
}

BigInt sum_fast(const FracSumInstance& s) {
  require_modulus(s.r5);
  return detail::sum_chain(args_of(s)).value;
}

QuasiPoly sum_fast_symbolic(const QuasiPoly& r1, const QuasiPoly& r2, const QuasiPoly& r3,
                            const QuasiPoly& r4, const QuasiPoly& r5) {
  if (!is_strict_pos(r5)) throw DomainError("symbolic fractional-part sum needs r5 strictly positive");
  std::vector<QuasiPoly> inputs{r1, r2, r3, r4, r5};
  auto out = evaluate_by_cases(inputs, [](std::span<const SymInt> x) {
    detail::SumArgs<SymInt> a{x[0], x[1], x[2], x[3], x[4]};
    return std::vector<SymInt>{detail::sum_chain(a).value};
  });
  return out.front();
}

}  // namespace qpart
