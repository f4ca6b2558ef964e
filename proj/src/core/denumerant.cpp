#include "core/denumerant.hpp"

#include "core/arith.hpp"
#include "core/cases.hpp"
#include "core/errors.hpp"
#include "core/fracsum_impl.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace qpart {

namespace {

template <class Int>
void require_positive(const Int& a, const char* what) {
  if (sign(a) <= 0) throw DomainError(std::string(what) + " must be positive");
}

template <class Int>
Int popoviciu2_impl(const Int& a1, const Int& a2, const Int& m) {
  Int inv1 = inverse_mod_of(a1, a2);
  Int inv2 = inverse_mod_of(a2, a1);
  Int num = m - a1 * mod_pos(inv1 * m, a2) - a2 * mod_pos(inv2 * m, a1) + a1 * a2;
  Int p = exact_div(num, a1 * a2);
  if (sign(p) < 0) throw InvariantViolation("two-coefficient count came out negative");
  return p;
}

template <class Int>
Int count2_impl(const Int& a1, const Int& a2, const Int& m) {
  require_positive(a1, "coefficient");
  require_positive(a2, "coefficient");
  if (sign(m) < 0) return Int(0);
  Int d = gcd_of(a1, a2);
  if (sign(mod_pos(m, d)) != 0) return Int(0);
  return popoviciu2_impl(exact_div(a1, d), exact_div(a2, d), exact_div(m, d));
}

template <class Int>
struct Reduced3 {
  Int d0;
  bool chi = false;
  Int m_prime, a1_prime, a2_prime, a3_prime, d, x0, m_tilde, a1_tilde, a2_tilde;
};

template <class Int>
Reduced3<Int> reduce3_impl(const Int& a1, const Int& a2, const Int& a3, const Int& m) {
  Reduced3<Int> r;
  r.d0 = gcd_of(gcd_of(a1, a2), a3);
  r.chi = sign(mod_pos(m, r.d0)) == 0;
  if (!r.chi) return r;
  r.m_prime = exact_div(m, r.d0);
  r.a1_prime = exact_div(a1, r.d0);
  r.a2_prime = exact_div(a2, r.d0);
  r.a3_prime = exact_div(a3, r.d0);
  r.d = gcd_of(r.a1_prime, r.a2_prime);
  // gcd(a3', d) = 1 because gcd(a1', a2', a3') = 1.
  Int inv3 = inverse_mod_of(r.a3_prime, r.d);
  r.x0 = mod_pos(r.m_prime * inv3, r.d);
  r.m_tilde = exact_div(r.m_prime - r.a3_prime * r.x0, r.d);
  r.a1_tilde = exact_div(r.a1_prime, r.d);
  r.a2_tilde = exact_div(r.a2_prime, r.d);
  return r;
}

// Puts the largest coefficient last.
template <class Int>
void order_roles(Int& a1, Int& a2, Int& a3) {
  if (sign(a1 - a3) > 0) std::swap(a1, a3);
  if (sign(a2 - a3) > 0) std::swap(a2, a3);
}

template <class Int>
Int count3_impl(Int a1, Int a2, Int a3, const Int& m, RoleOrder order) {
  require_positive(a1, "coefficient");
  require_positive(a2, "coefficient");
  require_positive(a3, "coefficient");
  if (sign(m) < 0) return Int(0);
  if (order == RoleOrder::largest_last) order_roles(a1, a2, a3);
  Reduced3<Int> r = reduce3_impl(a1, a2, a3, m);
  if (!r.chi || sign(r.m_tilde) < 0) return Int(0);

  const Int& mt = r.m_tilde;
  const Int& b1 = r.a1_tilde;
  const Int& b2 = r.a2_tilde;
  const Int& b3 = r.a3_prime;
  Int top = floor_div(mt, b3);
  Int inv1 = inverse_mod_of(b1, b2);
  Int inv2 = inverse_mod_of(b2, b1);
  // sum_{x=0}^{top} {b1^-1 (mt - b3 x) / b2} * b2, and symmetrically.
  Int s1 = detail::sum_chain(detail::SumArgs<Int>{Int(0), top, mt * inv1, -b3 * inv1, b2}).value;
  Int s2 = detail::sum_chain(detail::SumArgs<Int>{Int(0), top, mt * inv2, -b3 * inv2, b1}).value;
  // 2*b1*b2 * (C - s1/b2 - s2/b1), where
  // C = sum_{x=0}^{top} ((mt - b3 x)/(b1 b2) + 1).
  Int terms = top + Int(1);
  Int num = Int(2) * terms * (b1 * b2 + mt) - b3 * top * terms - Int(2) * b1 * s1 -
            Int(2) * b2 * s2;
  Int p = exact_div(num, Int(2) * b1 * b2);
  if (sign(p) < 0) throw InvariantViolation("three-coefficient count came out negative");
  return p;
}

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw DomainError(std::string(what) + " is too large for enumeration");
  return v.get_si();
}

// Solutions of sum a[k] x_k = m over k >= idx, coefficients sorted
// descending so the innermost loop runs over the smallest one.
std::int64_t enumerate(const std::vector<std::int64_t>& a, std::size_t idx, std::int64_t m) {
  if (idx + 1 == a.size()) return m % a[idx] == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t rest = m; rest >= 0; rest -= a[idx]) total += enumerate(a, idx + 1, rest);
  return total;
}

}  // namespace

BigInt count_bruteforce(std::span<const BigInt> a, const BigInt& m) {
  if (a.empty()) throw DomainError("at least one coefficient is required");
  std::vector<std::int64_t> coeffs;
  for (const auto& x : a) {
    if (x <= 0) throw DomainError("coefficients must be positive");
    coeffs.push_back(to_i64(x, "coefficient"));
  }
  if (m < 0) return 0;
  std::int64_t target = to_i64(m, "target");
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
  return BigInt(std::to_string(enumerate(coeffs, 0, target)), 10);
}

BigInt popoviciu2(const BigInt& a1, const BigInt& a2, const BigInt& m) {
  require_positive(a1, "coefficient");
  require_positive(a2, "coefficient");
  if (m < 0) throw DomainError("Popoviciu's formula needs m >= 0");
  if (gcd_of(a1, a2) != 1) throw DomainError("Popoviciu's formula needs coprime coefficients");
  return popoviciu2_impl(a1, a2, m);
}

BigInt count2(const BigInt& a1, const BigInt& a2, const BigInt& m) { return count2_impl(a1, a2, m); }

Reduction3 reduce3(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& m) {
  require_positive(a1, "coefficient");
  require_positive(a2, "coefficient");
  require_positive(a3, "coefficient");
  auto r = reduce3_impl(a1, a2, a3, m);
  Reduction3 out;
  out.d0 = r.d0;
  out.chi = r.chi;
  if (r.chi) {
    out.m_prime = r.m_prime;
    out.a1_prime = r.a1_prime;
    out.a2_prime = r.a2_prime;
    out.a3_prime = r.a3_prime;
    out.d = r.d;
    out.x0 = r.x0;
    out.m_tilde = r.m_tilde;
    out.a1_tilde = r.a1_tilde;
    out.a2_tilde = r.a2_tilde;
  }
  return out;
}

BigInt count3(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& m,
              RoleOrder order) {
  return count3_impl(a1, a2, a3, m, order);
}

BigInt count3_via_sum(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& m,
                      RoleOrder order) {
  BigInt b1 = a1, b2 = a2, b3 = a3;
  require_positive(b1, "coefficient");
  require_positive(b2, "coefficient");
  require_positive(b3, "coefficient");
  if (m < 0) return 0;
  if (order == RoleOrder::largest_last) order_roles(b1, b2, b3);
  Reduction3 r = reduce3(b1, b2, b3, m);
  if (!r.chi) return 0;
  BigInt total = 0;
  for (BigInt target = r.m_tilde; target >= 0; target -= r.a3_prime)
    total += popoviciu2_impl(r.a1_tilde, r.a2_tilde, target);
  return total;
}

QuasiPoly count2_symbolic(const QuasiPoly& a1, const QuasiPoly& a2, const QuasiPoly& m) {
  if (!is_strict_pos(a1) || !is_strict_pos(a2))
    throw DomainError("symbolic count needs strictly positive coefficients");
  std::vector<QuasiPoly> inputs{a1, a2, m};
  return evaluate_by_cases(inputs, [](std::span<const SymInt> x) {
           return std::vector<SymInt>{count2_impl(x[0], x[1], x[2])};
         })
      .front();
}

QuasiPoly count3_symbolic(const QuasiPoly& a1, const QuasiPoly& a2, const QuasiPoly& a3,
                          const QuasiPoly& m) {
  if (!is_strict_pos(a1) || !is_strict_pos(a2) || !is_strict_pos(a3))
    throw DomainError("symbolic count needs strictly positive coefficients");
  std::vector<QuasiPoly> inputs{a1, a2, a3, m};
  return evaluate_by_cases(inputs, [](std::span<const SymInt> x) {
           return std::vector<SymInt>{
               count3_impl(x[0], x[1], x[2], x[3], RoleOrder::largest_last)};
         })
      .front();
}

}  // namespace qpart
