#pragma once

/**
 * @file quasipoly.hpp
 * @brief The ring of integer-valued quasi-polynomials.
 *
 * A quasi-polynomial is a triple (T, C, {f_0 .. f_{T-1}}) with f_i in Z[x]:
 * for every n > C written as n = T*m + i with 0 <= i < T, its value is
 * f_i(m). Values at n <= C are not represented.
 *
 * Sum and product refine both operands to the lcm of their periods and act
 * componentwise; the lower boundary of a result is the max of the operands'.
 * No minimal-period form is enforced, so equality is decided by comparing
 * components after refinement to a common period.
 */

#include "core/intpoly.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpart {

using Period = std::uint64_t;

/// lcm of two periods; throws DomainError if the result exceeds `cap`.
Period lcm_period(Period a, Period b, Period cap);

/// Process-wide cap on quasi-polynomial periods (default 10^6).
Period period_cap();
void set_period_cap(Period cap);

class QuasiPoly {
 public:
  /// The zero quasi-polynomial.
  QuasiPoly();
  QuasiPoly(Period period, BigInt lower_boundary, std::vector<PolyZ> components);

  static QuasiPoly from_poly(const PolyZ& p);
  static QuasiPoly constant(const BigInt& c) { return from_poly(PolyZ::constant(c)); }

  Period period() const { return period_; }
  const BigInt& lower_boundary() const { return boundary_; }
  const std::vector<PolyZ>& components() const { return components_; }
  const PolyZ& component(Period i) const { return components_.at(i); }

  /// Max degree over components, -1 when all components are zero.
  int degree() const;
  bool is_zero() const;

  /// Same function with period `period`; requires period() | period.
  QuasiPoly refine(Period period) const;

  /// Same components with the boundary raised to at least `boundary`.
  QuasiPoly raise_boundary(const BigInt& boundary) const;

  /// Merges residue classes where the components agree as polynomials of the
  /// coarser index. Pointwise values are unchanged.
  QuasiPoly reduce_period() const;

  /// The component polynomial seen on the residue class n = period*x + residue,
  /// as a polynomial in x. Requires period() | period and residue < period.
  PolyZ restrict_to(Period period, Period residue) const;

  /// Value at n; throws DomainError when n <= lower_boundary().
  BigInt operator()(const BigInt& n) const;

  QuasiPoly operator-() const;
  friend QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator-(const QuasiPoly& a, const QuasiPoly& b);
  friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);

  std::string to_string() const;

 private:
  Period period_ = 1;
  BigInt boundary_ = 0;
  std::vector<PolyZ> components_;
};

BigInt eval_qp(const QuasiPoly& q, const BigInt& n);

/// Every component is zero or has a positive leading coefficient.
bool is_nonneg(const QuasiPoly& q);
/// Every component has a positive leading coefficient.
bool is_strict_pos(const QuasiPoly& q);

/// Equal as functions above both boundaries.
bool equals(const QuasiPoly& a, const QuasiPoly& b);

/// Both operands refined to the lcm of their periods (boundaries untouched).
std::pair<QuasiPoly, QuasiPoly> common_refinement(const QuasiPoly& a, const QuasiPoly& b);

/// {"period": T, "lower_boundary": C, "components": [["c0","c1",...], ...]}
std::string to_json(const QuasiPoly& q);
QuasiPoly quasi_poly_from_json(std::string_view text);

/// JSON document if the text starts with '{', otherwise the polynomial
/// grammar of parse_poly embedded with period 1.
QuasiPoly parse_quasi_poly(std::string_view text);

/// The value of a computation on one residue class n = period*x + residue,
/// valid for n > boundary, as a polynomial in x.
struct CaseValue {
  Period period;
  Period residue;
  BigInt boundary;
  PolyZ value;
};

/// Glues per-class results into one quasi-polynomial. The classes must
/// partition the integers (every n falls in exactly one). The result period
/// is reduced where components allow it.
QuasiPoly assemble_cases(std::vector<CaseValue> cases, Period cap);

/// A function N -> Q given above C by f_i(m) / g_i(m) on n = T*m + i.
class QuasiRational {
 public:
  struct Fraction {
    PolyZ numerator;
    PolyZ denominator;
  };

  QuasiRational(Period period, BigInt lower_boundary, std::vector<Fraction> components);
  static QuasiRational from_quasi_poly(const QuasiPoly& numerator, const QuasiPoly& denominator);

  Period period() const { return period_; }
  const BigInt& lower_boundary() const { return boundary_; }
  const std::vector<Fraction>& components() const { return components_; }

  /// Throws DomainError when n <= lower_boundary() or the denominator
  /// vanishes at n.
  BigRat operator()(const BigInt& n) const;

  /// The same function as a quasi-polynomial when it is integer-valued
  /// above its boundary; throws InvariantViolation otherwise.
  QuasiPoly to_quasi_poly() const;

 private:
  Period period_;
  BigInt boundary_;
  std::vector<Fraction> components_;
};

}  // namespace qpart
