#pragma once

/**
 * @file cases.hpp
 * @brief Running integer algorithms on quasi-polynomial inputs.
 *
 * An integer algorithm built from ring operations, sign tests and floor
 * division can be run on quasi-polynomial inputs one residue class at a
 * time. Within a class n = T*x + i every input is a polynomial in x, signs
 * are decided by leading coefficients (raising the class's lower boundary
 * until they are stable), and a floor division whose quotient is periodic in
 * x splits the class into finer ones. A split abandons the current run and
 * restarts the algorithm on each finer class; algorithms are deterministic,
 * so the replay reaches the same point with the division now polynomial.
 *
 * SymInt is the value type such algorithms see. Its free functions mirror
 * the ones arith.hpp provides for BigInt, so one template serves both.
 */

#include "core/quasipoly.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qpart {

/// Control-flow signal: the running case must be split into `factor`
/// subclasses. Never escapes evaluate_by_cases.
struct CaseSplit {
  Period factor;
};

/// One residue class n = period*x + residue, valid for n > boundary.
class Case {
 public:
  Case(Period period, Period residue, BigInt boundary)
      : period_(period), residue_(residue), boundary_(std::move(boundary)) {}

  Period period() const { return period_; }
  Period residue() const { return residue_; }
  const BigInt& boundary() const { return boundary_; }

  /// The running computation is valid only for x > bound.
  void require_local(const BigInt& bound);

  [[noreturn]] void split(Period factor) const { throw CaseSplit{factor}; }

 private:
  Period period_;
  Period residue_;
  BigInt boundary_;
};

/// A polynomial in the local variable of a Case. Values built from integer
/// literals carry no case and behave as constants.
class SymInt {
 public:
  SymInt(long v = 0) : poly_(PolyZ::constant(v)) {}  // NOLINT(google-explicit-constructor)
  SymInt(Case* c, PolyZ p) : case_(c), poly_(std::move(p)) {}

  const PolyZ& poly() const { return poly_; }
  Case* context() const { return case_; }

  SymInt operator-() const { return {case_, -poly_}; }
  friend SymInt operator+(const SymInt& a, const SymInt& b) { return {pick(a, b), a.poly_ + b.poly_}; }
  friend SymInt operator-(const SymInt& a, const SymInt& b) { return {pick(a, b), a.poly_ - b.poly_}; }
  friend SymInt operator*(const SymInt& a, const SymInt& b) { return {pick(a, b), a.poly_ * b.poly_}; }

 private:
  static Case* pick(const SymInt& a, const SymInt& b) { return a.case_ ? a.case_ : b.case_; }

  Case* case_ = nullptr;
  PolyZ poly_;
};

/// Eventual sign; raises the case boundary so the sign holds above it.
int sign(const SymInt& a);
/// floor(a / b) for b eventually nonzero. May split the case.
SymInt floor_div(const SymInt& a, const SymInt& b);
/// a - b*floor(a/b), in [0, b) for b eventually positive.
SymInt mod_pos(const SymInt& a, const SymInt& b);
/// a / b where b divides a at every point; throws InvariantViolation when it
/// does not. May split the case when the quotient has rational coefficients.
SymInt exact_div(const SymInt& a, const SymInt& b);

using CaseFunction = std::function<std::vector<SymInt>(std::span<const SymInt>)>;

/// Runs `fn` on every residue class of the inputs (after refinement to their
/// common period), splitting as requested, and glues each output into a
/// quasi-polynomial. Throws DomainError when a split would push the period
/// past `cap`.
std::vector<QuasiPoly> evaluate_by_cases(std::span<const QuasiPoly> inputs, const CaseFunction& fn,
                                         Period cap = period_cap());

}  // namespace qpart
