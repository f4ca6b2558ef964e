#pragma once

/**
 * @file intpoly.hpp
 * @brief Univariate polynomials over Z and Q with the eventual-sign order.
 *
 * A polynomial p in Z[x] is "eventually positive" when its leading
 * coefficient is positive: p(n) > 0 for every sufficiently large integer n.
 * Everything in the quasi-polynomial layer reduces to questions of this kind,
 * answered together with an explicit threshold (stable_bound) beyond which
 * the answer is guaranteed.
 */

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpart {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Integer polynomial, coefficients in ascending degree. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<BigInt> coeffs);

  static PolyZ constant(const BigInt& c);
  static PolyZ monomial(const BigInt& c, std::size_t k);
  /// The polynomial x.
  static PolyZ variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Requires !is_zero().
  const BigInt& lead() const { return coeffs_.back(); }
  /// Coefficient of x^k, zero past the degree.
  BigInt coeff(std::size_t k) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  BigInt operator()(const BigInt& n) const;

  /// p(a*x + b).
  PolyZ compose_affine(const BigInt& a, const BigInt& b) const;

  PolyZ operator-() const;
  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  PolyZ& operator*=(const BigInt& c);

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(PolyZ a, const BigInt& c) { return a *= c; }
  friend PolyZ operator*(const BigInt& c, PolyZ a) { return a *= c; }
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "3*n^2 - n + 1".
  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Rational polynomial stored as integer numerators over one positive
/// common denominator, kept in lowest terms.
class PolyQ {
 public:
  PolyQ() : den_(1) {}
  PolyQ(std::vector<BigInt> numerators, BigInt denominator);
  explicit PolyQ(const PolyZ& p);
  static PolyQ from_rationals(std::span<const BigRat> coeffs);

  int degree() const { return num_.degree(); }
  bool is_zero() const { return num_.is_zero(); }
  const PolyZ& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  BigRat coeff(std::size_t k) const;
  BigRat operator()(const BigInt& n) const;

  /// Least common denominator of the coefficients of x^1 .. x^deg, ignoring
  /// the constant term.
  BigInt nonconstant_denominator() const;

  PolyQ compose_affine(const BigInt& a, const BigInt& b) const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "n") const;

 private:
  void normalize();
  PolyZ num_;
  BigInt den_;
};

/// Sign of the leading coefficient: +1, -1, or 0 for the zero polynomial.
int eventual_sign(const PolyZ& p);

/// p, -p or 0 so that the result is eventually positive (or zero).
PolyZ abs_poly(const PolyZ& p);

/// Cauchy root bound: every real root r of p satisfies |r| < the result, so
/// p has the sign of its leading coefficient at every integer n above it.
/// Zero for constants.
BigInt cauchy_bound(const PolyZ& p);

/// Request that |numerator(n) / denominator(n)| < gap for all large n.
/// Needs deg numerator < deg denominator and gap > 0.
struct RatioGap {
  PolyZ numerator;
  PolyZ denominator;
  BigRat gap;
};

/// Returns N >= 0 such that for every integer n > N each polynomial in
/// `signs` has the sign of its leading coefficient and every requested ratio
/// stays strictly inside its gap. Not minimal.
BigInt stable_bound(std::span<const PolyZ> signs, std::span<const RatioGap> ratios = {});

/// Division in Q[x]: f = q*g + s with deg s < deg g.
std::pair<PolyQ, PolyQ> divide_Q(const PolyZ& f, const PolyZ& g);

/// Parses the text grammar: integers, the variable `n`, + - * ^ and
/// parentheses. Whitespace is ignored. Throws ParseError.
PolyZ parse_poly(std::string_view text);

/// Parses a decimal integer literal with optional sign. Throws ParseError.
BigInt parse_bigint(std::string_view text);

}  // namespace qpart
