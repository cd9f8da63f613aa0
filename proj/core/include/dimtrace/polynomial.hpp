#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dimtrace/numeric.hpp"

namespace dimtrace::algebraic {

/// Dense univariate polynomial over Z; coeffs()[i] multiplies x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVec coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const Int& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const IntVec& coeffs() const { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }

  /// Lowest- and highest-degree nonzero coefficients.
  std::size_t lowest_degree() const;

  Int content() const;
  /// Content 1 and positive leading coefficient; idempotent.
  IntPolynomial primitive_normal_form() const;
  IntPolynomial derivative() const;
  /// x^deg * p(1/x).
  IntPolynomial reversal() const;
  /// p(x / s) * s^deg: the roots are scaled by s.
  IntPolynomial scale_roots(const Int& s) const;
  /// Drops the factor x^lowest_degree.
  IntPolynomial without_zero_roots() const;

  Rational evaluate(const Rational& x) const;
  Int evaluate(const Int& x) const;
  int sign_at(const Rational& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  IntVec coeffs_;
};

/// True iff b divides a in Z[x]; stores the quotient when asked.
bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

/// Primitive gcd with positive leading coefficient (Euclid over Q).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// a / gcd(a, a'), primitive normal form.
IntPolynomial squarefree_part(const IntPolynomial& a);

/// Polynomial with rational coefficients, used by remainder sequences.
using RatCoeffs = RatVec;
RatCoeffs to_rational(const IntPolynomial& p);
/// Scales a rational polynomial by a positive rational to a primitive
/// integer polynomial (sign pattern preserved).
IntPolynomial positive_primitive(const RatCoeffs& p);
/// Remainder of a by b over Q.
RatCoeffs remainder(RatCoeffs a, const RatCoeffs& b);

}  // namespace dimtrace::algebraic
