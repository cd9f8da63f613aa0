#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dimtrace/certificate.hpp"
#include "dimtrace/numeric.hpp"
#include "dimtrace/polynomial.hpp"

namespace dimtrace::algebraic {

/// Closed interval [lo, hi] of nonnegative rationals.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// A positive real algebraic number given by its minimal polynomial.
///
/// Irreducibility of the minimal polynomial is asserted by the caller (see
/// kronecker_irreducible for a bounded check). Without an interval the
/// number is "some positive root"; every goodness verdict depends only on
/// the conjugacy class, so the choice only matters for numeric work such
/// as products, which then require a unique positive root.
class AlgebraicNumber1D {
 public:
  /// Normalizes the polynomial and checks: squarefree, at least one positive
  /// root, and exactly one root in the interval when one is given.
  static AlgebraicNumber1D from_minpoly(const IntPolynomial& minpoly,
                                        std::optional<RootInterval> interval = std::nullopt);
  /// The positive rational q, minimal polynomial den*x - num.
  static AlgebraicNumber1D from_rational(const Rational& q);

  const IntPolynomial& minpoly() const { return minpoly_; }
  const std::optional<RootInterval>& interval() const { return interval_; }
  long degree() const { return minpoly_.degree(); }

  /// 1/r: reversed minimal polynomial, reciprocal interval.
  AlgebraicNumber1D reciprocal() const;

 private:
  AlgebraicNumber1D(IntPolynomial p, std::optional<RootInterval> i)
      : minpoly_(std::move(p)), interval_(std::move(i)) {}
  IntPolynomial minpoly_;
  std::optional<RootInterval> interval_;
};

// ---- root counting -------------------------------------------------------

/// Sturm chain of a squarefree polynomial, each entry a positive multiple
/// of the exact remainder.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& squarefree);

/// Distinct real roots in the half-open interval (lo, hi].
std::size_t count_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Distinct real roots in the closed interval [lo, hi].
std::size_t count_roots_closed(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Distinct real roots in (0, inf). Throws on the zero polynomial.
std::size_t sturm_positive_root_count(const IntPolynomial& p);

/// Upper bound on the absolute value of every root (Cauchy).
Rational root_bound(const IntPolynomial& p);

/// Interval around r's selected root containing no other root of the
/// minimal polynomial, of width at most `width` when given.
RootInterval isolate(const AlgebraicNumber1D& r, const std::optional<Rational>& width = std::nullopt);

/// Bisects [lo, hi] (which must hold exactly one root of the squarefree p)
/// down to the requested width.
RootInterval refine(const IntPolynomial& p, RootInterval interval, const Rational& width);

// ---- goodness criteria ---------------------------------------------------

bool is_really_isolated_1d(const AlgebraicNumber1D& r);
bool is_algebraic_unit(const AlgebraicNumber1D& r);

struct ScaledIntegrality {
  bool holds = false;
  std::optional<unsigned long> witness_t;  // least t with a^t r integral
  Int leading;                             // leading coefficient of the minimal polynomial
  Int failing_prime = 0;                   // prime of `leading` not dividing a
};

/// Is a^t r an algebraic integer for some t >= 0? Decided by: every prime
/// dividing the leading minimal-polynomial coefficient divides a.
ScaledIntegrality scaled_integrality(const AlgebraicNumber1D& r, const Int& a);

/// Least t <= max_t for which the primitive part of sum c_i a^{t(n-i)} x^i
/// is monic, by direct search.
std::optional<unsigned long> scaled_integrality_search(const IntPolynomial& minpoly, const Int& a,
                                                       unsigned long max_t);

struct ConditionOneResult {
  bool holds = false;
  Int lowest_coefficient;   // a_0
  Int highest_coefficient;  // a_k
  ScaledIntegrality forward;     // r against a_k
  ScaledIntegrality reciprocal;  // 1/r against a_0
  bool extended_hypothesis = false;  // P has interior zero coefficients
  Certificate certificate;
};

/// Checks the shape P must have: nonnegative coefficients, nonzero constant
/// term, degree >= 1, exponents of the nonzero terms with gcd 1.
void validate_trace_polynomial(const IntPolynomial& p);

/// Value-group condition for the trace at r on the ring built from P.
ConditionOneResult condition_one_1d(const IntPolynomial& p, const AlgebraicNumber1D& r);

TraceVerdict classify_trace_1d(const IntPolynomial& p, const AlgebraicNumber1D& r);

// ---- factorization and products ------------------------------------------

enum class Irreducibility { kIrreducible, kReducible, kUnknown };

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::kUnknown;
  IntPolynomial factor;  // nontrivial primitive factor when reducible
};

/// Kronecker's evaluation/interpolation search for a factor of degree at
/// most deg/2; Unknown when deg(p) exceeds degree_limit.
IrreducibilityResult kronecker_irreducible(const IntPolynomial& p, long degree_limit);

/// Complete factorization into primitive irreducibles with positive leading
/// coefficients (with multiplicity, sorted by degree then coefficients).
/// Throws SizeEnvelopeExceeded when a piece is above the degree limit.
std::vector<IntPolynomial> factor_irreducible(const IntPolynomial& p, long degree_limit);

/// Res_y(p(y), y^deg(q) q(x/y)); its roots are the products of roots of p
/// and of q. Requires q(0) != 0.
IntPolynomial product_resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Exact determinant by fraction-free elimination.
Int determinant(std::vector<IntVec> m);

/// r1 * r2 with its minimal polynomial, selected by interval arithmetic.
AlgebraicNumber1D multiply(const AlgebraicNumber1D& r1, const AlgebraicNumber1D& r2, long degree_limit);

}  // namespace dimtrace::algebraic
