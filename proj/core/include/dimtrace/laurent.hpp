#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimtrace/certificate.hpp"
#include "dimtrace/hull.hpp"
#include "dimtrace/numeric.hpp"

namespace dimtrace::laurent {

using Exponent = std::vector<long>;

/// Integer Laurent polynomial in `dim` variables, stored sparsely. Zero
/// coefficients are never stored, so the key set is exactly Log P.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t dim) : dim_(dim) {}
  LaurentPoly(std::size_t dim, const std::map<Exponent, Int>& terms);

  static LaurentPoly constant(std::size_t dim, const Int& c);
  static LaurentPoly monomial(const Exponent& e, const Int& c);

  std::size_t dim() const { return dim_; }
  const std::map<Exponent, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coeff(const Exponent& e) const;
  std::vector<Exponent> support() const;

  /// Adds c x^e (dropping the term if it cancels).
  void add_term(const Exponent& e, const Int& c);

  LaurentPoly pow(unsigned long k) const;
  Rational evaluate(const RatVec& point) const;
  bool nonnegative() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Variables x, y, z, w for d <= 4, x1..xd otherwise.
  std::string to_string() const;

 private:
  void check(const Exponent& e) const;
  std::size_t dim_;
  std::map<Exponent, Int> terms_;
};

using dimtrace::to_string;

RatVec to_rational(const Exponent& e);
std::string to_string(const Exponent& e);

// Exact-computation envelope for hulls and expansions.
inline constexpr std::size_t kMaxSupport = 64;
inline constexpr std::size_t kMaxDimension = 4;
inline constexpr std::size_t kMaxExpansionTerms = 1'000'000;

struct NewtonPolytope {
  std::vector<Exponent> points;  // Log P in ascending order
  hull::ConvexHull hull;

  std::vector<Exponent> vertices() const;
  const std::vector<hull::Face>& faces() const { return hull.faces; }
  bool is_vertex(const Exponent& e) const;
};

/// Throws SizeEnvelopeExceeded beyond kMaxSupport points or kMaxDimension.
NewtonPolytope newton_polytope(const LaurentPoly& p);

/// Log P - Log P generates Z^d.
bool projectively_faithful(const LaurentPoly& p);

/// Every vertex coefficient exceeds 1. Requires nonnegative coefficients.
bool approximately_divisible(const LaurentPoly& p);

/// Log of P^k, computed as an iterated sumset (no cancellation occurs for
/// nonnegative P).
std::vector<Exponent> support_power(const LaurentPoly& p, unsigned long k);

/// Terms of h whose exponents lie on k*F. Throws when Log h is not inside
/// the k-fold dilation of the polytope.
LaurentPoly facial_polynomial(const LaurentPoly& h, const NewtonPolytope& polytope, const hull::Face& face,
                              unsigned long k);

// ---- fitting ---------------------------------------------------------------

struct FittingWitness {
  std::size_t candidate = 0;
  unsigned long boost = 0;  // N
  unsigned long power = 0;  // k
};

struct FaceFailure {
  std::size_t candidate = 0;
  unsigned long boost = 0;
  std::size_t face = 0;  // index into NewtonPolytope::faces()
  Exponent exponent;
  Int coefficient;
};

/// Why clause (a) failed for a boosted candidate.
struct SupportObstruction {
  enum class Kind { kCone, kAffineHull, kDilationWindow, kLatticeHoles };
  Kind kind = Kind::kCone;
  Exponent exponent;   // offending exponent of the boosted candidate
  RatVec normal;       // facet normal or affine equation involved (empty for holes)
  Rational offset = 0;
};

const char* to_string(SupportObstruction::Kind k);

struct CandidateSummary {
  std::size_t candidate = 0;
  unsigned long boosts_tried = 0;
  unsigned long clause_a_failures = 0;
  unsigned long clause_b_failures = 0;
  std::optional<SupportObstruction> last_obstruction;
};

struct FittingReport {
  bool fitted = false;
  std::optional<FittingWitness> witness;
  /// Clause (b) failures of each candidate at its largest boost tried.
  std::vector<FaceFailure> per_face_failures;
  std::vector<CandidateSummary> candidates;
  std::vector<std::string> warnings;
};

/// Tries h' = P^N h for each candidate h (in order) and N = 0..n_max;
/// first success wins. Vanishing of the candidates is the caller's
/// assertion and is not checked.
FittingReport fitting_check(const LaurentPoly& p, const std::vector<LaurentPoly>& candidates,
                            unsigned long n_max);

/// Least k >= 0 with Log h subset of Log P^k, or the obstruction.
struct PowerSearch {
  std::optional<unsigned long> power;
  std::optional<SupportObstruction> obstruction;
};
PowerSearch least_power(const NewtonPolytope& polytope, const LaurentPoly& p, const LaurentPoly& h);

/// Independent re-check of a witness: expands P^N h by repeated squaring and
/// P^k in full, then checks both clauses.
bool verify_fitting_witness(const LaurentPoly& p, const LaurentPoly& h, unsigned long boost,
                            unsigned long power);

// ---- rational points -------------------------------------------------------

struct ConditionOneRational {
  bool holds = false;
  Int ring_denominator;            // B with value ring Z[1/B]
  std::vector<Int> ring_primes;    // primes of B
  Int failing_prime = 0;
  std::optional<Exponent> failing_exponent;
  Certificate certificate;
};

/// Checks nonnegative coefficients, projective faithfulness, and a strictly
/// positive point of matching dimension.
void validate_rational_query(const LaurentPoly& p, const RatVec& r);

ConditionOneRational condition_one_rational(const LaurentPoly& p, const RatVec& r);

TraceVerdict classify_rational_trace(const LaurentPoly& p, const RatVec& r);

/// (g, x^{kv}) / (P, x^v)^k for a vertex v.
Rational vertex_trace_value(const LaurentPoly& g, const LaurentPoly& p, unsigned long k, const Exponent& v);

}  // namespace dimtrace::laurent
