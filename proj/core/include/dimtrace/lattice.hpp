#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimtrace/certificate.hpp"
#include "dimtrace/numeric.hpp"

namespace dimtrace::lattice {

/// Q-linearly independent reals {1, b_1, ..., b_L-1} used as coordinates.
struct RealBasis {
  enum class Independence { kAsserted, kSquarefreeRadicals };

  std::vector<std::string> labels;  // labels[0] is the constant 1
  Independence independence = Independence::kAsserted;
  std::vector<Int> radicals;        // labels[i] = sqrt(radicals[i-1]) when certified
  std::vector<std::pair<Rational, Rational>> approx;  // display-only enclosures

  /// {1, sqrt(n_1), ...}: checks the n_i are distinct squarefree integers > 1.
  static RealBasis squarefree_radicals(const std::vector<Int>& radicals);
  /// Caller vouches for independence; verdicts become conditional.
  static RealBasis asserted(std::vector<std::string> labels);

  std::size_t size() const { return labels.size(); }
  bool certified() const { return independence == Independence::kSquarefreeRadicals; }
  /// Throws when the record is inconsistent.
  void validate() const;

  friend bool operator==(const RealBasis& a, const RealBasis& b) {
    return a.labels == b.labels && a.independence == b.independence && a.radicals == b.radicals;
  }
};

/// Finitely generated subgroup of R; gens[i] are coordinates of generator i.
struct EmbeddedGroup {
  RealBasis basis;
  std::vector<RatVec> gens;

  /// Z-rank (equal to the Q-rank of the coordinate rows).
  std::size_t rank() const;
  void validate() const;
};

struct DirectSumInstance {
  std::vector<EmbeddedGroup> summands;
  void validate() const;
};

/// Canonical Z-basis of the lattice spanned by rational rows: rows scaled
/// by the lcm of denominators, Hermite-reduced, scaled back.
std::vector<RatVec> rational_hermite_basis(const std::vector<RatVec>& rows, std::size_t cols);

/// Generators of A cap B in canonical Hermite form.
EmbeddedGroup intersect(const EmbeddedGroup& a, const EmbeddedGroup& b);

/// A f.g. subgroup of R is dense iff it is not cyclic, i.e. has rank >= 2.
bool is_dense_in_R(const EmbeddedGroup& a);

bool value_group_intersection_dense(const EmbeddedGroup& a, const EmbeddedGroup& b);

/// T(ker phi) for phi = sum of the inclusions. Each row has length
/// components * labels; entry c * labels + l is the l-th coordinate of the
/// c-th component.
struct KernelImage {
  std::vector<RatVec> rows;
  std::size_t components = 0;
  std::size_t labels = 0;
  /// Summands are subgroups of R, so each inclusion is injective and the
  /// image of ker phi is all of T(V).
  bool injective_summands = true;
};

KernelImage kernel_of_sum_T(const DirectSumInstance& d);

// ---- multiquadratic arithmetic ----------------------------------------------

/// Q(sqrt p_1, ..., sqrt p_s) for distinct primes p_i. Elements are sums of
/// c_S sqrt(prod_{i in S} p_i) keyed by the bit mask S.
class MultiquadraticField {
 public:
  using Element = std::map<std::uint32_t, Rational>;

  /// The field containing sqrt(n) for every listed squarefree n.
  static MultiquadraticField for_radicals(const std::vector<Int>& radicals);

  const std::vector<Int>& primes() const { return primes_; }
  std::uint32_t mask_of(const Int& squarefree) const;

  Element rational(const Rational& q) const;
  Element sqrt_of(const Int& squarefree) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// sqrt(p_i) -> -sqrt(p_i).
  Element conjugate(const Element& a, std::size_t prime_index) const;
  bool is_zero(const Element& a) const { return a.empty(); }
  std::string to_string(const Element& a) const;

 private:
  std::vector<Int> primes_;
};

struct HyperplaneDensity {
  bool dense = false;
  /// Nonzero w on the first m-1 coordinates with w . v in Z for every
  /// generator v when not dense.
  std::vector<MultiquadraticField::Element> dual;
  std::vector<std::string> dual_text;
  Certificate certificate;
};

/// Density of the group spanned by `rows` (layout as in KernelImage) in
/// (1, ..., 1)^perp of R^m. Requires a radical-certified basis whenever an
/// irrational coordinate is in play.
HyperplaneDensity dense_in_hyperplane(const std::vector<RatVec>& rows, std::size_t m, const RealBasis& basis);

/// Exact check that w . v is an integer for every generator (projected to
/// the first m-1 coordinates) and that w is nonzero.
bool dual_annihilates(const std::vector<RatVec>& rows, std::size_t m, const RealBasis& basis,
                      const std::vector<MultiquadraticField::Element>& dual);

struct DirectSumVerdict {
  bool order_unit_good = false;
  KernelImage kernel;
  HyperplaneDensity density;
  Certificate certificate;
};

DirectSumVerdict direct_sum_order_unit_good(const DirectSumInstance& d);

/// Coordinates as text such as "1 + 2*sqrt(6)".
std::string element_text(const RatVec& coords, std::size_t offset, const RealBasis& basis);

}  // namespace dimtrace::lattice
