#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dimtrace/certificate.hpp"
#include "dimtrace/numeric.hpp"

namespace dimtrace::simplicial {

/// Trace vector reduced to coprime positive integers in ascending order.
struct NormalForm {
  IntVec entries;
  std::size_t zero_count = 0;
  /// entries[i] comes from input position permutation[i].
  std::vector<std::size_t> permutation;
  /// entries[i] = scale * input[permutation[i]].
  Rational scale;
};

/// Throws on negative entries or the zero vector.
NormalForm normal_form(const RatVec& v);

struct OrderUnitGoodResult {
  bool holds = false;
  NormalForm normal;
  std::optional<std::size_t> violating_index;  // 0-based, into normal.entries
  Certificate certificate;
};

/// n(1) = 1 and n(j) <= 1 + n(1) + ... + n(j-1) on the normal form.
OrderUnitGoodResult is_order_unit_good(const RatVec& v);

/// Up to a positive scalar, v is a 0-1 vector.
bool is_good(const RatVec& v);

struct LiftingCounterexample {
  IntVec b;
  Int s;
};

struct LiftingResult {
  bool holds = true;
  std::optional<LiftingCounterexample> counterexample;
};

// Enumeration envelope for the lifting oracle.
inline constexpr std::size_t kMaxLiftingPoints = 10'000'000;

/// Brute force over b with entries in [1, bound] (or [0, bound] when
/// `order_units_only` is false): every s in phi_v(Z^k) cap [0, phi_v(b)] must
/// be phi_v(a') for some integer 0 <= a' <= b. Counterexamples are the
/// lexicographically least b, then least s.
LiftingResult interval_lifting_oracle(const IntVec& v, unsigned long bound, bool order_units_only = true);

}  // namespace dimtrace::simplicial
