#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dimtrace {

/// Ordered key/value explanation attached to a verdict. Keys are stable
/// identifiers; values are canonical text (integers, "p/q" rationals,
/// bracketed lists).
using Certificate = std::vector<std::pair<std::string, std::string>>;

/// Verdict lattice shared by the one-variable and rational-point trace
/// classifiers.
enum class Overall { kGood, kOrderUnitGoodOnly, kNotOrderUnitGood, kNotApplicableDiscrete };

const char* to_string(Overall o);

struct TraceVerdict {
  bool condition1 = false;
  bool really_isolated = false;
  bool approx_divisible = false;
  Overall overall = Overall::kNotApplicableDiscrete;
  Certificate certificate;
};

/// Combines the three sub-verdicts. Without approximate divisibility there
/// is no order-unit-goodness theorem to apply, so only sub-verdicts are
/// reported.
Overall combine_verdict(bool condition1, bool really_isolated, bool approx_divisible);

}  // namespace dimtrace
