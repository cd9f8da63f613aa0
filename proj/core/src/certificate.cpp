#include "dimtrace/certificate.hpp"

namespace dimtrace {

const char* to_string(Overall o) {
  switch (o) {
    case Overall::kGood:
      return "Good";
    case Overall::kOrderUnitGoodOnly:
      return "OrderUnitGoodOnly";
    case Overall::kNotOrderUnitGood:
      return "NotOrderUnitGood";
    case Overall::kNotApplicableDiscrete:
      return "NotApplicableDiscrete";
  }
  return "?";
}

Overall combine_verdict(bool condition1, bool really_isolated, bool approx_divisible) {
  if (!approx_divisible) return Overall::kNotApplicableDiscrete;
  if (!really_isolated) return Overall::kNotOrderUnitGood;
  return condition1 ? Overall::kGood : Overall::kOrderUnitGoodOnly;
}

}  // namespace dimtrace
