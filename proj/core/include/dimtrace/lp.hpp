#pragma once

#include <cstddef>
#include <vector>

#include "dimtrace/numeric.hpp"

// Exact rational linear programming: dense two-phase simplex with Bland's
// anti-cycling rule. Sized for the small systems the decision procedures
// build (tens of variables and constraints).
namespace dimtrace::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  RatVec values;  // one entry per declared variable when feasible
  Rational objective = 0;
};

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  /// Variables are nonnegative unless declared free.
  void set_free(std::size_t var);
  void add(RatVec coeffs, Relation relation, Rational rhs);
  void maximize(RatVec objective);

  Solution solve() const;
  bool feasible() const { return solve().status != Status::kInfeasible; }

  std::size_t num_vars() const { return num_vars_; }

 private:
  struct Row {
    RatVec coeffs;
    Relation relation;
    Rational rhs;
  };
  std::size_t num_vars_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
  RatVec objective_;
};

/// True iff `point` is a convex combination of `generators`.
bool in_convex_hull(const RatVec& point, const std::vector<RatVec>& generators);

}  // namespace dimtrace::lp
