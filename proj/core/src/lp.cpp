#include "dimtrace/lp.hpp"

#include <utility>

#include "dimtrace/error.hpp"

namespace dimtrace::lp {

namespace {

using Tableau = std::vector<RatVec>;

void pivot(Tableau& t, std::vector<std::size_t>& basis, std::size_t row, std::size_t col) {
  const std::size_t width = t[row].size();
  const Rational inv = 1 / t[row][col];
  for (std::size_t c = 0; c < width; ++c) t[row][c] *= inv;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r == row || t[r][col] == 0) continue;
    const Rational f = t[r][col];
    for (std::size_t c = 0; c < width; ++c)
      if (t[row][c] != 0) t[r][c] -= f * t[row][c];
  }
  basis[row] = col;
}

// Maximizes cost over the canonical tableau, entering only columns below
// `usable`. Returns false when unbounded.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis, const RatVec& cost, std::size_t usable) {
  const std::size_t rhs = t.empty() ? 0 : t[0].size() - 1;
  for (;;) {
    std::size_t entering = usable;
    for (std::size_t j = 0; j < usable; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i][j] != 0) reduced -= cost[basis[i]] * t[i][j];
      if (reduced > 0) {
        entering = j;
        break;
      }
    }
    if (entering == usable) return true;
    std::size_t leaving = t.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i][entering] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][entering];
      if (leaving == t.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == t.size()) return false;
    pivot(t, basis, leaving, entering);
  }
}

}  // namespace

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), free_(num_vars, false), objective_(num_vars, 0) {}

void LinearProgram::set_free(std::size_t var) { free_.at(var) = true; }

void LinearProgram::add(RatVec coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars_) throw InvalidInput("constraint width does not match the variable count");
  rows_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::maximize(RatVec objective) {
  if (objective.size() != num_vars_) throw InvalidInput("objective width does not match the variable count");
  objective_ = std::move(objective);
}

Solution LinearProgram::solve() const {
  // Column layout: structural (free variables split in two), slack/surplus,
  // artificial, rhs.
  std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) {
    pos_col[v] = structural++;
    if (free_[v]) neg_col[v] = structural++;
  }
  const std::size_t m = rows_.size();
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& row : rows_) {
    if (row.relation != Relation::kEqual) ++slack_count;
    const bool flip = row.rhs < 0;
    const bool needs_artificial = row.relation == Relation::kEqual ||
                                  (row.relation == Relation::kGreaterEqual) != flip;
    if (needs_artificial) ++artificial_count;
  }
  const std::size_t first_slack = structural;
  const std::size_t first_artificial = first_slack + slack_count;
  const std::size_t width = first_artificial + artificial_count + 1;
  const std::size_t rhs_col = width - 1;

  Tableau t(m, RatVec(width, 0));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = first_slack, next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows_[i];
    const bool flip = row.rhs < 0;
    const int sign = flip ? -1 : 1;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      t[i][pos_col[v]] = sign * row.coeffs[v];
      if (free_[v]) t[i][neg_col[v]] = -sign * row.coeffs[v];
    }
    t[i][rhs_col] = sign * row.rhs;
    Relation rel = row.relation;
    if (flip && rel == Relation::kLessEqual) rel = Relation::kGreaterEqual;
    else if (flip && rel == Relation::kGreaterEqual) rel = Relation::kLessEqual;
    if (rel == Relation::kLessEqual) {
      t[i][next_slack] = 1;
      basis[i] = next_slack++;
    } else {
      if (rel == Relation::kGreaterEqual) t[i][next_slack++] = -1;
      t[i][next_artificial] = 1;
      basis[i] = next_artificial++;
    }
  }

  Solution out;
  if (artificial_count > 0) {
    RatVec phase1(width - 1, 0);
    for (std::size_t j = first_artificial; j < width - 1; ++j) phase1[j] = -1;
    run_simplex(t, basis, phase1, width - 1);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= first_artificial) infeasibility += t[i][rhs_col];
    if (infeasibility != 0) {
      out.status = Status::kInfeasible;
      return out;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.size();) {
      if (basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (t[i][j] != 0) {
          col = j;
          break;
        }
      if (col == first_artificial) {
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(t, basis, i, col);
        ++i;
      }
    }
  }

  RatVec cost(width - 1, 0);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    cost[pos_col[v]] = objective_[v];
    if (free_[v]) cost[neg_col[v]] = -objective_[v];
  }
  if (!run_simplex(t, basis, cost, first_artificial)) {
    out.status = Status::kUnbounded;
    return out;
  }
  RatVec column_values(width - 1, 0);
  for (std::size_t i = 0; i < t.size(); ++i) column_values[basis[i]] = t[i][rhs_col];
  out.status = Status::kOptimal;
  out.values.assign(num_vars_, 0);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    out.values[v] = column_values[pos_col[v]];
    if (free_[v]) out.values[v] -= column_values[neg_col[v]];
    out.objective += objective_[v] * out.values[v];
  }
  return out;
}

bool in_convex_hull(const RatVec& point, const std::vector<RatVec>& generators) {
  if (generators.empty()) return false;
  const std::size_t n = generators.size();
  LinearProgram lp(n);
  for (std::size_t c = 0; c < point.size(); ++c) {
    RatVec row(n);
    for (std::size_t g = 0; g < n; ++g) row[g] = generators[g][c];
    lp.add(std::move(row), Relation::kEqual, point[c]);
  }
  lp.add(RatVec(n, 1), Relation::kEqual, 1);
  return lp.feasible();
}

}  // namespace dimtrace::lp
