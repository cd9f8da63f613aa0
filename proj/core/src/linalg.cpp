#include "dimtrace/linalg.hpp"

#include <utility>

namespace dimtrace::linalg {

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m, std::size_t cols) { return rref(m, cols).size(); }

RatMatrix nullspace(RatMatrix m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& rhs, std::size_t cols) {
  RatMatrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    aug[r].resize(cols);
    aug[r].push_back(rhs[r]);
  }
  const auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

RatMatrix transpose(const RatMatrix& m, std::size_t cols) {
  RatMatrix t(cols, RatVec(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  return t;
}

RatVec primitive_direction(const RatVec& v) {
  const Int lcm = lcm_of_denominators(v);
  Int g = 0;
  for (const auto& q : v) {
    Int z = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g == 0) return v;
  RatVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(Rational(q * lcm / g));
  return out;
}

}  // namespace dimtrace::linalg
