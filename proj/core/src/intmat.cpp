#include "dimtrace/intmat.hpp"

#include <utility>

namespace dimtrace::intmat {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy_row(IntVec& target, const IntVec& source, const Int& factor) {
  for (std::size_t c = 0; c < target.size(); ++c) target[c] -= factor * source[c];
}

}  // namespace

HermiteDecomposition hermite_decompose(const IntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  // Augmented [m | I]; row operations on the left block are mirrored right.
  IntMatrix aug(rows, IntVec(cols + rows, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = m[r][c];
    aug[r][cols + r] = 1;
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (aug[r][col] == 0) continue;
        if (best == rows || abs(aug[r][col]) < abs(aug[best][col])) best = r;
      }
      if (best == rows) break;
      std::swap(aug[pivot_row], aug[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (aug[r][col] == 0) continue;
        const Int q = floor_div(aug[r][col], aug[pivot_row][col]);
        axpy_row(aug[r], aug[pivot_row], q);
        if (aug[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (aug[pivot_row][col] == 0) continue;
    if (aug[pivot_row][col] < 0)
      for (auto& x : aug[pivot_row]) x = -x;
    for (std::size_t r = 0; r < pivot_row; ++r) {
      const Int q = floor_div(aug[r][col], aug[pivot_row][col]);
      if (q != 0) axpy_row(aug[r], aug[pivot_row], q);
    }
    ++pivot_row;
  }
  HermiteDecomposition out;
  out.rank = pivot_row;
  out.hnf.assign(rows, IntVec(cols));
  out.transform.assign(rows, IntVec(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.hnf[r][c] = aug[r][c];
    for (std::size_t c = 0; c < rows; ++c) out.transform[r][c] = aug[r][cols + c];
  }
  return out;
}

IntMatrix hermite_basis(const IntMatrix& m, std::size_t cols) {
  auto dec = hermite_decompose(m, cols);
  dec.hnf.resize(dec.rank);
  return std::move(dec.hnf);
}

IntMatrix left_kernel(const IntMatrix& m, std::size_t cols) {
  const auto dec = hermite_decompose(m, cols);
  IntMatrix kernel(dec.transform.begin() + static_cast<std::ptrdiff_t>(dec.rank), dec.transform.end());
  if (kernel.empty()) return kernel;
  return hermite_basis(kernel, m.size());
}

std::vector<Int> smith_invariants(const IntMatrix& m, std::size_t cols) {
  IntMatrix a = m;
  const std::size_t rows = a.size();
  std::vector<Int> out;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (br == rows || abs(a[r][c]) < abs(a[br][bc]))) {
            br = r;
            bc = c;
          }
      if (br == rows) return out;
      std::swap(a[t], a[br]);
      for (auto& row : a) std::swap(row[t], row[bc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const Int q = floor_div(a[r][t], a[t][t]);
        axpy_row(a[r], a[t], q);
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const Int q = floor_div(a[t][c], a[t][t]);
        for (std::size_t r = 0; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = 0; k < cols; ++k) a[t][k] += a[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

ScaledIntMatrix clear_denominators(const std::vector<RatVec>& rows) {
  ScaledIntMatrix out;
  for (const auto& row : rows) {
    const Int l = lcm_of_denominators(row);
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), l.get_mpz_t());
  }
  for (const auto& row : rows) {
    IntVec z;
    z.reserve(row.size());
    for (const auto& q : row) z.emplace_back(q.get_num() * (out.denominator / q.get_den()));
    out.rows.push_back(std::move(z));
  }
  return out;
}

}  // namespace dimtrace::intmat
