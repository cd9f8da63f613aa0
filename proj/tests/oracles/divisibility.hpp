#pragma once

// Closed-form test for condition (1) of P = 2 + 3x + 5y at positive integer
// points (m, n): every prime of m divides 2 + 5n and every prime of n
// divides 2 + 3m.

namespace oracle {

inline bool every_prime_divides(long m, long target) {
  for (long p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    if (target % p != 0) return false;
    while (m % p == 0) m /= p;
  }
  return true;
}

inline bool condition_one_235(long m, long n) {
  return every_prime_divides(m, 2 + 5 * n) && every_prime_divides(n, 2 + 3 * m);
}

}  // namespace oracle
