#pragma once

// Positive-root counting by Descartes bisection (Vincent-Collins-Akritas),
// with its own rational polynomial arithmetic. Shares no code with the
// Sturm implementation it checks.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QPoly = std::vector<Q>;  // index = degree

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Q f = a.back() / b.back();
    const std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline QPoly quo(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const Q f = a.back() / b.back();
    const std::size_t s = a.size() - b.size();
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    trim(a);
  }
  return q;
}

inline QPoly deriv(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

inline QPoly euclid_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Q eval(const QPoly& p, const Q& x) {
  Q acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline int sign_changes(const QPoly& p) {
  int count = 0, last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// (1 + x)^n p((a + b x) / (1 + x)): its positive roots correspond to the
// roots of p in (a, b).
inline QPoly moebius(const QPoly& p, const Q& a, const Q& b) {
  const std::size_t n = p.size() - 1;
  QPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    QPoly term{p[i]};
    for (std::size_t k = 0; k < i; ++k) term = mul(term, QPoly{a, b});
    for (std::size_t k = i; k < n; ++k) term = mul(term, QPoly{1, 1});
    if (out.size() < term.size()) out.resize(term.size(), 0);
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += term[k];
  }
  trim(out);
  return out;
}

inline std::size_t roots_in_open(const QPoly& sf, const Q& a, const Q& b) {
  const int v = sign_changes(moebius(sf, a, b));
  if (v == 0) return 0;
  if (v == 1) return 1;
  const Q m = (a + b) / 2;
  return roots_in_open(sf, a, m) + roots_in_open(sf, m, b) + (eval(sf, m) == 0 ? 1 : 0);
}

/// Distinct roots in (0, inf).
inline std::size_t positive_roots(const std::vector<long>& coeffs) {
  QPoly p;
  for (long c : coeffs) p.emplace_back(c);
  trim(p);
  const QPoly g = euclid_gcd(p, deriv(p));
  const QPoly sf = g.size() > 1 ? quo(p, g) : p;
  if (sf.size() <= 1) return 0;
  Q bound = 0;
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
    Q r = abs(sf[i] / sf.back());
    if (r > bound) bound = r;
  }
  bound += 1;
  return roots_in_open(sf, 0, bound);
}

}  // namespace oracle
