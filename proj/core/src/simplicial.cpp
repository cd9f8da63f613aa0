#include "dimtrace/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "dimtrace/error.hpp"

namespace dimtrace::simplicial {

namespace {

// Reachable-sum set over [0, limit] as packed bits.
class SumSet {
 public:
  explicit SumSet(std::size_t limit) : limit_(limit), words_(limit / 64 + 1, 0) { words_[0] = 1; }

  void add_shifted(std::size_t shift) {
    std::vector<std::uint64_t> shifted(words_.size(), 0);
    const std::size_t ws = shift / 64, bs = shift % 64;
    for (std::size_t i = 0; i + ws < words_.size(); ++i) {
      shifted[i + ws] |= words_[i] << bs;
      if (bs && i + ws + 1 < words_.size()) shifted[i + ws + 1] |= words_[i] >> (64 - bs);
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= shifted[i];
  }
  bool contains(std::size_t s) const { return s <= limit_ && (words_[s / 64] >> (s % 64) & 1u); }

 private:
  std::size_t limit_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

NormalForm normal_form(const RatVec& v) {
  if (v.empty()) throw InvalidInput("empty trace vector");
  NormalForm out;
  Int den_lcm = 1;
  for (const auto& q : v) {
    if (q < 0) throw InvalidInput("trace vector has a negative entry");
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<std::pair<Int, std::size_t>> scaled;
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      ++out.zero_count;
      continue;
    }
    const Int x = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    scaled.emplace_back(x, i);
  }
  if (scaled.empty()) throw InvalidInput("trace vector is zero");
  std::stable_sort(scaled.begin(), scaled.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [x, i] : scaled) {
    out.entries.push_back(x / g);
    out.permutation.push_back(i);
  }
  out.scale = Rational(den_lcm, g);
  out.scale.canonicalize();
  return out;
}

OrderUnitGoodResult is_order_unit_good(const RatVec& v) {
  OrderUnitGoodResult out;
  out.normal = normal_form(v);
  const auto& n = out.normal.entries;
  std::string perm = "[";
  for (std::size_t i = 0; i < out.normal.permutation.size(); ++i)
    perm += (i ? ", " : "") + std::to_string(out.normal.permutation[i] + 1);
  perm += "]";
  out.certificate.emplace_back("zeros_discarded", std::to_string(out.normal.zero_count));
  out.certificate.emplace_back("permutation", perm);
  if (n[0] != 1) {
    out.violating_index = 0;
    out.certificate.emplace_back("violation", "n(1)=" + n[0].get_str() + " != 1");
    return out;
  }
  Int partial = n[0];
  for (std::size_t j = 1; j < n.size(); ++j) {
    if (n[j] > partial + 1) {
      out.violating_index = j;
      std::string rhs = "1+n(1)";
      if (j == 2) rhs += "+n(2)";
      if (j > 2) rhs += "+...+n(" + std::to_string(j) + ")";
      out.certificate.emplace_back("violation", "n(" + std::to_string(j + 1) + ")=" + n[j].get_str() + " > " +
                                                    rhs + "=" + Int(partial + 1).get_str());
      return out;
    }
    partial += n[j];
  }
  out.holds = true;
  return out;
}

bool is_good(const RatVec& v) {
  const NormalForm nf = normal_form(v);
  return std::all_of(nf.entries.begin(), nf.entries.end(), [](const Int& x) { return x == 1; });
}

LiftingResult interval_lifting_oracle(const IntVec& v, unsigned long bound, bool order_units_only) {
  const std::size_t k = v.size();
  if (k == 0) throw InvalidInput("empty trace vector");
  if (bound == 0) throw InvalidInput("order-unit bound must be positive");
  Int g = 0;
  for (const auto& x : v) {
    if (x < 0) throw InvalidInput("trace vector has a negative entry");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) throw InvalidInput("trace vector is zero");
  const unsigned long lo = order_units_only ? 1 : 0;
  const unsigned long width = bound - lo + 1;
  double points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= double(width);
  Int total = 0;
  for (const auto& x : v) total += x;
  if (points * double(k) > double(kMaxLiftingPoints) || total * bound > Int(kMaxLiftingPoints))
    throw SizeEnvelopeExceeded("lifting enumeration over " + std::to_string(static_cast<long long>(points)) +
                               " order units");
  std::vector<unsigned long> vv;
  for (const auto& x : v) vv.push_back(x.get_ui());
  const unsigned long step = g.get_ui();

  std::vector<unsigned long> b(k, lo);
  for (;;) {
    unsigned long phi = 0;
    for (std::size_t i = 0; i < k; ++i) phi += vv[i] * b[i];
    SumSet sums(phi);
    for (std::size_t i = 0; i < k; ++i)
      if (vv[i] != 0)
        for (unsigned long c = 0; c < b[i]; ++c) sums.add_shifted(vv[i]);
    for (unsigned long s = 0; s <= phi; s += step)
      if (!sums.contains(s)) {
        LiftingResult r;
        r.holds = false;
        IntVec bb;
        for (auto x : b) bb.emplace_back(x);
        r.counterexample = LiftingCounterexample{std::move(bb), Int(s)};
        return r;
      }
    std::size_t i = k;
    while (i > 0 && b[i - 1] == bound) b[--i] = lo;
    if (i == 0) break;
    ++b[i - 1];
  }
  return {};
}

}  // namespace dimtrace::simplicial
