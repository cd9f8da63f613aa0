#include "dimtrace/numeric.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "dimtrace/error.hpp"

namespace dimtrace {

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionBound; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Strong probable-prime test to base a for odd n > 2.
bool strong_probable_prime(const Int& n, unsigned long a) {
  Int d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  Int x;
  Int base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

}  // namespace

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (!valid_integer_text(s)) throw InvalidInput("malformed integer \"" + std::string(text) + "\"");
  return Int(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rational& raw) {
  Rational q = raw;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int ipow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    const auto e = static_cast<unsigned long>(exponent);
    Rational out(ipow(base.get_num(), e), ipow(base.get_den(), e));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw InvalidInput("zero raised to a negative power");
  return rpow(1 / base, -exponent);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  static const Int kDeterministicLimit("3317044064679887385961981", 10);
  if (n >= kDeterministicLimit)
    throw FactorizationIncomplete(n.get_str() + " is beyond the deterministic primality range");
  static constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long a : kBases) {
    if (n == a) return true;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(const Int& n) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  Int m = abs(n);
  std::vector<PrimePower> out;
  for (std::uint32_t p : small_primes()) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      PrimePower pp{Int(p), 0};
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++pp.exponent;
      }
      out.push_back(std::move(pp));
    }
  }
  if (m != 1) {
    // No factor below the bound: a cofactor under bound^2 is prime.
    const Int bound_sq = Int(kTrialDivisionBound) * kTrialDivisionBound;
    if (m < bound_sq || is_prime(m)) {
      out.push_back({m, 1});
    } else {
      throw FactorizationIncomplete("composite cofactor " + m.get_str() + " of " + n.get_str() +
                                    " has no prime factor below " +
                                    std::to_string(kTrialDivisionBound));
    }
  }
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

Int first_prime_not_dividing(const Int& c, const Int& a) {
  for (const Int& p : prime_divisors(c))
    if (a % p != 0) return p;
  return 0;
}

Int lcm_of_denominators(const RatVec& v) {
  Int out = 1;
  for (const auto& q : v) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace dimtrace
