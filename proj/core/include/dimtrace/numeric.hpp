#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dimtrace {

using Int = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);
Int parse_int(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Int& z);

Int ipow(const Int& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

struct PrimePower {
  Int prime;
  unsigned long exponent = 0;
};

// Trial division by every prime below this bound precedes primality testing.
inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Prime factorization of |n| (n != 0), primes ascending.
/// Trial division up to kTrialDivisionBound, then a deterministic
/// Miller-Rabin test on the cofactor; a cofactor that is composite or too
/// large for the deterministic test raises FactorizationIncomplete.
std::vector<PrimePower> factorize(const Int& n);

/// Distinct primes of |n| in ascending order (empty for n = +-1).
std::vector<Int> prime_divisors(const Int& n);

/// Deterministic for n < 3.3e24; throws FactorizationIncomplete above.
bool is_prime(const Int& n);

/// First prime p | c with p not dividing a, or 0 when every prime of c
/// divides a.
Int first_prime_not_dividing(const Int& c, const Int& a);

Int lcm_of_denominators(const RatVec& v);

}  // namespace dimtrace
