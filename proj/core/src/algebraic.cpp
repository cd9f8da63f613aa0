#include "dimtrace/algebraic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "dimtrace/error.hpp"

namespace dimtrace::algebraic {

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<IntPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return sign_variations(signs);
}

int variations_at_zero(const std::vector<IntPolynomial>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(sgn(q.coeff(0)));
  return sign_variations(signs);
}

int variations_at_infinity(const std::vector<IntPolynomial>& chain) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(sgn(q.leading()));
  return sign_variations(signs);
}

IntPolynomial checked_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("undefined root count for the zero polynomial");
  return squarefree_part(p);
}

unsigned long valuation(Int n, const Int& p) {
  unsigned long v = 0;
  n = abs(n);
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<Int> positive_divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    Int power = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Monomial coefficients of the interpolating polynomial through (xs, vs).
RatVec interpolate(const std::vector<Int>& xs, const std::vector<Rational>& vs) {
  const std::size_t n = xs.size();
  RatVec dd(vs.begin(), vs.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  RatVec coeffs(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (x - xs[k]) + dd[k]
    RatVec next(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] += coeffs[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= coeffs[i] * xs[k];
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  return coeffs;
}

std::optional<IntPolynomial> integer_polynomial(const RatVec& coeffs) {
  IntVec v;
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

bool polynomial_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

std::string interval_text(const RootInterval& i) {
  return "[" + to_string(i.lo) + ", " + to_string(i.hi) + "]";
}

}  // namespace

// ---- AlgebraicNumber1D ---------------------------------------------------

AlgebraicNumber1D AlgebraicNumber1D::from_minpoly(const IntPolynomial& minpoly,
                                                  std::optional<RootInterval> interval) {
  if (minpoly.degree() < 1) throw InvalidInput("minimal polynomial must have degree at least 1");
  IntPolynomial p = minpoly.primitive_normal_form();
  if (gcd(p, p.derivative()).degree() > 0)
    throw InvalidInput("minimal polynomial " + p.to_string() + " is not squarefree");
  if (sturm_positive_root_count(p) == 0)
    throw InvalidInput("minimal polynomial " + p.to_string() + " has no positive root");
  if (interval) {
    if (interval->lo < 0 || interval->lo > interval->hi)
      throw InvalidInput("isolating interval " + interval_text(*interval) + " is malformed");
    const std::size_t n = count_roots_closed(p, interval->lo, interval->hi);
    if (n != 1)
      throw InvalidInput("isolating interval " + interval_text(*interval) + " contains " +
                         std::to_string(n) + " roots of " + p.to_string());
    if (interval->hi == 0) throw InvalidInput("isolating interval selects the root 0");
  }
  return AlgebraicNumber1D(std::move(p), std::move(interval));
}

AlgebraicNumber1D AlgebraicNumber1D::from_rational(const Rational& q) {
  if (q <= 0) throw InvalidInput("rational point " + to_string(q) + " is not positive");
  IntPolynomial p(IntVec{-q.get_num(), q.get_den()});
  return AlgebraicNumber1D(std::move(p), RootInterval{q, q});
}

AlgebraicNumber1D AlgebraicNumber1D::reciprocal() const {
  IntPolynomial rev = minpoly_.reversal().primitive_normal_form();
  std::optional<RootInterval> inv;
  if (interval_) {
    Rational lo = interval_->lo;
    if (lo == 0) lo = 1 / root_bound(rev);
    inv = RootInterval{1 / interval_->hi, 1 / lo};
  }
  return AlgebraicNumber1D(std::move(rev), std::move(inv));
}

// ---- root counting -------------------------------------------------------

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& squarefree) {
  std::vector<IntPolynomial> chain{squarefree};
  if (squarefree.degree() < 1) return chain;
  chain.push_back(squarefree.derivative());
  while (true) {
    const RatCoeffs r = remainder(to_rational(chain[chain.size() - 2]), to_rational(chain.back()));
    if (r.empty()) break;
    chain.push_back(-positive_primitive(r));
  }
  return chain;
}

std::size_t count_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (hi <= lo) return 0;
  const auto chain = sturm_sequence(checked_squarefree(p));
  return static_cast<std::size_t>(variations_at(chain, lo) - variations_at(chain, hi));
}

std::size_t count_roots_closed(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) return 0;
  return count_roots(p, lo, hi) + (p.sign_at(lo) == 0 ? 1 : 0);
}

std::size_t sturm_positive_root_count(const IntPolynomial& p) {
  const auto chain = sturm_sequence(checked_squarefree(p));
  return static_cast<std::size_t>(variations_at_zero(chain) - variations_at_infinity(chain));
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) throw InvalidInput("root bound of a constant polynomial");
  Rational m = 0;
  for (long i = 0; i < p.degree(); ++i) {
    Rational q(abs(p[static_cast<std::size_t>(i)]), abs(p.leading()));
    q.canonicalize();
    m = std::max(m, q);
  }
  return 1 + m;
}

RootInterval refine(const IntPolynomial& p, RootInterval interval, const Rational& width) {
  while (interval.hi - interval.lo > width) {
    const Rational mid = (interval.lo + interval.hi) / 2;
    if (p.sign_at(mid) == 0) return {mid, mid};
    if (count_roots_closed(p, interval.lo, mid) > 0)
      interval.hi = mid;
    else
      interval.lo = mid;
  }
  return interval;
}

RootInterval isolate(const AlgebraicNumber1D& r, const std::optional<Rational>& width) {
  const IntPolynomial& p = r.minpoly();
  RootInterval i;
  if (p.degree() == 1) {
    Rational q(-p[0], p[1]);
    q.canonicalize();
    return {q, q};
  }
  if (r.interval()) {
    i = *r.interval();
  } else {
    const std::size_t n = sturm_positive_root_count(p);
    if (n != 1)
      throw InvalidInput("root selection is ambiguous: " + p.to_string() + " has " + std::to_string(n) +
                         " positive roots; give an isolating interval");
    i = {0, root_bound(p)};
  }
  if (i.lo == 0) {
    // Move off zero so that reciprocals and products stay finite.
    i.lo = 1 / root_bound(p.reversal());
  }
  if (width) i = refine(p, i, *width);
  return i;
}

// ---- goodness criteria ---------------------------------------------------

bool is_really_isolated_1d(const AlgebraicNumber1D& r) {
  return sturm_positive_root_count(r.minpoly()) == 1;
}

bool is_algebraic_unit(const AlgebraicNumber1D& r) {
  const IntPolynomial& p = r.minpoly();
  return p.leading() == 1 && abs(p[0]) == 1;
}

std::optional<unsigned long> scaled_integrality_search(const IntPolynomial& minpoly, const Int& a,
                                                       unsigned long max_t) {
  for (unsigned long t = 0; t <= max_t; ++t) {
    const IntPolynomial q = minpoly.scale_roots(ipow(a, t)).primitive_normal_form();
    if (q.leading() == 1) return t;
  }
  return std::nullopt;
}

ScaledIntegrality scaled_integrality(const AlgebraicNumber1D& r, const Int& a) {
  if (a < 1) throw InvalidInput("scaling base must be a positive integer, got " + a.get_str());
  ScaledIntegrality out;
  out.leading = r.minpoly().leading();
  out.failing_prime = first_prime_not_dividing(out.leading, a);
  out.holds = out.failing_prime == 0;
  if (!out.holds) return out;
  // With c_n | a^T the number a^T r = (a^T / c_n)(c_n r) is integral.
  unsigned long bound = 0;
  for (const auto& pp : factorize(out.leading)) {
    const unsigned long va = valuation(a, pp.prime);
    bound = std::max(bound, (pp.exponent + va - 1) / va);
  }
  out.witness_t = scaled_integrality_search(r.minpoly(), a, bound);
  if (!out.witness_t) throw Error("internal: no integrality witness below the proven bound");
  return out;
}

void validate_trace_polynomial(const IntPolynomial& p) {
  if (p.degree() < 1) throw InvalidInput("trace polynomial must have degree at least 1");
  for (const auto& c : p.coeffs())
    if (c < 0) throw InvalidInput("trace polynomial has a negative coefficient");
  if (p[0] == 0) throw InvalidInput("zero end coefficient: the constant term must be nonzero");
  unsigned long g = 0;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    if (p[i] != 0) g = std::gcd(g, static_cast<unsigned long>(i));
  if (g != 1) throw InvalidInput("not projectively faithful: exponents share the factor " + std::to_string(g));
}

ConditionOneResult condition_one_1d(const IntPolynomial& p, const AlgebraicNumber1D& r) {
  validate_trace_polynomial(p);
  ConditionOneResult out;
  out.lowest_coefficient = p[0];
  out.highest_coefficient = p.leading();
  for (long i = 1; i < p.degree(); ++i)
    if (p[static_cast<std::size_t>(i)] == 0) out.extended_hypothesis = true;
  out.forward = scaled_integrality(r, out.highest_coefficient);
  out.reciprocal = scaled_integrality(r.reciprocal(), out.lowest_coefficient);
  out.holds = out.forward.holds && out.reciprocal.holds;

  auto& cert = out.certificate;
  cert.emplace_back("mode", out.extended_hypothesis ? "extended-hypothesis" : "standard");
  cert.emplace_back("a_0", to_string(out.lowest_coefficient));
  cert.emplace_back("a_k", to_string(out.highest_coefficient));
  cert.emplace_back("minpoly_leading", to_string(out.forward.leading));
  cert.emplace_back("minpoly_constant", to_string(out.reciprocal.leading));
  auto record = [&cert](const std::string& tag, const ScaledIntegrality& s) {
    if (s.holds)
      cert.emplace_back(tag + ".witness_t", std::to_string(*s.witness_t));
    else
      cert.emplace_back(tag + ".failing_prime", to_string(s.failing_prime));
  };
  record("forward", out.forward);
  record("reciprocal", out.reciprocal);
  return out;
}

TraceVerdict classify_trace_1d(const IntPolynomial& p, const AlgebraicNumber1D& r) {
  const ConditionOneResult c1 = condition_one_1d(p, r);
  TraceVerdict v;
  v.condition1 = c1.holds;
  const std::size_t positive = sturm_positive_root_count(r.minpoly());
  v.really_isolated = positive == 1;
  v.approx_divisible = p[0] > 1 && p.leading() > 1;
  v.overall = combine_verdict(v.condition1, v.really_isolated, v.approx_divisible);
  v.certificate = c1.certificate;
  v.certificate.emplace_back("positive_conjugates", std::to_string(positive));
  v.certificate.emplace_back("vertex_coefficients",
                             "[" + to_string(p[0]) + ", " + to_string(p.leading()) + "]");
  return v;
}

// ---- factorization and products ------------------------------------------

IrreducibilityResult kronecker_irreducible(const IntPolynomial& p, long degree_limit) {
  if (p.degree() < 1) throw InvalidInput("irreducibility test needs degree at least 1");
  const IntPolynomial q = p.primitive_normal_form();
  const long n = q.degree();
  if (n > degree_limit) return {Irreducibility::kUnknown, {}};
  if (n == 1) return {Irreducibility::kIrreducible, {}};
  if (q[0] == 0) return {Irreducibility::kReducible, IntPolynomial{0, 1}};

  struct Point {
    Int x;
    Int value;
    std::vector<Int> divisors;
  };
  std::vector<Point> points;
  const long reach = n + 8;
  for (long k = 0; k <= 2 * reach; ++k) {
    const long x = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    const Int v = q.evaluate(Int(x));
    if (v == 0) return {Irreducibility::kReducible, IntPolynomial{-x, 1}};
    try {
      points.push_back({Int(x), v, positive_divisors(v)});
    } catch (const FactorizationIncomplete&) {
      // Values that cannot be factored are simply not used.
    }
  }
  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.divisors.size() < b.divisors.size();
  });

  for (long d = 1; d <= n / 2; ++d) {
    const std::size_t m = static_cast<std::size_t>(d) + 1;
    if (points.size() < m) return {Irreducibility::kUnknown, {}};
    std::vector<Int> xs;
    for (std::size_t i = 0; i < m; ++i) xs.push_back(points[i].x);
    std::vector<Int> chosen(m);
    std::optional<IntPolynomial> found;

    std::function<void(std::size_t)> search = [&](std::size_t i) {
      if (found) return;
      if (i == m) {
        std::vector<Rational> vs(chosen.begin(), chosen.end());
        auto g = integer_polynomial(interpolate(xs, vs));
        if (!g || g->degree() != d) return;
        if ((*g)[0] == 0 || q.leading() % g->leading() != 0 || q[0] % (*g)[0] != 0) return;
        for (std::size_t j = m; j < points.size(); ++j) {
          const Int gv = g->evaluate(points[j].x);
          if (gv == 0 || points[j].value % gv != 0) return;
        }
        if (divides(*g, q)) found = g->primitive_normal_form();
        return;
      }
      for (const Int& div : points[i].divisors) {
        for (int s : {1, -1}) {
          if (i == 0 && s < 0) continue;  // g and -g are the same factor
          const Int cand = s * div;
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j)
            ok = (cand - chosen[j]) % (points[i].x - points[j].x) == 0;
          if (!ok) continue;
          chosen[i] = cand;
          search(i + 1);
          if (found) return;
        }
      }
    };
    search(0);
    if (found) return {Irreducibility::kReducible, *found};
  }
  return {Irreducibility::kIrreducible, {}};
}

std::vector<IntPolynomial> factor_irreducible(const IntPolynomial& p, long degree_limit) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  const IntPolynomial q = p.primitive_normal_form();
  if (q.degree() < 1) return {};
  const IrreducibilityResult res = kronecker_irreducible(q, degree_limit);
  switch (res.status) {
    case Irreducibility::kUnknown:
      throw SizeEnvelopeExceeded("degree " + std::to_string(q.degree()) + " is above the factorization limit " +
                                 std::to_string(degree_limit));
    case Irreducibility::kIrreducible:
      return {q};
    case Irreducibility::kReducible:
      break;
  }
  IntPolynomial cofactor;
  if (!divides(res.factor, q, &cofactor)) throw Error("internal: Kronecker factor does not divide");
  auto out = factor_irreducible(res.factor, degree_limit);
  auto rest = factor_irreducible(cofactor, degree_limit);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end(), polynomial_less);
  return out;
}

Int determinant(std::vector<IntVec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPolynomial product_resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.degree() < 1 || q.degree() < 1) throw InvalidInput("resultant needs nonconstant polynomials");
  if (q[0] == 0) throw InvalidInput("resultant product needs a nonzero constant term");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t m = static_cast<std::size_t>(q.degree());
  const std::size_t size = n + m;
  std::vector<Int> xs;
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= n * m; ++k) {
    const Int x(static_cast<unsigned long>(k));
    // y^m q(x/y) as a polynomial in y: coefficient of y^(m-i) is q_i x^i.
    IntVec qy(m + 1);
    for (std::size_t i = 0; i <= m; ++i) qy[m - i] = q[i] * ipow(x, static_cast<unsigned long>(i));
    std::vector<IntVec> syl(size, IntVec(size, 0));
    // Rows hold coefficients from the highest degree down.
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i <= n; ++i) syl[r][r + i] = p[n - i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i <= m; ++i) syl[m + r][r + i] = qy[m - i];
    xs.push_back(x);
    values.emplace_back(determinant(std::move(syl)));
  }
  auto out = integer_polynomial(interpolate(xs, values));
  if (!out) throw Error("internal: resultant interpolation is not integral");
  return *out;
}

AlgebraicNumber1D multiply(const AlgebraicNumber1D& r1, const AlgebraicNumber1D& r2, long degree_limit) {
  const IntPolynomial res = product_resultant(r1.minpoly(), r2.minpoly());
  const std::vector<IntPolynomial> factors = factor_irreducible(squarefree_part(res), degree_limit);
  RootInterval i1 = isolate(r1);
  RootInterval i2 = isolate(r2);
  for (int round = 0; round < 400; ++round) {
    const RootInterval j{i1.lo * i2.lo, i1.hi * i2.hi};
    std::size_t total = 0;
    const IntPolynomial* hit = nullptr;
    for (const auto& f : factors) {
      const std::size_t c = count_roots_closed(f, j.lo, j.hi);
      total += c;
      if (c > 0) hit = &f;
    }
    if (total == 1) return AlgebraicNumber1D::from_minpoly(*hit, j);
    i1 = refine(r1.minpoly(), i1, (i1.hi - i1.lo) / 2);
    i2 = refine(r2.minpoly(), i2, (i2.hi - i2.lo) / 2);
  }
  throw Error("internal: product root could not be separated");
}

}  // namespace dimtrace::algebraic
