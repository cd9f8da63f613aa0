#include "doctest.h"

#include <random>

#include "dimtrace/algebraic.hpp"
#include "dimtrace/error.hpp"
#include "oracles/roots.hpp"

using namespace dimtrace;
using namespace dimtrace::algebraic;

namespace {

AlgebraicNumber1D num(std::initializer_list<long> c) { return AlgebraicNumber1D::from_minpoly(IntPolynomial(c)); }

std::string cert_value(const Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("polynomial basics") {
  const IntPolynomial p{-4, 0, 6};
  CHECK(p.degree() == 2);
  CHECK(p.content() == 2);
  CHECK(p.primitive_normal_form() == IntPolynomial{-2, 0, 3});
  CHECK(p.primitive_normal_form().primitive_normal_form() == p.primitive_normal_form());
  CHECK((-p).primitive_normal_form() == IntPolynomial{-2, 0, 3});
  CHECK(IntPolynomial({1, 2, 3}).reversal() == IntPolynomial{3, 2, 1});
  CHECK(IntPolynomial({-2, 3}).scale_roots(3) == IntPolynomial{-6, 3});
  CHECK(gcd(IntPolynomial{2, -3, 1}, IntPolynomial{-1, 1}) == IntPolynomial{-1, 1});
  CHECK(squarefree_part(IntPolynomial{1, -2, 1}) == IntPolynomial{-1, 1});
  IntPolynomial q;
  CHECK(divides(IntPolynomial{-1, 1}, IntPolynomial{2, -3, 1}, &q));
  CHECK(q == IntPolynomial{-2, 1});
  CHECK_FALSE(divides(IntPolynomial{0, 2}, IntPolynomial{1, 1}));
  CHECK(IntPolynomial({1, -1, 0, 2}).to_string() == "2x^3 - x + 1");
}

TEST_CASE("sturm_positive_root_count") {
  CHECK(sturm_positive_root_count(IntPolynomial{-2, 0, 1}) == 1);
  CHECK(sturm_positive_root_count(IntPolynomial{2, -3, 1}) == 2);
  CHECK(sturm_positive_root_count(IntPolynomial{1, 0, 1}) == 0);
  CHECK(sturm_positive_root_count(IntPolynomial{0, -1, 1}) == 1);  // roots 0 and 1
  CHECK(sturm_positive_root_count(IntPolynomial{1, -2, 1}) == 1);  // double root counted once
  CHECK_THROWS_WITH_AS(sturm_positive_root_count(IntPolynomial{}), doctest::Contains("undefined root count"),
                       InvalidInput);
}

TEST_CASE("count_roots on intervals") {
  const IntPolynomial p{2, -3, 1};
  CHECK(count_roots_closed(p, 1, 2) == 2);
  CHECK(count_roots(p, 1, 2) == 1);
  CHECK(count_roots_closed(p, Rational(3, 2), 3) == 1);
  CHECK(count_roots_closed(p, 3, 4) == 0);
}

TEST_CASE("algebraic number validation") {
  CHECK_THROWS_AS(num({1, 0, 1}), InvalidInput);        // no positive root
  CHECK_THROWS_AS(num({1, -2, 1}), InvalidInput);       // not squarefree
  CHECK_THROWS_AS(AlgebraicNumber1D::from_minpoly(IntPolynomial{2, -3, 1}, RootInterval{0, 3}), InvalidInput);
  const auto r = AlgebraicNumber1D::from_minpoly(IntPolynomial{2, -3, 1}, RootInterval{Rational(3, 2), 3});
  CHECK(isolate(r, Rational(1, 100)).hi >= 2);
  CHECK(num({-4, 0, 2}).minpoly() == IntPolynomial{-2, 0, 1});
}

TEST_CASE("is_really_isolated_1d") {
  CHECK(is_really_isolated_1d(num({-1, 1})));
  CHECK(is_really_isolated_1d(num({-1, -1, 1})));
  CHECK_FALSE(is_really_isolated_1d(num({1, -3, 1})));
}

TEST_CASE("scaled_integrality") {
  auto a = scaled_integrality(num({-2, 3}), 3);
  CHECK(a.holds);
  CHECK(a.witness_t == 1u);
  auto b = scaled_integrality(num({-1, 2}), 3);
  CHECK_FALSE(b.holds);
  CHECK(b.failing_prime == 2);
  CHECK_FALSE(scaled_integrality_search(IntPolynomial{-1, 2}, 3, 20));
  auto c = scaled_integrality(num({-1, -1, 1}), 1);
  CHECK(c.holds);
  CHECK(c.witness_t == 0u);
  // 4 | 2^2: t = 2 is needed for (1/4) against a = 2.
  CHECK(scaled_integrality(num({-1, 4}), 2).witness_t == 2u);
  CHECK_THROWS_AS(scaled_integrality(num({-1, 1}), 0), InvalidInput);
}

TEST_CASE("condition_one_1d") {
  const IntPolynomial one_plus_x{1, 1};
  CHECK(condition_one_1d(one_plus_x, num({-1, -1, 1})).holds);
  CHECK_FALSE(condition_one_1d(one_plus_x, num({-2, 1})).holds);
  const auto r = condition_one_1d(IntPolynomial{2, 3}, num({-2, 3}));
  CHECK(r.holds);
  CHECK(cert_value(r.certificate, "forward.witness_t") == "1");
  CHECK(cert_value(r.certificate, "mode") == "standard");
  CHECK_THROWS_WITH(condition_one_1d(IntPolynomial{0, 1, 1}, num({-1, 1})), doctest::Contains("zero end coefficient"));
  CHECK_THROWS_WITH(condition_one_1d(IntPolynomial{1, 0, 1}, num({-1, 1})),
                    doctest::Contains("not projectively faithful"));
  CHECK(condition_one_1d(IntPolynomial{2, 0, 1, 3}, num({-2, 3})).extended_hypothesis);
}

TEST_CASE("is_algebraic_unit") {
  CHECK(is_algebraic_unit(num({-1, -1, 1})));
  CHECK(is_algebraic_unit(num({-1, 1})));
  CHECK_FALSE(is_algebraic_unit(num({-2, 1})));
}

TEST_CASE("classify_trace_1d") {
  auto g = classify_trace_1d(IntPolynomial{2, 3}, num({-2, 3}));
  CHECK(g.overall == Overall::kGood);
  CHECK(g.condition1);
  CHECK(g.really_isolated);
  CHECK(g.approx_divisible);
  auto n = classify_trace_1d(IntPolynomial{2, 3}, num({1, -3, 1}));
  CHECK(n.overall == Overall::kNotOrderUnitGood);
  CHECK(cert_value(n.certificate, "positive_conjugates") == "2");
  auto d = classify_trace_1d(IntPolynomial{1, 1}, num({-1, 1}));
  CHECK(d.overall == Overall::kNotApplicableDiscrete);
  CHECK(d.condition1);
  CHECK_FALSE(d.approx_divisible);
}

TEST_CASE("kronecker_irreducible") {
  CHECK(kronecker_irreducible(IntPolynomial{-1, -1, 1}, 6).status == Irreducibility::kIrreducible);
  auto r = kronecker_irreducible(IntPolynomial{2, -3, 1}, 6);
  REQUIRE(r.status == Irreducibility::kReducible);
  CHECK((r.factor == IntPolynomial{-1, 1} || r.factor == IntPolynomial{-2, 1}));
  CHECK(kronecker_irreducible(IntPolynomial{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 6).status == Irreducibility::kUnknown);
  // (x^2 + 1)(x^2 + x + 1): no rational roots, a quadratic factor.
  auto q = kronecker_irreducible(IntPolynomial{1, 1, 2, 1, 1}, 6);
  REQUIRE(q.status == Irreducibility::kReducible);
  CHECK(q.factor.degree() == 2);
  CHECK(kronecker_irreducible(IntPolynomial{-2, 0, 0, 0, 1}, 6).status == Irreducibility::kIrreducible);
  const auto f = factor_irreducible(IntPolynomial{-6, 11, -6, 1}, 6);
  CHECK(f == std::vector<IntPolynomial>{IntPolynomial{-3, 1}, IntPolynomial{-2, 1}, IntPolynomial{-1, 1}});
}

TEST_CASE("resultant products") {
  // sqrt(2) * sqrt(3) = sqrt(6)
  const auto r = multiply(num({-2, 0, 1}), num({-3, 0, 1}), 9);
  CHECK(r.minpoly() == IntPolynomial{-6, 0, 1});
  // sqrt(2) * sqrt(2) = 2
  CHECK(multiply(num({-2, 0, 1}), num({-2, 0, 1}), 9).minpoly() == IntPolynomial{-2, 1});
  // golden ratio squared satisfies x^2 - 3x + 1; pick the larger root.
  const auto phi = num({-1, -1, 1});
  const auto sq = multiply(phi, phi, 9);
  CHECK(sq.minpoly() == IntPolynomial{1, -3, 1});
  CHECK(isolate(sq, Rational(1, 1000)).lo > 2);
  CHECK(determinant({{IntVec{2, 1}, IntVec{1, 3}}}) == 5);
}

TEST_CASE("reciprocal reverses the minimal polynomial") {
  const auto r = num({-2, 3});
  CHECK(r.reciprocal().minpoly() == IntPolynomial{-3, 2});
  const auto s = AlgebraicNumber1D::from_minpoly(IntPolynomial{2, -3, 1}, RootInterval{Rational(3, 2), 3});
  const auto inv = s.reciprocal();
  CHECK(inv.minpoly() == IntPolynomial{1, -3, 2});
  CHECK(count_roots_closed(inv.minpoly(), inv.interval()->lo, inv.interval()->hi) == 1);
  CHECK(inv.interval()->hi <= Rational(2, 3));
}

TEST_CASE("sturm agrees with Descartes bisection on a sample") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-50, 50), deg(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    IntVec v(c.begin(), c.end());
    CHECK(sturm_positive_root_count(IntPolynomial(v)) == oracle::positive_roots(c));
  }
}

TEST_CASE("reversal duality of condition one") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(1, 12), mid(1, 6), lead(1, 8);
  int checked = 0;
  while (checked < 60) {
    const IntPolynomial p{small(rng), mid(rng), small(rng)};
    IntPolynomial m{-small(rng), mid(rng) - 3, lead(rng)};
    if (gcd(m, m.derivative()).degree() > 0 || sturm_positive_root_count(m) == 0) continue;
    const auto r = AlgebraicNumber1D::from_minpoly(m);
    CHECK(condition_one_1d(p, r).holds == condition_one_1d(p.reversal(), r.reciprocal()).holds);
    ++checked;
  }
}
