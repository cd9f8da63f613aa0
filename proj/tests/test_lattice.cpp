#include "doctest.h"

#include <random>

#include "dimtrace/error.hpp"
#include "dimtrace/lattice.hpp"

using namespace dimtrace;
using namespace dimtrace::lattice;

namespace {

RatVec row(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Z + sqrt(p_1)Z + ... as rows over `basis`, listed by label position.
EmbeddedGroup group(const RealBasis& basis, std::vector<RatVec> gens) { return EmbeddedGroup{basis, std::move(gens)}; }

const RealBasis kB2335 = RealBasis::squarefree_radicals({2, 3, 5});          // 1, r2, r3, r5
const RealBasis kB61510 = RealBasis::squarefree_radicals({6, 15, 10});     // 1, r6, r15, r10

EmbeddedGroup g1() { return group(kB2335, {row({1, 0, 0, 0}), row({0, 0, 1, 0}), row({0, 0, 0, 1})}); }
EmbeddedGroup g2() { return group(kB2335, {row({1, 0, 0, 0}), row({0, 1, 0, 0}), row({0, 0, 0, 1})}); }
EmbeddedGroup g3() { return group(kB2335, {row({1, 0, 0, 0}), row({0, 1, 1, 0})}); }

DirectSumInstance radical_sum(bool with_fourth) {
  DirectSumInstance d;
  d.summands.push_back(group(kB61510, {row({1, 0, 0, 0}), row({0, 1, 0, 0})}));
  d.summands.push_back(group(kB61510, {row({1, 0, 0, 0}), row({0, 0, 1, 0})}));
  d.summands.push_back(group(kB61510, {row({1, 0, 0, 0}), row({0, 0, 0, 1})}));
  if (with_fourth) d.summands.push_back(group(kB61510, {row({1, 0, 0, 0}), row({0, 1, 1, 1})}));
  return d;
}

}  // namespace

TEST_CASE("basis validation") {
  CHECK(kB2335.labels == std::vector<std::string>{"1", "sqrt(2)", "sqrt(3)", "sqrt(5)"});
  CHECK_THROWS_AS(RealBasis::squarefree_radicals({2, 8}), InvalidInput);
  CHECK_THROWS_AS(RealBasis::squarefree_radicals({3, 3}), InvalidInput);
  CHECK_THROWS_AS(RealBasis::squarefree_radicals({1}), InvalidInput);
  CHECK_THROWS_AS(RealBasis::asserted({"pi", "1"}), InvalidInput);
  CHECK_NOTHROW(RealBasis::asserted({"1", "pi"}));
}

TEST_CASE("intersect") {
  const auto a = intersect(g1(), g2());
  CHECK(a.gens == std::vector<RatVec>{row({1, 0, 0, 0}), row({0, 0, 0, 1})});
  const auto b = intersect(g1(), g3());
  CHECK(b.gens == std::vector<RatVec>{row({1, 0, 0, 0})});
  CHECK(intersect(g1(), g1()).gens == rational_hermite_basis(g1().gens, 4));
  CHECK_THROWS_WITH(intersect(g1(), group(kB61510, {row({1, 0, 0, 0})})), doctest::Contains("basis mismatch"));
  // (1/2)Z cap (1/3)Z = Z
  const RealBasis q = RealBasis::asserted({"1"});
  const auto c = intersect(group(q, {RatVec{Rational(1, 2)}}), group(q, {RatVec{Rational(1, 3)}}));
  CHECK(c.gens == std::vector<RatVec>{RatVec{Rational(1)}});
}

TEST_CASE("is_dense_in_R") {
  const RealBasis b5 = RealBasis::squarefree_radicals({5});
  CHECK(is_dense_in_R(group(b5, {row({1, 0}), row({0, 1})})));
  CHECK_FALSE(is_dense_in_R(group(b5, {row({1, 0})})));
  CHECK_FALSE(is_dense_in_R(group(b5, {RatVec{Rational(1, 2), 0}, RatVec{Rational(3, 4), 0}})));
  CHECK(rational_hermite_basis({RatVec{Rational(1, 2)}, RatVec{Rational(3, 4)}}, 1) ==
        std::vector<RatVec>{RatVec{Rational(1, 4)}});
  CHECK_FALSE(is_dense_in_R(group(b5, {})));
}

TEST_CASE("value_group_intersection_dense") {
  CHECK(value_group_intersection_dense(g1(), g2()));
  CHECK_FALSE(value_group_intersection_dense(g1(), g3()));
  CHECK(value_group_intersection_dense(g1(), g1()));
}

TEST_CASE("kernel_of_sum_T") {
  const auto k4 = kernel_of_sum_T(radical_sum(true));
  CHECK(k4.components == 4);
  CHECK(k4.rows.size() == 4);
  // e_i - e_4 (i = 1..3) and sqrt6 v1 + sqrt15 v2 + sqrt10 v3 span the image.
  const RealBasis& b = kB61510;
  auto in_span = [&](const RatVec& v) {
    std::vector<RatVec> rows = k4.rows;
    rows.push_back(v);
    return rational_hermite_basis(rows, 16) == rational_hermite_basis(k4.rows, 16);
  };
  RatVec v1(16, 0), v4(16, 0);
  v1[0] = 1;
  v1[12] = -1;
  v4[1] = 1;       // sqrt6 in component 1
  v4[4 + 2] = 1;   // sqrt15 in component 2
  v4[8 + 3] = 1;   // sqrt10 in component 3
  v4[12 + 1] = v4[12 + 2] = v4[12 + 3] = -1;
  CHECK(in_span(v1));
  CHECK(in_span(v4));
  (void)b;

  const auto k3 = kernel_of_sum_T(radical_sum(false));
  CHECK(k3.rows.size() == 2);
  for (const auto& r : k3.rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (i % 4 != 0) CHECK(r[i] == 0);

  const RealBasis q = RealBasis::asserted({"1"});
  DirectSumInstance zz{{group(q, {row({1})}), group(q, {row({1})})}};
  CHECK(kernel_of_sum_T(zz).rows == std::vector<RatVec>{row({1, -1})});
}

TEST_CASE("dense_in_hyperplane") {
  CHECK(dense_in_hyperplane(kernel_of_sum_T(radical_sum(true)).rows, 4, kB61510).dense);
  const auto k3 = kernel_of_sum_T(radical_sum(false));
  const auto r3 = dense_in_hyperplane(k3.rows, 3, kB61510);
  CHECK_FALSE(r3.dense);
  CHECK(dual_annihilates(k3.rows, 3, kB61510, r3.dual));
  const RealBasis q = RealBasis::asserted({"1"});
  CHECK_FALSE(dense_in_hyperplane({row({1, -1})}, 2, q).dense);
  CHECK_THROWS_WITH(dense_in_hyperplane({row({1, 1})}, 2, q), doctest::Contains("hyperplane"));
}

TEST_CASE("dense_in_hyperplane recognises irrational discrete groups") {
  // Z(sqrt2, -sqrt2) is cyclic, hence discrete, although irrational.
  const RealBasis b = RealBasis::squarefree_radicals({2});
  const std::vector<RatVec> rows = {row({0, 1, 0, -1})};
  const auto r = dense_in_hyperplane(rows, 2, b);
  CHECK_FALSE(r.dense);
  CHECK(dual_annihilates(rows, 2, b, r.dual));
  // Z(1, -1) + Z(sqrt2, -sqrt2) is dense in the line.
  CHECK(dense_in_hyperplane({row({1, 0, -1, 0}), row({0, 1, 0, -1})}, 2, b).dense);
  // Rank two but contained in a lattice of a plane: (1, sqrt2, .), (sqrt2, 2, .)
  const RealBasis b3 = RealBasis::squarefree_radicals({2});
  const std::vector<RatVec> plane = {row({1, 0, 0, 1, -1, -1}), row({0, 1, 2, 0, -2, -1})};
  const auto p = dense_in_hyperplane(plane, 3, b3);
  CHECK_FALSE(p.dense);
  CHECK(dual_annihilates(plane, 3, b3, p.dual));
}

TEST_CASE("dense_in_hyperplane requires certified bases for irrational coordinates") {
  const RealBasis pi = RealBasis::asserted({"1", "pi"});
  CHECK_THROWS_AS(dense_in_hyperplane({row({0, 1, 0, -1})}, 2, pi), InvalidInput);
  CHECK_FALSE(dense_in_hyperplane({row({1, 0, -1, 0})}, 2, pi).dense);
}

TEST_CASE("direct_sum_order_unit_good") {
  CHECK_FALSE(direct_sum_order_unit_good(radical_sum(false)).order_unit_good);
  CHECK(direct_sum_order_unit_good(radical_sum(true)).order_unit_good);
  CHECK(direct_sum_order_unit_good(DirectSumInstance{{g1(), g2()}}).order_unit_good);
  CHECK_FALSE(direct_sum_order_unit_good(DirectSumInstance{{g1(), g3()}}).order_unit_good);
  CHECK(direct_sum_order_unit_good(DirectSumInstance{{g1(), g2(), g3()}}).order_unit_good);
  CHECK_THROWS_AS(direct_sum_order_unit_good(DirectSumInstance{{g1()}}), InvalidInput);
}

TEST_CASE("proper sub-sums of the n-prime family are not order unit good") {
  const std::vector<Int> primes = {2, 3, 5, 7};
  const RealBasis b = RealBasis::squarefree_radicals(primes);
  std::vector<EmbeddedGroup> gs;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    RatVec r(5, 0);
    r[i + 1] = 1;
    gs.push_back(group(b, {row({1, 0, 0, 0, 0}), r}));
  }
  gs.push_back(group(b, {row({1, 0, 0, 0, 0}), row({0, 1, 1, 1, 1})}));
  const std::size_t n = gs.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    DirectSumInstance d;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) d.summands.push_back(gs[i]);
    const bool full = mask == (1u << n) - 1;
    const auto v = direct_sum_order_unit_good(d);
    CHECK(v.order_unit_good == full);
    if (!v.order_unit_good) CHECK(dual_annihilates(v.kernel.rows, v.kernel.components, b, v.density.dual));
  }
}

TEST_CASE("two-summand density matches the intersection criterion") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-3, 3);
  const RealBasis b = RealBasis::squarefree_radicals({2, 3});
  for (int t = 0; t < 60; ++t) {
    auto random_group = [&] {
      std::vector<RatVec> gens;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) gens.push_back(row({c(rng), c(rng), c(rng)}));
      return group(b, gens);
    };
    const auto a = random_group(), bb = random_group();
    if (a.rank() == 0 || bb.rank() == 0) continue;
    CHECK(direct_sum_order_unit_good(DirectSumInstance{{a, bb}}).order_unit_good ==
          value_group_intersection_dense(a, bb));
  }
}

TEST_CASE("multiquadratic field arithmetic") {
  const auto f = MultiquadraticField::for_radicals({6, 10});
  CHECK(f.primes() == std::vector<Int>{2, 3, 5});
  const auto r6 = f.sqrt_of(6), r10 = f.sqrt_of(10);
  CHECK(f.to_string(f.mul(r6, r10)) == "2*sqrt(15)");
  const auto x = f.add(f.add(f.rational(1), r6), r10);
  CHECK(f.mul(x, f.inverse(x)) == f.rational(1));
  CHECK(f.to_string(f.sub(f.rational(Rational(1, 2)), r6)) == "1/2 - sqrt(6)");
}
