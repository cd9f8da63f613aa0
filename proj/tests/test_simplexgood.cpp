#include "doctest.h"

#include "dimtrace/error.hpp"
#include "dimtrace/hull.hpp"
#include "dimtrace/lp.hpp"
#include "dimtrace/simplexgood.hpp"

using namespace dimtrace;
using namespace dimtrace::simplexgood;

namespace {

RatVec pt(std::initializer_list<Rational> xs) { return RatVec(xs); }

const Rational h(1, 2);

using Idx = std::vector<std::size_t>;

}  // namespace

TEST_CASE("subset validation") {
  CHECK_THROWS_AS(SimplexSubset::make(3, {pt({1, 1, 0})}), InvalidInput);
  CHECK_THROWS_AS(SimplexSubset::make(3, {pt({2, -1, 0})}), InvalidInput);
  CHECK_THROWS_AS(SimplexSubset::make(2, {pt({1, 0, 0})}), InvalidInput);
  CHECK(SimplexSubset::make(3, {pt({1, 0, 0}), pt({1, 0, 0})}).points.size() == 1);
}

TEST_CASE("hull vertices and smallest face") {
  const auto s = SimplexSubset::make(3, {pt({1, 0, 0}), pt({0, 1, 0}), pt({h, h, 0})});
  CHECK(hull_vertices(s) == Idx{0, 1});
  CHECK(hull_vertices(SimplexSubset::make(3, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})})) == Idx{0, 1, 2});
  CHECK(hull_vertices(SimplexSubset::make(3, {pt({h, h, 0})})) == Idx{0});
  CHECK(smallest_face(pt({h, h, 0})) == Idx{0, 1});
  CHECK(smallest_face(pt({0, 0, 1})) == Idx{2});
  const Rational t(1, 3);
  CHECK(smallest_face(pt({t, t, t})) == Idx{0, 1, 2});
}

TEST_CASE("decompositions") {
  const auto face = decompose_good_subset(SimplexSubset::make(3, {pt({1, 0, 0}), pt({0, 1, 0})}));
  REQUIRE(face.good());
  CHECK(face.decomposition->face == Idx{0, 1});
  CHECK(face.decomposition->blocks.empty());

  const auto block = decompose_good_subset(SimplexSubset::make(3, {pt({h, h, 0}), pt({0, 0, 1})}));
  REQUIRE(block.good());
  CHECK(block.decomposition->face == Idx{2});
  REQUIRE(block.decomposition->blocks.size() == 1);
  CHECK(block.decomposition->blocks[0].point == pt({h, h, 0}));
  CHECK(block.decomposition->blocks[0].support == Idx{0, 1});

  const auto bad = decompose_good_subset(SimplexSubset::make(3, {pt({h, h, 0}), pt({h, 0, h})}));
  REQUIRE_FALSE(bad.good());
  CHECK(bad.failure->first == Idx{0, 1});
  CHECK(bad.failure->second == Idx{0, 2});
  CHECK(bad.failure->overlap == Idx{0});

  CHECK_THROWS_AS(decompose_good_subset(SimplexSubset{3, {}}), InvalidInput);
}

TEST_CASE("lifting oracle") {
  const auto face = SimplexSubset::make(3, {pt({1, 0, 0}), pt({0, 1, 0})});
  const auto r = lifting_oracle_lp(face, pt({Rational(1, 3), Rational(1, 5)}), pt({1, 1, 1}));
  CHECK(r.liftable);
  CHECK(r.slack > 0);

  const auto bad = SimplexSubset::make(3, {pt({h, h, 0}), pt({h, 0, h})});
  const Rational eta(1, 8);
  CHECK_FALSE(lifting_oracle_lp(bad, pt({eta, 1 - eta}), pt({1, 1, 1})).liftable);

  const auto any = SimplexSubset::make(3, {pt({h, h, 0}), pt({0, h, h}), pt({Rational(1, 4), Rational(1, 4), h})});
  const auto c = lifting_oracle_lp(any, RatVec(hull_vertices(any).size(), h), pt({1, 1, 1}));
  REQUIRE(c.liftable);
  CHECK(*c.witness == pt({h, h, h}));

  // The midpoint forces a to be affine.
  const auto line = SimplexSubset::make(2, {pt({1, 0}), pt({0, 1})});
  CHECK_THROWS_AS(lifting_oracle_lp(line, pt({h}), pt({1, 1})), InvalidInput);
}

TEST_CASE("lifting oracle rejects non-affine data") {
  // Four points of a square in the 2-face: the fourth value is determined.
  const Rational q(1, 4);
  const auto sq = SimplexSubset::make(4, {pt({h, 0, h, 0}), pt({0, h, h, 0}), pt({h, 0, 0, h}), pt({0, h, 0, h})});
  REQUIRE(hull_vertices(sq).size() == 4);
  CHECK_THROWS_WITH(lifting_oracle_lp(sq, pt({q, q, q, h}), pt({1, 1, 1, 1})), doctest::Contains("not affine"));
  CHECK_NOTHROW(lifting_oracle_lp(sq, pt({q, q, q, q}), pt({1, 1, 1, 1})));
}

TEST_CASE("flat intersection") {
  CHECK(flat_intersection_check(SimplexSubset::make(3, {pt({1, 0, 0}), pt({0, 1, 0})})));
  const Rational t(1, 3);
  CHECK(flat_intersection_check(SimplexSubset::make(3, {pt({t, t, t})})));
  CHECK(flat_intersection_check(SimplexSubset::make(3, {pt({h, h, 0}), pt({0, h, h})})));
  // A shorter piece of the same line misses the boundary points of L cap K.
  CHECK_FALSE(flat_intersection_check(
      SimplexSubset::make(3, {pt({h, h, 0}), pt({Rational(1, 4), h, Rational(1, 4)})})));
  // Not good, yet property (ii) holds: the converse fails.
  const auto bad = SimplexSubset::make(3, {pt({h, h, 0}), pt({h, 0, h})});
  CHECK(flat_intersection_check(bad));
  CHECK_FALSE(decompose_good_subset(bad).good());
}

TEST_CASE("oracle family") {
  const auto good = SimplexSubset::make(3, {pt({h, h, 0}), pt({0, 0, 1})});
  const auto v = lifting_oracle_family(good, 20, 7);
  CHECK(v.all_liftable);
  CHECK(v.pairs_checked > 20);
  const auto bad = SimplexSubset::make(3, {pt({h, h, 0}), pt({h, 0, h})});
  const auto w = lifting_oracle_family(bad, 20, 7);
  CHECK_FALSE(w.all_liftable);
  REQUIRE(w.failing);
  CHECK(adversarial_family(good, 5, 1).size() == adversarial_family(good, 5, 2).size());
}

TEST_CASE("decomposition invariants on the quarter grid of the triangle") {
  std::vector<RatVec> grid;
  for (long i = 0; i <= 4; ++i)
    for (long j = 0; i + j <= 4; ++j) grid.push_back(pt({Rational(i, 4), Rational(j, 4), Rational(4 - i - j, 4)}));
  for (auto& p : grid)
    for (auto& q : p) q.canonicalize();
  std::size_t good = 0, flat_but_bad = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j)
      for (std::size_t k = j; k < grid.size(); ++k) {
        const auto s = SimplexSubset::make(3, {grid[i], grid[j], grid[k]});
        const auto r = decompose_good_subset(s);
        const bool flat = flat_intersection_check(s);
        if (!r.good()) {
          flat_but_bad += flat;
          continue;
        }
        ++good;
        CHECK(flat);
        std::vector<RatVec> pieces;
        for (auto v : r.decomposition->face) {
          RatVec e(3, 0);
          e[v] = 1;
          pieces.push_back(e);
        }
        for (const auto& b : r.decomposition->blocks) pieces.push_back(b.point);
        CHECK(hull::affine_rank(pieces) + 1 == pieces.size());
        for (const auto& p : pieces) CHECK(lp::in_convex_hull(p, s.points));
        for (const auto& p : s.points) CHECK(lp::in_convex_hull(p, pieces));
      }
  CHECK(good > 0);
  CHECK(flat_but_bad > 0);
}
