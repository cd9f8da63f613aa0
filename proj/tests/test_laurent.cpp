#include "doctest.h"

#include "dimtrace/algebraic.hpp"
#include "dimtrace/error.hpp"
#include "dimtrace/laurent.hpp"

using namespace dimtrace;
using namespace dimtrace::laurent;

namespace {

LaurentPoly poly(std::size_t dim, std::initializer_list<std::pair<Exponent, long>> terms) {
  LaurentPoly p(dim);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

const LaurentPoly kP235 = poly(2, {{{0, 0}, 2}, {{1, 0}, 3}, {{0, 1}, 5}});
const LaurentPoly kP1xyx = poly(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 1}});
// (x-3)^2 + (y-3)^2 - 1
const LaurentPoly kCircle =
    poly(2, {{{2, 0}, 1}, {{1, 0}, -6}, {{0, 2}, 1}, {{0, 1}, -6}, {{0, 0}, 17}});

std::size_t face_with_members(const NewtonPolytope& np, std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t f = 0; f < np.faces().size(); ++f) {
    std::vector<Exponent> m;
    for (auto i : np.faces()[f].members) m.push_back(np.points[i]);
    if (m == pts) return f;
  }
  FAIL("no such face");
  return 0;
}

std::string cert_value(const Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  const auto sq = kP235 * kP235;
  CHECK(sq.coeff({0, 0}) == 4);
  CHECK(sq.coeff({1, 1}) == 30);
  CHECK(kP235.pow(2) == sq);
  CHECK(kP235.pow(0) == LaurentPoly::constant(2, 1));
  CHECK((kP235 - kP235).is_zero());
  CHECK(kP235.evaluate({Rational(7), Rational(1)}) == 28);
  const auto inv = poly(1, {{{-1}, 2}, {{1}, 1}});
  CHECK(inv.evaluate({Rational(2)}) == 3);
  CHECK(kCircle.to_string() == "17 - 6y + y^2 - 6x + x^2");
  CHECK_THROWS_AS(kP235.coeff({1}), std::exception);
}

TEST_CASE("newton_polytope") {
  const auto np = newton_polytope(kP235);
  CHECK(np.vertices() == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  std::size_t edges = 0, verts = 0;
  for (std::size_t f = 0; f + 1 < np.faces().size(); ++f) {
    if (np.faces()[f].dimension == 1) ++edges;
    if (np.faces()[f].dimension == 0) ++verts;
  }
  CHECK(edges == 3);
  CHECK(verts == 3);
  CHECK(np.faces().back().dimension == 2);

  CHECK(newton_polytope(kP1xyx).vertices() == std::vector<Exponent>{{0, 0}, {1, 0}, {1, 1}});
  const auto line = newton_polytope(poly(1, {{{0}, 1}, {{1}, 1}}));
  CHECK(line.vertices() == std::vector<Exponent>{{0}, {1}});

  // An interior point is not a vertex and lies on no proper face.
  const auto square = newton_polytope(
      poly(2, {{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{2, 2}, 1}, {{1, 1}, 1}, {{1, 0}, 1}}));
  CHECK(square.vertices().size() == 4);
  CHECK(square.faces().size() == 4 + 4 + 1);
  CHECK(face_with_members(square, {{0, 0}, {1, 0}, {2, 0}}) < square.faces().size());
}

TEST_CASE("newton polytope envelope") {
  LaurentPoly big(1);
  for (long i = 0; i < 65; ++i) big.add_term({i}, 1);
  CHECK_THROWS_WITH_AS(newton_polytope(big), doctest::Contains("size envelope exceeded"), SizeEnvelopeExceeded);
  CHECK_THROWS_AS(newton_polytope(LaurentPoly::monomial({0, 0, 0, 0, 0}, 1)), SizeEnvelopeExceeded);
}

TEST_CASE("projectively_faithful") {
  CHECK_FALSE(projectively_faithful(poly(1, {{{0}, 1}, {{2}, 1}})));
  CHECK(projectively_faithful(poly(1, {{{0}, 1}, {{1}, 1}})));
  CHECK(projectively_faithful(kP1xyx));
  CHECK_FALSE(projectively_faithful(poly(2, {{{0, 0}, 1}, {{1, 1}, 1}})));
  CHECK(projectively_faithful(poly(1, {{{0}, 1}, {{2}, 1}, {{5}, 1}})));
}

TEST_CASE("approximately_divisible") {
  CHECK(approximately_divisible(kP235));
  CHECK_FALSE(approximately_divisible(poly(1, {{{0}, 1}, {{1}, 1}})));
  CHECK(approximately_divisible(poly(1, {{{0}, 2}, {{1}, 7}, {{2}, 2}})));
  CHECK(approximately_divisible(kP235 * kP235));
  CHECK_THROWS_AS(approximately_divisible(poly(1, {{{0}, 2}, {{1}, -1}})), InvalidInput);
}

TEST_CASE("facial_polynomial") {
  const auto np = newton_polytope(kP235);
  const auto x_axis = face_with_members(np, {{0, 0}, {1, 0}});
  const auto hyp = face_with_members(np, {{1, 0}, {0, 1}});
  CHECK(facial_polynomial(kCircle, np, np.faces()[x_axis], 2) ==
        poly(2, {{{2, 0}, 1}, {{1, 0}, -6}, {{0, 0}, 17}}));
  CHECK(facial_polynomial(kCircle, np, np.faces()[hyp], 2) == poly(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK(facial_polynomial(kCircle, np, np.faces().back(), 2) == kCircle);
  CHECK_THROWS_WITH(facial_polynomial(kCircle, np, np.faces()[x_axis], 1), doctest::Contains("Log-hull^k"));
}

TEST_CASE("facial polynomials are multiplicative") {
  const auto np = newton_polytope(kP235);
  const auto g = kP235 * poly(2, {{{1, 0}, 2}, {{0, 0}, -1}});
  const auto h = kCircle;
  for (const auto& face : np.faces())
    CHECK(facial_polynomial(g * h, np, face, 4) ==
          facial_polynomial(g, np, face, 2) * facial_polynomial(h, np, face, 2));
}

TEST_CASE("support powers") {
  const auto s = support_power(kP235, 3);
  CHECK(s.size() == 10);
  const auto expanded = kP235.pow(3).support();
  CHECK(std::vector<Exponent>(s.begin(), s.end()) == expanded);
}

TEST_CASE("fitting_check: circle against 2 + 3x + 5y") {
  const auto report = fitting_check(kP235, {kCircle}, 64);
  REQUIRE(report.fitted);
  CHECK(report.witness->candidate == 0);
  CHECK(report.witness->boost == 21);
  CHECK(report.witness->power == 23);
  CHECK(verify_fitting_witness(kP235, kCircle, 21, 23));
  CHECK_FALSE(verify_fitting_witness(kP235, kCircle, 20, 22));
}

TEST_CASE("fitting_check: circle against 1 + xy + x") {
  const auto report = fitting_check(kP1xyx, {kCircle}, 64);
  CHECK_FALSE(report.fitted);
  REQUIRE(report.candidates.size() == 1);
  const auto& s = report.candidates[0];
  CHECK(s.boosts_tried == 65);
  CHECK(s.clause_a_failures == 65);
  REQUIRE(s.last_obstruction);
  CHECK(s.last_obstruction->kind == SupportObstruction::Kind::kCone);
  CHECK(s.last_obstruction->exponent == Exponent{0, 2});
}

TEST_CASE("fitting_check: trivial and error cases") {
  const auto p = poly(1, {{{0}, 2}, {{1}, 3}});
  const auto report = fitting_check(p, {poly(1, {{{1}, 1}})}, 0);
  REQUIRE(report.fitted);
  CHECK(report.witness->boost == 0);
  CHECK(report.witness->power == 1);
  CHECK_THROWS_WITH(fitting_check(p, {}, 3), doctest::Contains("empty candidate list"));
  // A negative coefficient on a vertex face that no boost repairs.
  const auto bad = fitting_check(p, {poly(1, {{{0}, -1}, {{1}, 1}})}, 5);
  CHECK_FALSE(bad.fitted);
  CHECK(bad.candidates[0].clause_b_failures == 6);
  REQUIRE_FALSE(bad.per_face_failures.empty());
  CHECK(bad.per_face_failures[0].coefficient < 0);
}

TEST_CASE("condition_one_rational") {
  CHECK(condition_one_rational(kP235, {Rational(7), Rational(1)}).holds);
  CHECK(condition_one_rational(kP235, {Rational(3), Rational(11)}).holds);
  CHECK(condition_one_rational(kP235, {Rational(4), Rational(4)}).holds);
  const auto bad = condition_one_rational(kP235, {Rational(14), Rational(2)});
  CHECK_FALSE(bad.holds);
  CHECK(bad.failing_prime == 7);
  const auto one_plus_x = poly(1, {{{0}, 1}, {{1}, 1}});
  CHECK_FALSE(condition_one_rational(one_plus_x, {Rational(2)}).holds);
  CHECK(condition_one_rational(one_plus_x, {Rational(1)}).holds);
  CHECK_THROWS_AS(condition_one_rational(one_plus_x, {Rational(0)}), InvalidInput);
  CHECK_THROWS_AS(condition_one_rational(poly(1, {{{0}, 1}, {{2}, 1}}), {Rational(1)}), InvalidInput);
}

TEST_CASE("classify_rational_trace") {
  CHECK(classify_rational_trace(kP235, {Rational(3), Rational(11)}).overall == Overall::kGood);
  const auto v = classify_rational_trace(kP235, {Rational(14), Rational(2)});
  CHECK_FALSE(v.condition1);
  CHECK(v.overall == Overall::kOrderUnitGoodOnly);
  CHECK(cert_value(v.certificate, "failing_prime") == "7");
  const auto d = classify_rational_trace(poly(1, {{{0}, 1}, {{1}, 1}}), {Rational(1)});
  CHECK(d.overall == Overall::kNotApplicableDiscrete);
  CHECK(d.condition1);
}

TEST_CASE("rational and one-variable classifiers agree in dimension one") {
  const std::vector<std::vector<long>> polys = {{1, 1}, {2, 3}, {2, 7, 2}, {6, 1, 4}, {3, 0, 5, 2}};
  const std::vector<Rational> points = {1, 2, Rational(2, 3), Rational(3, 2), 6, Rational(1, 12), 5};
  for (const auto& c : polys) {
    LaurentPoly p(1);
    IntVec iv;
    for (std::size_t i = 0; i < c.size(); ++i) {
      p.add_term({static_cast<long>(i)}, c[i]);
      iv.emplace_back(c[i]);
    }
    for (const auto& q : points) {
      const auto a = classify_rational_trace(p, {q});
      const auto b = algebraic::classify_trace_1d(algebraic::IntPolynomial(iv),
                                                  algebraic::AlgebraicNumber1D::from_rational(q));
      CHECK(a.overall == b.overall);
      CHECK(a.condition1 == b.condition1);
      CHECK(a.approx_divisible == b.approx_divisible);
    }
  }
}

TEST_CASE("vertex_trace_value") {
  CHECK(vertex_trace_value(kP235, kP235, 1, {1, 0}) == 1);
  CHECK(vertex_trace_value(kP1xyx * kP1xyx, kP1xyx, 2, {0, 0}) == 1);
  CHECK(vertex_trace_value(poly(2, {{{1, 1}, 10}}), kP235, 2, {0, 0}) == 0);
  CHECK(vertex_trace_value(kP235 * kP235, kP235, 2, {0, 1}) == 1);
  CHECK_THROWS_WITH(vertex_trace_value(kP235, kP235 * kP235, 2, {1, 1}), doctest::Contains("not a vertex"));
}
