#include "dimtrace/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dimtrace/error.hpp"
#include "dimtrace/linalg.hpp"
#include "dimtrace/lp.hpp"

namespace dimtrace::hull {

namespace {

RatVec minus(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * double(n - i) / double(i + 1);
  return out;
}

}  // namespace

std::size_t affine_rank(const std::vector<RatVec>& points) {
  if (points.empty()) return 0;
  linalg::RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(minus(points[i], points[0]));
  return linalg::rank(std::move(diffs), points[0].size());
}

std::vector<std::size_t> extreme_points(const std::vector<RatVec>& points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!lp::in_convex_hull(points[i], others)) out.push_back(i);
  }
  return out;
}

ConvexHull convex_hull(std::vector<RatVec> points, std::size_t max_vertex_subsets) {
  if (points.empty()) throw InvalidInput("convex hull of an empty point set");
  const std::size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim) throw InvalidInput("points of mixed dimension");

  ConvexHull h;
  h.points = std::move(points);
  h.vertices = extreme_points(h.points);

  // Direction space of the affine hull and its orthogonal complement.
  const RatVec& origin = h.points[h.vertices[0]];
  linalg::RatMatrix diffs;
  for (auto v : h.vertices) diffs.push_back(minus(h.points[v], origin));
  linalg::RatMatrix direction = diffs;
  const auto pivots = linalg::rref(direction, dim);
  direction.resize(pivots.size());
  h.affine_dimension = pivots.size();
  for (auto& a : linalg::nullspace(direction, dim)) {
    RatVec eq = linalg::primitive_direction(a);
    const Rational b = linalg::dot(eq, origin);
    eq.push_back(b);
    h.affine_equations.push_back(std::move(eq));
  }

  const std::size_t d = h.affine_dimension;
  const std::size_t nv = h.vertices.size();
  auto members_of = [&](const RatVec& normal, const Rational& offset) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < h.points.size(); ++i)
      if (linalg::dot(normal, h.points[i]) == offset) members.push_back(i);
    return members;
  };

  if (d > 0) {
    if (binomial(nv, d) > double(max_vertex_subsets))
      throw SizeEnvelopeExceeded(std::to_string(nv) + " vertices in dimension " + std::to_string(d));
    std::set<std::vector<std::size_t>> seen;
    for_each_subset(nv, d, [&](const std::vector<std::size_t>& subset) {
      // Normal n = sum c_j dir_j orthogonal to the subset's own directions.
      const RatVec& base = h.points[h.vertices[subset[0]]];
      linalg::RatMatrix system;
      for (std::size_t i = 1; i < subset.size(); ++i) {
        const RatVec delta = minus(h.points[h.vertices[subset[i]]], base);
        RatVec row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = linalg::dot(direction[j], delta);
        system.push_back(std::move(row));
      }
      const auto null = linalg::nullspace(system, d);
      if (null.size() != 1) return;  // subset not affinely independent
      RatVec normal(dim, 0);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t c = 0; c < dim; ++c) normal[c] += null[0][j] * direction[j][c];
      normal = linalg::primitive_direction(normal);
      Rational offset = linalg::dot(normal, base);
      bool any_above = false, any_below = false;
      for (auto v : h.vertices) {
        const Rational s = linalg::dot(normal, h.points[v]);
        if (s > offset) any_above = true;
        if (s < offset) any_below = true;
      }
      if (any_above && any_below) return;
      if (any_above) {
        for (auto& x : normal) x = -x;
        offset = -offset;
      }
      auto members = members_of(normal, offset);
      if (!seen.insert(members).second) return;
      h.facets.push_back({std::move(normal), std::move(offset), std::move(members), d - 1});
    });
  }

  // Proper faces are the nonempty intersections of facets; the normal of an
  // intersection is the sum of the facet normals containing it.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> faces;  // members -> facet ids
  for (std::size_t f = 0; f < h.facets.size(); ++f) faces[h.facets[f].members].push_back(f);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<std::size_t>> current;
    for (auto& [members, ids] : faces) current.push_back(members);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<std::size_t> both;
        std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                              std::back_inserter(both));
        if (both.empty() || faces.count(both)) continue;
        faces[both];
        grew = true;
      }
  }
  for (auto& [members, ids] : faces) {
    RatVec normal(dim, 0);
    Rational offset = 0;
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
      const auto& fm = h.facets[f].members;
      if (!std::includes(fm.begin(), fm.end(), members.begin(), members.end())) continue;
      for (std::size_t c = 0; c < dim; ++c) normal[c] += h.facets[f].normal[c];
      offset += h.facets[f].offset;
    }
    std::vector<RatVec> pts;
    for (auto m : members) pts.push_back(h.points[m]);
    const RatVec prim = linalg::primitive_direction(normal);
    Rational scaled_offset = offset;
    for (std::size_t c = 0; c < dim; ++c)
      if (normal[c] != 0) {
        scaled_offset = offset * prim[c] / normal[c];
        break;
      }
    h.faces.push_back({prim, scaled_offset, members, affine_rank(pts)});
  }
  std::sort(h.faces.begin(), h.faces.end(), [](const Face& a, const Face& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.members < b.members;
  });
  std::vector<std::size_t> all(h.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  h.faces.push_back({RatVec(dim, 0), 0, std::move(all), d});
  return h;
}

bool in_dilation(const ConvexHull& hull, const RatVec& w, const Rational& k) {
  for (const auto& eq : hull.affine_equations) {
    RatVec a(eq.begin(), eq.end() - 1);
    if (linalg::dot(a, w) != k * eq.back()) return false;
  }
  for (const auto& f : hull.facets)
    if (linalg::dot(f.normal, w) > k * f.offset) return false;
  return true;
}

}  // namespace dimtrace::hull
