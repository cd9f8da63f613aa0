#pragma once

#include <cstddef>
#include <vector>

#include "dimtrace/numeric.hpp"

namespace dimtrace::hull {

/// A face exposed by the supporting hyperplane normal . w <= offset.
/// The improper face has a zero normal and offset.
struct Face {
  RatVec normal;                     // primitive integer direction
  Rational offset = 0;
  std::vector<std::size_t> members;  // indices into the point list, ascending
  std::size_t dimension = 0;
};

struct ConvexHull {
  std::vector<RatVec> points;
  std::vector<std::size_t> vertices;      // ascending indices of extreme points
  std::size_t affine_dimension = 0;
  std::vector<RatVec> affine_equations;   // (a, b) packed as a..., b: a . w = b on the hull
  std::vector<Face> facets;               // relative to the affine hull
  std::vector<Face> faces;                // all nonempty faces, improper face last
};

/// Extreme points by exact LP: a point is a vertex iff it is not a convex
/// combination of the remaining (distinct) points.
std::vector<std::size_t> extreme_points(const std::vector<RatVec>& points);

/// Exact hull with the full face lattice. Points must be pairwise distinct.
/// `max_vertex_subsets` bounds the facet search; exceeding it throws
/// SizeEnvelopeExceeded.
ConvexHull convex_hull(std::vector<RatVec> points, std::size_t max_vertex_subsets = 2'000'000);

/// True iff w satisfies every facet inequality and affine equation scaled
/// by k (membership in the dilation k * hull).
bool in_dilation(const ConvexHull& hull, const RatVec& w, const Rational& k);

std::size_t affine_rank(const std::vector<RatVec>& points);

}  // namespace dimtrace::hull
