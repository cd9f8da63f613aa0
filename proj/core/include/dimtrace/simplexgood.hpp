#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimtrace/certificate.hpp"
#include "dimtrace/numeric.hpp"

// Vertex indices of the ambient simplex are 0-based throughout.
namespace dimtrace::simplexgood {

/// J = cvx(points) inside the standard simplex K with n vertices.
struct SimplexSubset {
  std::size_t n = 0;
  std::vector<RatVec> points;

  /// Validates barycentric coordinates and drops duplicate points.
  static SimplexSubset make(std::size_t n, std::vector<RatVec> points);
  void validate() const;
};

/// Indices (into S.points) of the extreme points of J.
std::vector<std::size_t> hull_vertices(const SimplexSubset& s);

/// Support of p: the vertex set of the smallest face of K containing p.
std::vector<std::size_t> smallest_face(const RatVec& p);

struct Block {
  RatVec point;
  std::vector<std::size_t> support;
};

struct GoodDecomposition {
  std::vector<std::size_t> face;  // ambient vertices that are vertices of J
  std::vector<Block> blocks;
};

struct DecompositionFailure {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  std::vector<std::size_t> overlap;
};

struct DecompositionResult {
  std::optional<GoodDecomposition> decomposition;
  std::optional<DecompositionFailure> failure;
  Certificate certificate;
  bool good() const { return decomposition.has_value(); }
};

DecompositionResult decompose_good_subset(const SimplexSubset& s);

struct LiftResult {
  bool liftable = false;
  Rational slack;              // optimal uniform slack t
  std::optional<RatVec> witness;  // a' at the ambient vertices when liftable
};

/// a is indexed like hull_vertices(s); b like the ambient vertices.
/// Searches for affine a' on K with a'|J = a and 0 << a' << b by maximizing
/// a uniform slack.
LiftResult lifting_oracle_lp(const SimplexSubset& s, const RatVec& a, const RatVec& b);

/// Aspan(J) cap K = J.
bool flat_intersection_check(const SimplexSubset& s);

struct AdmissiblePair {
  RatVec a;
  RatVec b;
  std::string origin;
};

/// The fixed test family: for every ordered pair (u, w) of hull vertices and
/// eta in {1/4, 1/8, 1/16}, the affine function that is at most eta at u,
/// within [eta/2, 1 - eta/2] on J and as large as possible at w, with b = 1;
/// followed by `random_pairs` seeded random admissible pairs.
std::vector<AdmissiblePair> adversarial_family(const SimplexSubset& s, std::size_t random_pairs,
                                               std::uint64_t seed);

struct OracleVerdict {
  bool all_liftable = true;
  std::size_t pairs_checked = 0;
  std::optional<AdmissiblePair> failing;
};

OracleVerdict lifting_oracle_family(const SimplexSubset& s, std::size_t random_pairs, std::uint64_t seed);

}  // namespace dimtrace::simplexgood
