#include "dimtrace/simplexgood.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dimtrace/error.hpp"
#include "dimtrace/hull.hpp"
#include "dimtrace/linalg.hpp"
#include "dimtrace/lp.hpp"

namespace dimtrace::simplexgood {

namespace {

std::string index_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

std::string point_text(const RatVec& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + to_string(p[i]);
  return out + ")";
}

std::vector<RatVec> vertex_points(const SimplexSubset& s, const std::vector<std::size_t>& idx) {
  std::vector<RatVec> out;
  for (auto i : idx) out.push_back(s.points[i]);
  return out;
}

// Rows of [v_j; 1] as columns; affine dependencies are its nullspace.
linalg::RatMatrix affine_system(const std::vector<RatVec>& verts, std::size_t n) {
  linalg::RatMatrix m(n + 1, RatVec(verts.size()));
  for (std::size_t j = 0; j < verts.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = verts[j][i];
    m[n][j] = 1;
  }
  return m;
}

Rational evaluate(const RatVec& f, const RatVec& p) { return linalg::dot(f, p); }

Rational random_fraction(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Rational q(dist(rng), den);
  q.canonicalize();
  return q;
}

}  // namespace

SimplexSubset SimplexSubset::make(std::size_t n, std::vector<RatVec> points) {
  SimplexSubset s;
  s.n = n;
  std::set<RatVec> seen;
  for (auto& p : points)
    if (seen.insert(p).second) s.points.push_back(std::move(p));
  s.validate();
  return s;
}

void SimplexSubset::validate() const {
  if (n == 0) throw InvalidInput("ambient simplex needs at least one vertex");
  std::set<RatVec> seen;
  for (const auto& p : points) {
    if (p.size() != n) throw InvalidInput("point " + point_text(p) + " does not have " + std::to_string(n) + " coordinates");
    Rational sum = 0;
    for (const auto& x : p) {
      if (x < 0) throw InvalidInput("point " + point_text(p) + " has a negative coordinate");
      sum += x;
    }
    if (sum != 1) throw InvalidInput("coordinates of " + point_text(p) + " do not sum to 1");
    if (!seen.insert(p).second) throw InvalidInput("duplicate point " + point_text(p));
  }
}

std::vector<std::size_t> hull_vertices(const SimplexSubset& s) {
  s.validate();
  return hull::extreme_points(s.points);
}

std::vector<std::size_t> smallest_face(const RatVec& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw InvalidInput("point lies outside the simplex");
    if (p[i] > 0) out.push_back(i);
  }
  return out;
}

DecompositionResult decompose_good_subset(const SimplexSubset& s) {
  if (s.points.empty()) throw InvalidInput("J is empty");
  const auto verts = hull_vertices(s);
  DecompositionResult out;
  GoodDecomposition dec;
  struct Piece {
    std::vector<std::size_t> support;
    std::string name;
  };
  std::vector<Piece> pieces;
  for (auto v : verts) {
    auto support = smallest_face(s.points[v]);
    if (support.size() == 1) {
      dec.face.push_back(support[0]);
      pieces.push_back({support, "vertex " + std::to_string(support[0])});
    } else {
      dec.blocks.push_back({s.points[v], support});
      pieces.push_back({support, "block " + point_text(s.points[v])});
    }
  }
  std::sort(dec.face.begin(), dec.face.end());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      std::vector<std::size_t> both;
      std::set_intersection(pieces[i].support.begin(), pieces[i].support.end(), pieces[j].support.begin(),
                            pieces[j].support.end(), std::back_inserter(both));
      if (both.empty()) continue;
      out.failure = DecompositionFailure{pieces[i].support, pieces[j].support, both};
      out.certificate.emplace_back("overlap", "supports " + index_set(pieces[i].support) + " and " +
                                                  index_set(pieces[j].support) + " overlap at " + index_set(both));
      out.certificate.emplace_back("pieces", pieces[i].name + "; " + pieces[j].name);
      return out;
    }
  out.certificate.emplace_back("face", index_set(dec.face));
  std::string blocks;
  for (const auto& b : dec.blocks)
    blocks += (blocks.empty() ? "" : "; ") + point_text(b.point) + " on " + index_set(b.support);
  out.certificate.emplace_back("blocks", blocks.empty() ? "none" : blocks);
  out.decomposition = std::move(dec);
  return out;
}

LiftResult lifting_oracle_lp(const SimplexSubset& s, const RatVec& a, const RatVec& b) {
  const auto vidx = hull_vertices(s);
  const auto verts = vertex_points(s, vidx);
  const std::size_t n = s.n;
  if (a.size() != verts.size()) throw InvalidInput("a must give one value per vertex of J");
  if (b.size() != n) throw InvalidInput("b must give one value per ambient vertex");
  for (const auto& x : b)
    if (x <= 0) throw InvalidInput("b must be strictly positive");
  for (const auto& lambda : linalg::nullspace(affine_system(verts, n), verts.size()))
    if (linalg::dot(lambda, a) != 0) throw InvalidInput("a not affine on J");
  for (std::size_t j = 0; j < verts.size(); ++j) {
    if (a[j] <= 0) throw InvalidInput("a is not strictly positive on J");
    if (a[j] >= evaluate(b, verts[j])) throw InvalidInput("a is not strictly below b on J");
  }

  // Variables: a'_0..a'_{n-1}, then the slack t.
  lp::LinearProgram prog(n + 1);
  for (std::size_t i = 0; i <= n; ++i) prog.set_free(i);
  for (std::size_t j = 0; j < verts.size(); ++j) {
    RatVec row(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = verts[j][i];
    prog.add(row, lp::Relation::kEqual, a[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec lower(n + 1, 0), upper(n + 1, 0);
    lower[i] = 1;
    lower[n] = -1;
    prog.add(lower, lp::Relation::kGreaterEqual, 0);
    upper[i] = 1;
    upper[n] = 1;
    prog.add(upper, lp::Relation::kLessEqual, b[i]);
  }
  RatVec objective(n + 1, 0);
  objective[n] = 1;
  prog.maximize(objective);
  const auto sol = prog.solve();
  LiftResult out;
  if (sol.status != lp::Status::kOptimal) {
    out.slack = 0;
    return out;
  }
  out.slack = sol.objective;
  out.liftable = sol.objective > 0;
  if (out.liftable) out.witness = RatVec(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

bool flat_intersection_check(const SimplexSubset& s) {
  s.validate();
  if (s.points.empty()) throw InvalidInput("J is empty");
  const auto h = hull::convex_hull(s.points);
  const auto verts = vertex_points(s, h.vertices);
  const std::size_t n = s.n, m = verts.size();
  for (const auto& facet : h.facets) {
    // Points sum_j mu_j v_j with sum mu_j = 1 inside K; maximize the facet
    // functional and compare with its offset on J.
    lp::LinearProgram prog(m);
    for (std::size_t j = 0; j < m; ++j) prog.set_free(j);
    prog.add(RatVec(m, 1), lp::Relation::kEqual, 1);
    for (std::size_t i = 0; i < n; ++i) {
      RatVec row(m);
      for (std::size_t j = 0; j < m; ++j) row[j] = verts[j][i];
      prog.add(row, lp::Relation::kGreaterEqual, 0);
    }
    RatVec objective(m);
    for (std::size_t j = 0; j < m; ++j) objective[j] = linalg::dot(facet.normal, verts[j]);
    prog.maximize(objective);
    const auto sol = prog.solve();
    if (sol.status == lp::Status::kUnbounded) return false;
    if (sol.status == lp::Status::kOptimal && sol.objective > facet.offset) return false;
  }
  return true;
}

std::vector<AdmissiblePair> adversarial_family(const SimplexSubset& s, std::size_t random_pairs,
                                               std::uint64_t seed) {
  const auto vidx = hull_vertices(s);
  const auto verts = vertex_points(s, vidx);
  const std::size_t n = s.n, m = verts.size();
  std::vector<AdmissiblePair> out;
  const RatVec ones(n, 1);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t w = 0; w < m; ++w) {
      if (u == w) continue;
      for (long den : {4, 8, 16}) {
        const Rational eta(1, den);
        lp::LinearProgram prog(n);
        for (std::size_t i = 0; i < n; ++i) prog.set_free(i);
        for (std::size_t j = 0; j < m; ++j) {
          prog.add(verts[j], lp::Relation::kGreaterEqual, eta / 2);
          prog.add(verts[j], lp::Relation::kLessEqual, j == u ? eta : 1 - eta / 2);
        }
        prog.maximize(verts[w]);
        const auto sol = prog.solve();
        if (sol.status != lp::Status::kOptimal) continue;
        RatVec a;
        for (const auto& v : verts) a.push_back(evaluate(sol.values, v));
        out.push_back({std::move(a), ones,
                       "eta=1/" + std::to_string(den) + " low at " + std::to_string(u) + " high at " +
                           std::to_string(w)});
      }
    }

  std::mt19937_64 rng(seed);
  const bool independent = hull::affine_rank(verts) + 1 == m;
  for (std::size_t r = 0; r < random_pairs; ++r) {
    RatVec b(n);
    for (auto& x : b) x = random_fraction(rng, 2, 16, 8);
    RatVec a(m);
    if (independent) {
      for (std::size_t j = 0; j < m; ++j) a[j] = random_fraction(rng, 1, 15, 16) * evaluate(b, verts[j]);
    } else {
      // Random affine functions on K, kept when admissible on J; the
      // scaled-down fallback is always admissible.
      bool found = false;
      for (int attempt = 0; attempt < 50 && !found; ++attempt) {
        RatVec f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = random_fraction(rng, -8, 24, 16) * b[i];
        found = true;
        for (std::size_t j = 0; j < m && found; ++j) {
          a[j] = evaluate(f, verts[j]);
          found = a[j] > 0 && a[j] < evaluate(b, verts[j]);
        }
      }
      if (!found) {
        const Rational t = random_fraction(rng, 1, 15, 16);
        for (std::size_t j = 0; j < m; ++j) a[j] = t * evaluate(b, verts[j]);
      }
    }
    out.push_back({std::move(a), std::move(b), "random #" + std::to_string(r)});
  }
  return out;
}

OracleVerdict lifting_oracle_family(const SimplexSubset& s, std::size_t random_pairs, std::uint64_t seed) {
  OracleVerdict out;
  for (auto& pair : adversarial_family(s, random_pairs, seed)) {
    ++out.pairs_checked;
    if (!lifting_oracle_lp(s, pair.a, pair.b).liftable) {
      out.all_liftable = false;
      out.failing = std::move(pair);
      return out;
    }
  }
  return out;
}

}  // namespace dimtrace::simplexgood
