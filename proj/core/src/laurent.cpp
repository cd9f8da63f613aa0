#include "dimtrace/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dimtrace/error.hpp"
#include "dimtrace/intmat.hpp"
#include "dimtrace/linalg.hpp"

namespace dimtrace::laurent {

namespace {

// Powers beyond the least dilation that are tried before giving up on
// lattice holes in Log P^k.
constexpr unsigned long kExtraPowers = 4;

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Rational pairing(const RatVec& normal, const Exponent& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s += normal[i] * w[i];
  return s;
}

Int ceil_nonneg(const Rational& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int floor_of(const Rational& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

void require_nonnegative(const LaurentPoly& p) {
  if (!p.nonnegative()) throw InvalidInput("polynomial has a negative coefficient");
}

// Incrementally extended supports Log P^0, Log P^1, ...
class SupportPowers {
 public:
  explicit SupportPowers(const LaurentPoly& p) : base_(p.support()) {
    powers_.push_back({Exponent(p.dim(), 0)});
  }
  const std::set<Exponent>& get(unsigned long k) {
    while (powers_.size() <= k) {
      std::set<Exponent> next;
      for (const auto& a : powers_.back())
        for (const auto& b : base_) next.insert(add(a, b));
      if (next.size() > kMaxExpansionTerms)
        throw SizeEnvelopeExceeded("Log P^" + std::to_string(powers_.size()) + " has more than " +
                                   std::to_string(kMaxExpansionTerms) + " points");
      powers_.push_back(std::move(next));
    }
    return powers_[k];
  }

 private:
  std::vector<Exponent> base_;
  std::vector<std::set<Exponent>> powers_;
};

PowerSearch least_power_impl(const NewtonPolytope& polytope, SupportPowers& powers, const LaurentPoly& h) {
  PowerSearch out;
  if (h.is_zero()) {
    out.power = 0;
    return out;
  }
  const std::size_t dim = h.dim();
  Rational kmin = 0;
  std::optional<Rational> kmax;
  auto obstruct = [&](SupportObstruction::Kind kind, const Exponent& w, RatVec normal, Rational offset) {
    out.obstruction = SupportObstruction{kind, w, std::move(normal), std::move(offset)};
    return out;
  };
  for (const auto& eq : polytope.hull.affine_equations) {
    RatVec a(eq.begin(), eq.begin() + static_cast<std::ptrdiff_t>(dim));
    const Rational& b = eq.back();
    for (const auto& [w, c] : h.terms()) {
      const Rational s = pairing(a, w);
      if (b == 0) {
        if (s != 0) return obstruct(SupportObstruction::Kind::kAffineHull, w, a, b);
        continue;
      }
      const Rational k = s / b;
      if (k < 0 || k.get_den() != 1 || (kmax && *kmax != k) || k < kmin)
        return obstruct(SupportObstruction::Kind::kAffineHull, w, a, b);
      kmin = k;
      kmax = k;
    }
  }
  for (const auto& f : polytope.hull.facets) {
    if (f.offset == 0) {
      // Report the exponent furthest outside the cone.
      const Exponent* worst = nullptr;
      Rational worst_s = 0;
      for (const auto& [w, c] : h.terms()) {
        const Rational s = pairing(f.normal, w);
        if (s > worst_s) {
          worst_s = s;
          worst = &w;
        }
      }
      if (worst) return obstruct(SupportObstruction::Kind::kCone, *worst, f.normal, f.offset);
      continue;
    }
    for (const auto& [w, c] : h.terms()) {
      const Rational s = pairing(f.normal, w);
      if (f.offset > 0) {
        kmin = std::max(kmin, Rational(s / f.offset));
      } else {
        const Rational bound = s / f.offset;
        kmax = kmax ? std::min(*kmax, bound) : bound;
      }
    }
  }
  const Int k0 = ceil_nonneg(kmin);
  Int k_last = k0 + kExtraPowers;
  if (kmax) k_last = std::min(k_last, floor_of(*kmax));
  if (k0 > k_last)
    return obstruct(SupportObstruction::Kind::kDilationWindow, h.terms().begin()->first, {}, 0);
  for (unsigned long k = k0.get_ui(); k <= k_last.get_ui(); ++k) {
    const auto& logk = powers.get(k);
    bool inside = true;
    for (const auto& [w, c] : h.terms())
      if (!logk.count(w)) {
        inside = false;
        break;
      }
    if (inside) {
      out.power = k;
      return out;
    }
  }
  const auto& log0 = powers.get(k0.get_ui());
  for (const auto& [w, c] : h.terms())
    if (!log0.count(w)) return obstruct(SupportObstruction::Kind::kLatticeHoles, w, {}, 0);
  return obstruct(SupportObstruction::Kind::kLatticeHoles, h.terms().begin()->first, {}, 0);
}

// Clause (b) on every proper face; empty result means the clause holds.
std::vector<FaceFailure> face_failures(const LaurentPoly& h, const NewtonPolytope& polytope, unsigned long k,
                                       std::vector<std::string>* warnings) {
  std::vector<FaceFailure> out;
  const auto& faces = polytope.faces();
  for (std::size_t f = 0; f + 1 < faces.size(); ++f) {
    const auto& face = faces[f];
    const Rational level = face.offset * k;
    bool any = false;
    bool reported = false;
    for (const auto& [w, c] : h.terms()) {
      if (pairing(face.normal, w) != level) continue;
      any = true;
      if (c < 0 && !reported) {
        out.push_back({0, 0, f, w, c});
        reported = true;
      }
    }
    if (!any && face.dimension == 0 && warnings)
      warnings->push_back("facial polynomial at vertex face " + std::to_string(f) +
                          " is identically zero; strict positivity fails there");
  }
  return out;
}

}  // namespace

// ---- LaurentPoly -----------------------------------------------------------

LaurentPoly::LaurentPoly(std::size_t dim, const std::map<Exponent, Int>& terms) : dim_(dim) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(std::size_t dim, const Int& c) {
  LaurentPoly p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Int& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::check(const Exponent& e) const {
  if (e.size() != dim_)
    throw InvalidInput("exponent " + laurent::to_string(e) + " does not have dimension " + std::to_string(dim_));
}

Int LaurentPoly::coeff(const Exponent& e) const {
  check(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<Exponent> LaurentPoly::support() const {
  std::vector<Exponent> out;
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void LaurentPoly::add_term(const Exponent& e, const Int& c) {
  check(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly result = constant(dim_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational LaurentPoly::evaluate(const RatVec& point) const {
  if (point.size() != dim_) throw InvalidInput("evaluation point has the wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < dim_; ++i) term *= rpow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("adding polynomials of different dimension");
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("subtracting polynomials of different dimension");
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("multiplying polynomials of different dimension");
  std::map<Exponent, Int> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[add(ea, eb)] += ca * cb;
  return LaurentPoly(a.dim_, acc);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant_term = std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const Int mag = abs(c);
    if (mag != 1 || constant_term) os << mag.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (dim_ <= 4)
        os << kNames[i];
      else
        os << "x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

RatVec to_rational(const Exponent& e) {
  RatVec out;
  for (long v : e) out.emplace_back(v);
  return out;
}

std::string to_string(const Exponent& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + std::to_string(e[i]);
  return s + "]";
}

const char* to_string(SupportObstruction::Kind k) {
  switch (k) {
    case SupportObstruction::Kind::kCone:
      return "cone";
    case SupportObstruction::Kind::kAffineHull:
      return "affine-hull";
    case SupportObstruction::Kind::kDilationWindow:
      return "dilation-window";
    case SupportObstruction::Kind::kLatticeHoles:
      return "lattice-holes";
  }
  return "?";
}

// ---- polytope ----------------------------------------------------------------

std::vector<Exponent> NewtonPolytope::vertices() const {
  std::vector<Exponent> out;
  for (auto v : hull.vertices) out.push_back(points[v]);
  return out;
}

bool NewtonPolytope::is_vertex(const Exponent& e) const {
  for (auto v : hull.vertices)
    if (points[v] == e) return true;
  return false;
}

NewtonPolytope newton_polytope(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidInput("Newton polytope of the zero polynomial");
  if (p.dim() > kMaxDimension)
    throw SizeEnvelopeExceeded("dimension " + std::to_string(p.dim()) + " exceeds " + std::to_string(kMaxDimension));
  if (p.size() > kMaxSupport)
    throw SizeEnvelopeExceeded("support of " + std::to_string(p.size()) + " points exceeds " +
                               std::to_string(kMaxSupport));
  NewtonPolytope out;
  out.points = p.support();
  std::vector<RatVec> pts;
  for (const auto& e : out.points) pts.push_back(to_rational(e));
  out.hull = hull::convex_hull(std::move(pts));
  return out;
}

bool projectively_faithful(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidInput("projective faithfulness of the zero polynomial");
  const auto pts = p.support();
  intmat::IntMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec row;
    for (std::size_t j = 0; j < p.dim(); ++j) row.emplace_back(pts[i][j] - pts[0][j]);
    diffs.push_back(std::move(row));
  }
  const auto inv = intmat::smith_invariants(diffs, p.dim());
  if (inv.size() != p.dim()) return false;
  return std::all_of(inv.begin(), inv.end(), [](const Int& d) { return d == 1; });
}

bool approximately_divisible(const LaurentPoly& p) {
  require_nonnegative(p);
  const auto poly = newton_polytope(p);
  for (const auto& v : poly.vertices())
    if (p.coeff(v) <= 1) return false;
  return true;
}

std::vector<Exponent> support_power(const LaurentPoly& p, unsigned long k) {
  SupportPowers powers(p);
  const auto& s = powers.get(k);
  return {s.begin(), s.end()};
}

LaurentPoly facial_polynomial(const LaurentPoly& h, const NewtonPolytope& polytope, const hull::Face& face,
                              unsigned long k) {
  for (const auto& [w, c] : h.terms())
    if (!hull::in_dilation(polytope.hull, to_rational(w), Rational(k)))
      throw InvalidInput("Log h ⊄ Log-hull^k: exponent " + to_string(w) + " is outside the dilation by " +
                         std::to_string(k));
  LaurentPoly out(h.dim());
  const Rational level = face.offset * k;
  for (const auto& [w, c] : h.terms())
    if (pairing(face.normal, w) == level) out.add_term(w, c);
  return out;
}

// ---- fitting -----------------------------------------------------------------

PowerSearch least_power(const NewtonPolytope& polytope, const LaurentPoly& p, const LaurentPoly& h) {
  SupportPowers powers(p);
  return least_power_impl(polytope, powers, h);
}

FittingReport fitting_check(const LaurentPoly& p, const std::vector<LaurentPoly>& candidates,
                            unsigned long n_max) {
  if (candidates.empty()) throw InvalidInput("empty candidate list");
  require_nonnegative(p);
  if (!projectively_faithful(p)) throw InvalidInput("P is not projectively faithful");
  for (const auto& h : candidates)
    if (h.dim() != p.dim()) throw InvalidInput("candidate dimension differs from P");
  const NewtonPolytope polytope = newton_polytope(p);
  SupportPowers powers(p);

  FittingReport report;
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    CandidateSummary summary;
    summary.candidate = ci;
    std::vector<FaceFailure> last_failures;
    LaurentPoly boosted = candidates[ci];
    for (unsigned long n = 0; n <= n_max; ++n) {
      if (n > 0) boosted = boosted * p;
      if (boosted.size() > kMaxExpansionTerms)
        throw SizeEnvelopeExceeded("boosted candidate has more than " + std::to_string(kMaxExpansionTerms) +
                                   " terms");
      ++summary.boosts_tried;
      const PowerSearch ps = least_power_impl(polytope, powers, boosted);
      if (!ps.power) {
        ++summary.clause_a_failures;
        summary.last_obstruction = ps.obstruction;
        continue;
      }
      std::vector<std::string> warnings;
      auto failures = face_failures(boosted, polytope, *ps.power, &warnings);
      if (failures.empty()) {
        report.fitted = true;
        report.witness = FittingWitness{ci, n, *ps.power};
        report.warnings = std::move(warnings);
        report.candidates.push_back(summary);
        return report;
      }
      ++summary.clause_b_failures;
      for (auto& f : failures) {
        f.candidate = ci;
        f.boost = n;
      }
      last_failures = std::move(failures);
    }
    report.per_face_failures.insert(report.per_face_failures.end(), last_failures.begin(), last_failures.end());
    report.candidates.push_back(summary);
  }
  return report;
}

bool verify_fitting_witness(const LaurentPoly& p, const LaurentPoly& h, unsigned long boost,
                            unsigned long power) {
  const LaurentPoly boosted = p.pow(boost) * h;
  const LaurentPoly pk = p.pow(power);
  for (const auto& [w, c] : boosted.terms())
    if (pk.coeff(w) == 0) return false;
  const NewtonPolytope polytope = newton_polytope(p);
  const auto& faces = polytope.faces();
  for (std::size_t f = 0; f + 1 < faces.size(); ++f) {
    const LaurentPoly facial = facial_polynomial(boosted, polytope, faces[f], power);
    if (!facial.nonnegative()) return false;
  }
  return true;
}

// ---- rational points ---------------------------------------------------------

void validate_rational_query(const LaurentPoly& p, const RatVec& r) {
  if (p.is_zero()) throw InvalidInput("P is zero");
  require_nonnegative(p);
  if (!projectively_faithful(p)) throw InvalidInput("not projectively faithful");
  if (r.size() != p.dim()) throw InvalidInput("point dimension differs from P");
  for (const auto& q : r)
    if (q <= 0) throw InvalidInput("point coordinate " + to_string(q) + " is not strictly positive");
}

ConditionOneRational condition_one_rational(const LaurentPoly& p, const RatVec& r) {
  validate_rational_query(p, r);
  ConditionOneRational out;
  const Rational value = p.evaluate(r);
  auto monomial_at = [&](const Exponent& w) {
    Rational m = 1;
    for (std::size_t i = 0; i < r.size(); ++i) m *= rpow(r[i], w[i]);
    return m;
  };
  // Z[a/b] = Z[1/b] for reduced a/b, so the value ring is Z[1/B].
  out.ring_denominator = 1;
  std::set<Int> primes;
  for (const auto& [w, c] : p.terms()) {
    const Rational g = monomial_at(w) / value;
    out.ring_denominator *= g.get_den();
    for (const auto& q : prime_divisors(g.get_den())) primes.insert(q);
  }
  out.ring_primes.assign(primes.begin(), primes.end());
  out.holds = true;
  for (const auto& [w, c] : p.terms()) {
    const Rational x = value / monomial_at(w);
    Int rest = x.get_den();
    for (const auto& q : out.ring_primes)
      while (rest % q == 0) rest /= q;
    if (rest != 1) {
      out.holds = false;
      out.failing_prime = prime_divisors(rest).front();
      out.failing_exponent = w;
      break;
    }
  }
  std::string list = "[";
  for (std::size_t i = 0; i < out.ring_primes.size(); ++i) list += (i ? ", " : "") + to_string(out.ring_primes[i]);
  list += "]";
  out.certificate.emplace_back("value_ring_primes", list);
  out.certificate.emplace_back("P(r)", to_string(value));
  if (!out.holds) {
    out.certificate.emplace_back("failing_prime", to_string(out.failing_prime));
    out.certificate.emplace_back("failing_exponent", to_string(*out.failing_exponent));
  }
  return out;
}

TraceVerdict classify_rational_trace(const LaurentPoly& p, const RatVec& r) {
  const ConditionOneRational c1 = condition_one_rational(p, r);
  TraceVerdict v;
  v.condition1 = c1.holds;
  v.really_isolated = true;
  v.approx_divisible = approximately_divisible(p);
  v.overall = combine_verdict(v.condition1, v.really_isolated, v.approx_divisible);
  v.certificate = c1.certificate;
  v.certificate.emplace_back("really_isolated", "automatic: rational point");
  std::string coeffs = "[";
  const auto poly = newton_polytope(p);
  bool first = true;
  for (const auto& vert : poly.vertices()) {
    coeffs += (first ? "" : ", ") + to_string(p.coeff(vert));
    first = false;
  }
  v.certificate.emplace_back("vertex_coefficients", coeffs + "]");
  return v;
}

Rational vertex_trace_value(const LaurentPoly& g, const LaurentPoly& p, unsigned long k, const Exponent& v) {
  const auto poly = newton_polytope(p);
  if (!poly.is_vertex(v)) throw InvalidInput(to_string(v) + " is not a vertex of the Newton polytope");
  const auto logk = support_power(p, k);
  const std::set<Exponent> logk_set(logk.begin(), logk.end());
  for (const auto& [w, c] : g.terms())
    if (!logk_set.count(w)) throw InvalidInput("Log g is not contained in Log P^" + std::to_string(k));
  Exponent kv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) kv[i] = v[i] * static_cast<long>(k);
  return Rational(g.coeff(kv)) / Rational(ipow(p.coeff(v), k));
}

}  // namespace dimtrace::laurent
