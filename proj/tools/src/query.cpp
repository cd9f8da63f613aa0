#include "dimtrace/cli/query.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "dimtrace/algebraic.hpp"
#include "dimtrace/error.hpp"
#include "dimtrace/laurent.hpp"
#include "dimtrace/lattice.hpp"
#include "dimtrace/simplexgood.hpp"
#include "dimtrace/simplicial.hpp"

#ifndef DIMTRACE_VERSION
#define DIMTRACE_VERSION "unknown"
#endif

namespace dimtrace::cli {

namespace {

constexpr unsigned long kDefaultNMax = 64;
constexpr unsigned long kDefaultBound = 3;
// Random (a, b) pairs added to the adversarial family by the simplex oracle.
constexpr std::size_t kSimplexOraclePairs = 100;
// Exponent search limit for the rational-point value-ring oracle.
constexpr unsigned long kRingOracleMaxPower = 256;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InvalidInput(path + ": " + what);
}

void require_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(path, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) schema_error(path, "missing field \"" + std::string(k) + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) schema_error(path, "unknown field \"" + k + "\"");
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Int(j.dump(), 10));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer or a \"p/q\" string");
}

Int integer_at(const json& j, const std::string& path) {
  const Rational q = rational_at(j, path);
  if (q.get_den() != 1) schema_error(path, "expected an integer");
  return q.get_num();
}

long small_integer_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected a JSON integer");
  return j.get<long>();
}

std::size_t count_at(const json& j, const std::string& path) {
  const long v = small_integer_at(j, path);
  if (v < 0) schema_error(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

RatVec rational_list(const json& j, const std::string& path) {
  RatVec out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i)
    out.push_back(rational_at(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json(const Rational& q) { return dimtrace::to_string(q); }

json to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

// ---- per-schema parsers ------------------------------------------------------

algebraic::IntPolynomial parse_polynomial(const json& j, const std::string& path) {
  require_keys(j, path, {"coeffs"});
  IntVec c;
  const json& a = array_at(j["coeffs"], path + ".coeffs");
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(integer_at(a[i], path + ".coeffs[" + std::to_string(i) + "]"));
  return algebraic::IntPolynomial(std::move(c));
}

json polynomial_json(const algebraic::IntPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return {{"coeffs", c}};
}

struct AlgebraicInput {
  algebraic::IntPolynomial minpoly;
  std::optional<algebraic::RootInterval> interval;
};

AlgebraicInput parse_algebraic(const json& j, const std::string& path) {
  require_keys(j, path, {"minpoly"}, {"interval"});
  AlgebraicInput out{parse_polynomial(j["minpoly"], path + ".minpoly"), std::nullopt};
  if (j.contains("interval")) {
    const RatVec v = rational_list(j["interval"], path + ".interval");
    if (v.size() != 2) schema_error(path + ".interval", "expected [lo, hi]");
    out.interval = algebraic::RootInterval{v[0], v[1]};
  }
  return out;
}

laurent::LaurentPoly parse_laurent(const json& j, const std::string& path) {
  require_keys(j, path, {"dim", "terms"});
  const std::size_t dim = count_at(j["dim"], path + ".dim");
  if (dim == 0) schema_error(path + ".dim", "expected a positive dimension");
  laurent::LaurentPoly p(dim);
  const json& terms = array_at(j["terms"], path + ".terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    require_keys(terms[i], tp, {"exp", "coeff"});
    laurent::Exponent e;
    const json& ej = array_at(terms[i]["exp"], tp + ".exp");
    for (std::size_t k = 0; k < ej.size(); ++k) e.push_back(small_integer_at(ej[k], tp + ".exp[" + std::to_string(k) + "]"));
    if (e.size() != dim) schema_error(tp + ".exp", "length differs from dim");
    p.add_term(e, integer_at(terms[i]["coeff"], tp + ".coeff"));
  }
  return p;
}

json laurent_json(const laurent::LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
  return {{"dim", p.dim()}, {"terms", terms}};
}

lattice::EmbeddedGroup parse_group(const json& j, const std::string& path) {
  require_keys(j, path, {"basis", "gens"});
  const json& b = j["basis"];
  require_keys(b, path + ".basis", {}, {"labels", "radicals"});
  lattice::RealBasis basis;
  if (b.contains("radicals")) {
    std::vector<Int> radicals;
    const json& r = array_at(b["radicals"], path + ".basis.radicals");
    for (std::size_t i = 0; i < r.size(); ++i)
      radicals.push_back(integer_at(r[i], path + ".basis.radicals[" + std::to_string(i) + "]"));
    basis = lattice::RealBasis::squarefree_radicals(radicals);
    if (b.contains("labels") && b["labels"] != json(basis.labels))
      schema_error(path + ".basis.labels", "labels do not match the radicals");
  } else {
    if (!b.contains("labels")) schema_error(path + ".basis", "expected labels or radicals");
    if (!b["labels"].is_array()) schema_error(path + ".basis.labels", "expected an array");
    std::vector<std::string> labels;
    for (const auto& l : b["labels"]) {
      if (!l.is_string()) schema_error(path + ".basis.labels", "expected strings");
      labels.push_back(l.get<std::string>());
    }
    basis = lattice::RealBasis::asserted(std::move(labels));
  }
  lattice::EmbeddedGroup g{basis, {}};
  const json& gens = array_at(j["gens"], path + ".gens");
  for (std::size_t i = 0; i < gens.size(); ++i)
    g.gens.push_back(rational_list(gens[i], path + ".gens[" + std::to_string(i) + "]"));
  g.validate();
  return g;
}

json group_json(const lattice::EmbeddedGroup& g) {
  json basis = {{"labels", g.basis.labels}};
  if (g.basis.certified()) {
    json r = json::array();
    for (const auto& n : g.basis.radicals) r.push_back(n.get_str());
    basis["radicals"] = r;
  }
  json gens = json::array();
  for (const auto& v : g.gens) gens.push_back(to_json(v));
  return {{"basis", basis}, {"gens", gens}};
}

lattice::DirectSumInstance parse_direct_sum(const json& j) {
  lattice::DirectSumInstance d;
  for (std::size_t i = 0; i < array_at(j, "payload").size(); ++i)
    d.summands.push_back(parse_group(j[i], "payload[" + std::to_string(i) + "]"));
  d.validate();
  return d;
}

simplexgood::SimplexSubset parse_simplex(const json& j) {
  require_keys(j, "payload", {"n", "points"});
  const std::size_t n = count_at(j["n"], "payload.n");
  std::vector<RatVec> points;
  const json& pts = array_at(j["points"], "payload.points");
  for (std::size_t i = 0; i < pts.size(); ++i)
    points.push_back(rational_list(pts[i], "payload.points[" + std::to_string(i) + "]"));
  return simplexgood::SimplexSubset::make(n, std::move(points));
}

// ---- dispatch ----------------------------------------------------------------

struct Outcome {
  bool verdict = false;
  Certificate certificate;
  std::optional<OracleCheck> oracle;
};

void add(Certificate& c, const std::string& key, const std::string& value) { c.emplace_back(key, value); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

Outcome run_trace_1d(const json& payload, const Options& opt) {
  require_keys(payload, "payload", {"P", "r"});
  const auto p = parse_polynomial(payload["P"], "payload.P");
  const auto in = parse_algebraic(payload["r"], "payload.r");
  const auto r = algebraic::AlgebraicNumber1D::from_minpoly(in.minpoly, in.interval);
  const auto v = algebraic::classify_trace_1d(p, r);
  Outcome out{v.condition1, {}, std::nullopt};
  add(out.certificate, "overall", to_string(v.overall));
  add(out.certificate, "condition1", yes_no(v.condition1));
  add(out.certificate, "really_isolated", yes_no(v.really_isolated));
  add(out.certificate, "approx_divisible", yes_no(v.approx_divisible));
  for (const auto& kv : v.certificate) out.certificate.push_back(kv);
  if (opt.oracle) {
    const Int ak = p.leading();
    const Int a0 = p[p.lowest_degree()];
    const bool fwd = algebraic::scaled_integrality_search(r.minpoly(), ak, 64).has_value();
    const bool rev = algebraic::scaled_integrality_search(r.reciprocal().minpoly(), a0, 64).has_value();
    out.oracle = OracleCheck{"scaling witness search, t <= 64", (fwd && rev) == v.condition1};
  }
  return out;
}

// (value * B^t) is an integer for some t <= max_power.
bool in_localization(Rational value, const Int& b, unsigned long max_power) {
  for (unsigned long t = 0; t <= max_power; ++t) {
    value.canonicalize();
    if (value.get_den() == 1) return true;
    if (b == 1) return false;
    value *= b;
  }
  return false;
}

Outcome run_trace_rational(const json& payload, const Options& opt) {
  require_keys(payload, "payload", {"P", "r"});
  const auto p = parse_laurent(payload["P"], "payload.P");
  const RatVec r = rational_list(payload["r"], "payload.r");
  const auto c1 = laurent::condition_one_rational(p, r);
  const auto v = laurent::classify_rational_trace(p, r);
  Outcome out{c1.holds, {}, std::nullopt};
  add(out.certificate, "overall", to_string(v.overall));
  add(out.certificate, "condition1", yes_no(v.condition1));
  add(out.certificate, "really_isolated", yes_no(v.really_isolated));
  add(out.certificate, "approx_divisible", yes_no(v.approx_divisible));
  for (const auto& kv : c1.certificate) out.certificate.push_back(kv);
  if (opt.oracle) {
    const Rational value = p.evaluate(r);
    bool all = true;
    for (const auto& [w, c] : p.terms()) {
      Rational m = 1;
      for (std::size_t i = 0; i < r.size(); ++i) m *= rpow(r[i], w[i]);
      all = all && in_localization(value / m, c1.ring_denominator, kRingOracleMaxPower);
    }
    out.oracle = OracleCheck{"direct localization membership", all == c1.holds};
  }
  return out;
}

Outcome run_fitting(const json& payload, const Options& opt) {
  require_keys(payload, "payload", {"P", "candidates"});
  const auto p = parse_laurent(payload["P"], "payload.P");
  std::vector<laurent::LaurentPoly> candidates;
  const json& cs = array_at(payload["candidates"], "payload.candidates");
  for (std::size_t i = 0; i < cs.size(); ++i)
    candidates.push_back(parse_laurent(cs[i], "payload.candidates[" + std::to_string(i) + "]"));
  const auto report = laurent::fitting_check(p, candidates, opt.n_max.value_or(kDefaultNMax));
  Outcome out{report.fitted, {}, std::nullopt};
  if (report.witness) {
    add(out.certificate, "candidate", std::to_string(report.witness->candidate));
    add(out.certificate, "boost_N", std::to_string(report.witness->boost));
    add(out.certificate, "power_k", std::to_string(report.witness->power));
  }
  for (const auto& s : report.candidates) {
    const std::string prefix = "candidate[" + std::to_string(s.candidate) + "].";
    add(out.certificate, prefix + "boosts_tried", std::to_string(s.boosts_tried));
    add(out.certificate, prefix + "clause_a_failures", std::to_string(s.clause_a_failures));
    add(out.certificate, prefix + "clause_b_failures", std::to_string(s.clause_b_failures));
    if (s.last_obstruction)
      add(out.certificate, prefix + "obstruction",
          std::string(laurent::to_string(s.last_obstruction->kind)) + " at " +
              laurent::to_string(s.last_obstruction->exponent));
  }
  for (std::size_t i = 0; i < report.per_face_failures.size(); ++i) {
    const auto& f = report.per_face_failures[i];
    add(out.certificate, "face_failure[" + std::to_string(i) + "]",
        "face " + std::to_string(f.face) + ", exponent " + laurent::to_string(f.exponent) + ", coefficient " +
            f.coefficient.get_str());
  }
  for (std::size_t i = 0; i < report.warnings.size(); ++i)
    add(out.certificate, "warning[" + std::to_string(i) + "]", report.warnings[i]);
  if (opt.oracle) {
    if (report.witness) {
      const auto& w = *report.witness;
      out.oracle = OracleCheck{"full expansion of the witness",
                               laurent::verify_fitting_witness(p, candidates[w.candidate], w.boost, w.power)};
    } else {
      out.oracle = OracleCheck{"none for a negative semi-decision", std::nullopt};
    }
  }
  return out;
}

Outcome run_simplicial(const json& payload, const Options& opt) {
  const RatVec v = rational_list(payload, "payload");
  const auto r = simplicial::is_order_unit_good(v);
  Outcome out{r.holds, r.certificate, std::nullopt};
  std::string nf = "[";
  for (std::size_t i = 0; i < r.normal.entries.size(); ++i) nf += (i ? ", " : "") + r.normal.entries[i].get_str();
  add(out.certificate, "normal_form", nf + "]");
  add(out.certificate, "good", yes_no(simplicial::is_good(v)));
  if (opt.oracle) {
    const unsigned long bound = opt.bound.value_or(kDefaultBound);
    const auto o = simplicial::interval_lifting_oracle(r.normal.entries, bound);
    out.oracle = OracleCheck{"interval lifting over order units in [1, " + std::to_string(bound) + "]^k",
                             o.holds == r.holds};
    if (o.counterexample) {
      std::string b = "[";
      for (std::size_t i = 0; i < o.counterexample->b.size(); ++i)
        b += (i ? ", " : "") + o.counterexample->b[i].get_str();
      add(out.certificate, "oracle_counterexample", "b=" + b + "], s=" + o.counterexample->s.get_str());
    }
  }
  return out;
}

Outcome run_direct_sum(const json& payload, const Options& opt) {
  const auto d = parse_direct_sum(payload);
  const auto v = lattice::direct_sum_order_unit_good(d);
  Outcome out{v.order_unit_good, v.certificate, std::nullopt};
  if (opt.oracle) {
    if (d.summands.size() == 2) {
      out.oracle = OracleCheck{"value group intersection density",
                               lattice::value_group_intersection_dense(d.summands[0], d.summands[1]) ==
                                   v.order_unit_good};
    } else if (!v.order_unit_good) {
      out.oracle = OracleCheck{"dual annihilator check",
                               lattice::dual_annihilates(v.kernel.rows, v.kernel.components,
                                                         d.summands[0].basis, v.density.dual)};
    } else {
      out.oracle = OracleCheck{"none for dense kernels with more than two summands", std::nullopt};
    }
  }
  return out;
}

Outcome run_simplex(const json& payload, const Options& opt) {
  const auto s = parse_simplex(payload);
  const auto r = simplexgood::decompose_good_subset(s);
  Outcome out{r.good(), r.certificate, std::nullopt};
  add(out.certificate, "flat_intersection", yes_no(simplexgood::flat_intersection_check(s)));
  if (opt.oracle) {
    const auto o = simplexgood::lifting_oracle_family(s, kSimplexOraclePairs, 0);
    out.oracle = OracleCheck{"LP lifting, " + std::to_string(o.pairs_checked) + " admissible pairs checked",
                             o.all_liftable == r.good()};
    if (o.failing) {
      add(out.certificate, "oracle_failing_pair", o.failing->origin);
    }
  }
  return out;
}

Outcome run_polytope_info(const json& payload, const Options& opt) {
  require_keys(payload, "payload", {"P"});
  const auto p = parse_laurent(payload["P"], "payload.P");
  const auto np = laurent::newton_polytope(p);
  const bool approx = laurent::approximately_divisible(p);
  Outcome out{approx, {}, std::nullopt};
  std::string vs = "[";
  const auto vertices = np.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) vs += (i ? ", " : "") + laurent::to_string(vertices[i]);
  add(out.certificate, "vertices", vs + "]");
  std::string vc = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) vc += (i ? ", " : "") + p.coeff(vertices[i]).get_str();
  add(out.certificate, "vertex_coefficients", vc + "]");
  add(out.certificate, "affine_dimension", std::to_string(np.hull.affine_dimension));
  add(out.certificate, "faces", std::to_string(np.faces().size()));
  add(out.certificate, "projectively_faithful", yes_no(laurent::projectively_faithful(p)));
  add(out.certificate, "approx_divisible", yes_no(approx));
  if (opt.oracle) {
    const auto sp = laurent::support_power(p, 2);
    const auto direct = (p * p).support();
    out.oracle = OracleCheck{"support of P^2 by expansion",
                             std::vector<laurent::Exponent>(sp.begin(), sp.end()) == direct};
  }
  return out;
}

std::string hex(const unsigned char* data, unsigned int n) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < n; ++i) {
    out += digits[data[i] >> 4];
    out += digits[data[i] & 15];
  }
  return out;
}

}  // namespace

const char* to_string(Kind k) {
  switch (k) {
    case Kind::kTrace1d: return "trace-1d";
    case Kind::kTraceRational: return "trace-rational";
    case Kind::kFitting: return "fitting";
    case Kind::kSimplicial: return "simplicial";
    case Kind::kDirectSum: return "directsum";
    case Kind::kSimplex: return "simplex";
    case Kind::kPolytopeInfo: return "polytope-info";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::kTrace1d, Kind::kTraceRational, Kind::kFitting, Kind::kSimplicial, Kind::kDirectSum,
                 Kind::kSimplex, Kind::kPolytopeInfo})
    if (name == to_string(k)) return k;
  throw InvalidInput("unknown query kind \"" + std::string(name) + "\"");
}

json canonical_payload(Kind kind, const json& payload) {
  switch (kind) {
    case Kind::kTrace1d: {
      require_keys(payload, "payload", {"P", "r"});
      const auto in = parse_algebraic(payload["r"], "payload.r");
      json r = {{"minpoly", polynomial_json(in.minpoly)}};
      if (in.interval) r["interval"] = to_json(RatVec{in.interval->lo, in.interval->hi});
      return {{"P", polynomial_json(parse_polynomial(payload["P"], "payload.P"))}, {"r", r}};
    }
    case Kind::kTraceRational:
      require_keys(payload, "payload", {"P", "r"});
      return {{"P", laurent_json(parse_laurent(payload["P"], "payload.P"))},
              {"r", to_json(rational_list(payload["r"], "payload.r"))}};
    case Kind::kFitting: {
      require_keys(payload, "payload", {"P", "candidates"});
      json cs = json::array();
      const json& a = array_at(payload["candidates"], "payload.candidates");
      for (std::size_t i = 0; i < a.size(); ++i)
        cs.push_back(laurent_json(parse_laurent(a[i], "payload.candidates[" + std::to_string(i) + "]")));
      return {{"P", laurent_json(parse_laurent(payload["P"], "payload.P"))}, {"candidates", cs}};
    }
    case Kind::kSimplicial:
      return to_json(rational_list(payload, "payload"));
    case Kind::kDirectSum: {
      json out = json::array();
      for (const auto& g : parse_direct_sum(payload).summands) out.push_back(group_json(g));
      return out;
    }
    case Kind::kSimplex: {
      const auto s = parse_simplex(payload);
      json pts = json::array();
      for (const auto& p : s.points) pts.push_back(to_json(p));
      return {{"n", s.n}, {"points", pts}};
    }
    case Kind::kPolytopeInfo:
      require_keys(payload, "payload", {"P"});
      return {{"P", laurent_json(parse_laurent(payload["P"], "payload.P"))}};
  }
  throw InvalidInput("unknown query kind");
}

json canonical_query(const Query& q) {
  json options = {{"oracle", q.options.oracle}};
  if (q.kind == Kind::kFitting) options["n_max"] = q.options.n_max.value_or(kDefaultNMax);
  if (q.kind == Kind::kSimplicial && q.options.oracle) options["bound"] = q.options.bound.value_or(kDefaultBound);
  return {{"kind", to_string(q.kind)}, {"options", options}, {"payload", canonical_payload(q.kind, q.payload)}};
}

std::string digest(const Query& q) {
  const std::string text = canonical_query(q).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  return hex(md, len);
}

VerdictRecord run_query(const Query& q) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord rec;
  rec.digest = digest(q);
  rec.kind = q.kind;
  rec.version = version();
  Outcome o;
  switch (q.kind) {
    case Kind::kTrace1d: o = run_trace_1d(q.payload, q.options); break;
    case Kind::kTraceRational: o = run_trace_rational(q.payload, q.options); break;
    case Kind::kFitting: o = run_fitting(q.payload, q.options); break;
    case Kind::kSimplicial: o = run_simplicial(q.payload, q.options); break;
    case Kind::kDirectSum: o = run_direct_sum(q.payload, q.options); break;
    case Kind::kSimplex: o = run_simplex(q.payload, q.options); break;
    case Kind::kPolytopeInfo: o = run_polytope_info(q.payload, q.options); break;
  }
  rec.verdict = o.verdict;
  rec.certificate = std::move(o.certificate);
  rec.oracle = std::move(o.oracle);
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

json deterministic_json(const VerdictRecord& r) {
  json cert = json::array();
  for (const auto& [k, v] : r.certificate) cert.push_back({k, v});
  json out = {{"digest", r.digest},
              {"kind", to_string(r.kind)},
              {"verdict", r.verdict},
              {"certificate", cert},
              {"version", r.version}};
  if (r.oracle) {
    json o = {{"method", r.oracle->method}};
    o["agrees"] = r.oracle->agrees ? json(*r.oracle->agrees) : json(nullptr);
    out["oracle"] = o;
  }
  return out;
}

json to_json(const VerdictRecord& r) {
  json out = deterministic_json(r);
  out["wall_time"] = r.wall_time;
  return out;
}

std::string format_human(const VerdictRecord& r) {
  std::ostringstream out;
  out << to_string(r.kind) << ": " << yes_no(r.verdict) << "\n";
  for (const auto& [k, v] : r.certificate) out << "  " << k << " = " << v << "\n";
  if (r.oracle) {
    out << "  oracle (" << r.oracle->method << "): ";
    if (!r.oracle->agrees) out << "not applicable";
    else out << (*r.oracle->agrees ? "agrees" : "DISAGREES");
    out << "\n";
  }
  char t[32];
  std::snprintf(t, sizeof t, "%.3f", r.wall_time);
  out << "digest " << r.digest << ", " << t << " s\n";
  return out.str();
}

void append_ledger(const std::string& path, const VerdictRecord& r) {
  std::ofstream f(path, std::ios::app);
  if (!f) throw Error("cannot open ledger " + path);
  f << to_json(r).dump() << "\n";
  f.flush();
  if (!f) throw Error("cannot write ledger " + path);
}

const char* version() { return DIMTRACE_VERSION; }

}  // namespace dimtrace::cli
