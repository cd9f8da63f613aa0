#include "dimtrace/lattice.hpp"

#include <algorithm>
#include <set>

#include "dimtrace/error.hpp"
#include "dimtrace/intmat.hpp"
#include "dimtrace/linalg.hpp"

namespace dimtrace::lattice {

namespace {

using Element = MultiquadraticField::Element;
using FieldMatrix = std::vector<std::vector<Element>>;

constexpr std::size_t kMaxFieldPrimes = 16;

std::string coefficient_times(const Rational& c, const std::string& label, bool first) {
  std::string out;
  Rational mag = c;
  if (c < 0) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  if (label.empty()) return out + to_string(mag);
  if (mag == 1) return out + label;
  return out + to_string(mag) + "*" + label;
}

std::vector<std::size_t> field_rref(const MultiquadraticField& f, FieldMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && f.is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Element inv = f.inverse(m[row][c]);
    for (auto& e : m[row]) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || f.is_zero(m[r][c])) continue;
      const Element factor = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Element>> field_nullspace(const MultiquadraticField& f, FieldMatrix m, std::size_t cols) {
  const auto pivots = field_rref(f, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Element>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(cols);
    v[free] = f.rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.sub(Element{}, m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

Element label_value(const MultiquadraticField& f, const RealBasis& basis, std::size_t l) {
  if (l == 0) return f.rational(1);
  return f.sqrt_of(basis.radicals[l - 1]);
}

// Row (layout c * L + l) projected to the first `components` coordinates
// and evaluated in the field.
std::vector<Element> field_vector(const MultiquadraticField& f, const RealBasis& basis, const RatVec& row,
                                  std::size_t components) {
  const std::size_t L = basis.size();
  std::vector<Element> out(components);
  for (std::size_t c = 0; c < components; ++c)
    for (std::size_t l = 0; l < L; ++l) {
      const Rational& q = row[c * L + l];
      if (q != 0) out[c] = f.add(out[c], f.mul(f.rational(q), label_value(f, basis, l)));
    }
  return out;
}

MultiquadraticField field_for(const RealBasis& basis, const std::vector<RatVec>& rows) {
  if (basis.certified()) return MultiquadraticField::for_radicals(basis.radicals);
  const std::size_t L = basis.size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (i % L != 0 && r[i] != 0)
        throw InvalidInput("density test needs a squarefree-radicals basis when irrational coordinates occur");
  return MultiquadraticField::for_radicals({});
}

void check_layout(const std::vector<RatVec>& rows, std::size_t m, const RealBasis& basis) {
  const std::size_t L = basis.size();
  for (const auto& r : rows) {
    if (r.size() != m * L) throw InvalidInput("generator row has the wrong length");
    for (std::size_t l = 0; l < L; ++l) {
      Rational s = 0;
      for (std::size_t c = 0; c < m; ++c) s += r[c * L + l];
      if (s != 0) throw InvalidInput("generator rows leave the hyperplane (1, ..., 1)^perp");
    }
  }
}

std::string tuple_text(const RatVec& row, std::size_t components, const RealBasis& basis) {
  std::string s = "(";
  for (std::size_t c = 0; c < components; ++c)
    s += (c ? ", " : "") + element_text(row, c * basis.size(), basis);
  return s + ")";
}

}  // namespace

// ---- basis and groups ----------------------------------------------------------

RealBasis RealBasis::squarefree_radicals(const std::vector<Int>& radicals) {
  RealBasis b;
  b.independence = Independence::kSquarefreeRadicals;
  b.radicals = radicals;
  b.labels.push_back("1");
  for (const auto& n : radicals) b.labels.push_back("sqrt(" + n.get_str() + ")");
  b.validate();
  return b;
}

RealBasis RealBasis::asserted(std::vector<std::string> labels) {
  RealBasis b;
  b.labels = std::move(labels);
  b.validate();
  return b;
}

void RealBasis::validate() const {
  if (labels.empty() || labels[0] != "1") throw InvalidInput("basis must start with the label \"1\"");
  const std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw InvalidInput("basis labels are not distinct");
  if (!approx.empty() && approx.size() != labels.size())
    throw InvalidInput("basis enclosures do not match the labels");
  if (independence == Independence::kAsserted) return;
  if (radicals.size() + 1 != labels.size()) throw InvalidInput("one radical per irrational label is required");
  const std::set<Int> seen(radicals.begin(), radicals.end());
  if (seen.size() != radicals.size()) throw InvalidInput("radicals are not distinct");
  for (const auto& n : radicals) {
    if (n <= 1) throw InvalidInput("radical " + n.get_str() + " is not an integer above 1");
    for (const auto& pp : factorize(n))
      if (pp.exponent > 1) throw InvalidInput("radical " + n.get_str() + " is not squarefree");
  }
}

std::size_t EmbeddedGroup::rank() const { return linalg::rank(gens, basis.size()); }

void EmbeddedGroup::validate() const {
  basis.validate();
  for (const auto& g : gens)
    if (g.size() != basis.size()) throw InvalidInput("generator length differs from the basis size");
}

void DirectSumInstance::validate() const {
  if (summands.size() < 2) throw InvalidInput("a direct sum needs at least two summands");
  for (const auto& s : summands) {
    s.validate();
    if (!(s.basis == summands[0].basis)) throw InvalidInput("summands use different bases");
    if (s.rank() == 0) throw InvalidInput("summand is the zero group");
  }
}

std::vector<RatVec> rational_hermite_basis(const std::vector<RatVec>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  const auto scaled = intmat::clear_denominators(rows);
  const auto hnf = intmat::hermite_basis(scaled.rows, cols);
  std::vector<RatVec> out;
  for (const auto& r : hnf) {
    RatVec v;
    for (const auto& x : r) {
      Rational q(x, scaled.denominator);
      q.canonicalize();
      v.push_back(q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

EmbeddedGroup intersect(const EmbeddedGroup& a, const EmbeddedGroup& b) {
  a.validate();
  b.validate();
  if (!(a.basis == b.basis)) throw InvalidInput("basis mismatch");
  const std::size_t L = a.basis.size();
  EmbeddedGroup out{a.basis, {}};
  if (a.gens.empty() || b.gens.empty()) return out;
  std::vector<RatVec> stacked = a.gens;
  for (const auto& g : b.gens) {
    RatVec neg;
    for (const auto& x : g) neg.push_back(-x);
    stacked.push_back(std::move(neg));
  }
  const auto scaled = intmat::clear_denominators(stacked);
  // x_A * A = x_B * B for every kernel row (x_A | x_B).
  std::vector<RatVec> common;
  for (const auto& x : intmat::left_kernel(scaled.rows, L)) {
    RatVec v(L, 0);
    for (std::size_t i = 0; i < a.gens.size(); ++i)
      for (std::size_t l = 0; l < L; ++l) v[l] += x[i] * a.gens[i][l];
    common.push_back(std::move(v));
  }
  out.gens = rational_hermite_basis(common, L);
  return out;
}

bool is_dense_in_R(const EmbeddedGroup& a) {
  a.validate();
  return a.rank() >= 2;
}

bool value_group_intersection_dense(const EmbeddedGroup& a, const EmbeddedGroup& b) {
  return is_dense_in_R(intersect(a, b));
}

KernelImage kernel_of_sum_T(const DirectSumInstance& d) {
  d.validate();
  const std::size_t L = d.summands[0].basis.size();
  const std::size_t n = d.summands.size();
  std::vector<std::vector<RatVec>> bases;
  std::vector<RatVec> stacked;
  for (const auto& s : d.summands) {
    bases.push_back(rational_hermite_basis(s.gens, L));
    stacked.insert(stacked.end(), bases.back().begin(), bases.back().end());
  }
  const auto scaled = intmat::clear_denominators(stacked);
  std::vector<RatVec> image;
  for (const auto& x : intmat::left_kernel(scaled.rows, L)) {
    RatVec row(n * L, 0);
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& g : bases[c]) {
        for (std::size_t l = 0; l < L; ++l) row[c * L + l] += x[k] * g[l];
        ++k;
      }
    image.push_back(std::move(row));
  }
  KernelImage out;
  out.rows = rational_hermite_basis(image, n * L);
  out.components = n;
  out.labels = L;
  out.injective_summands = true;
  return out;
}

// ---- multiquadratic field ------------------------------------------------------

MultiquadraticField MultiquadraticField::for_radicals(const std::vector<Int>& radicals) {
  std::set<Int> primes;
  for (const auto& n : radicals)
    for (const auto& p : prime_divisors(n)) primes.insert(p);
  if (primes.size() > kMaxFieldPrimes)
    throw SizeEnvelopeExceeded(std::to_string(primes.size()) + " primes under the radicals");
  MultiquadraticField f;
  f.primes_.assign(primes.begin(), primes.end());
  return f;
}

std::uint32_t MultiquadraticField::mask_of(const Int& squarefree) const {
  std::uint32_t mask = 0;
  for (const auto& pp : factorize(squarefree)) {
    if (pp.exponent != 1) throw InvalidInput(squarefree.get_str() + " is not squarefree");
    auto it = std::find(primes_.begin(), primes_.end(), pp.prime);
    if (it == primes_.end()) throw InvalidInput("sqrt(" + squarefree.get_str() + ") is outside the field");
    mask |= std::uint32_t{1} << (it - primes_.begin());
  }
  return mask;
}

MultiquadraticField::Element MultiquadraticField::rational(const Rational& q) const {
  if (q == 0) return {};
  return {{0u, q}};
}

MultiquadraticField::Element MultiquadraticField::sqrt_of(const Int& squarefree) const {
  return {{mask_of(squarefree), Rational(1)}};
}

MultiquadraticField::Element MultiquadraticField::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [m, c] : b) {
    auto& slot = out[m];
    slot += c;
    if (slot == 0) out.erase(m);
  }
  return out;
}

MultiquadraticField::Element MultiquadraticField::sub(const Element& a, const Element& b) const {
  Element neg;
  for (const auto& [m, c] : b) neg[m] = -c;
  return add(a, neg);
}

MultiquadraticField::Element MultiquadraticField::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      // sqrt(A) sqrt(B) = (product of shared primes) sqrt(A xor B)
      Rational c = ca * cb;
      const std::uint32_t shared = ma & mb;
      for (std::size_t i = 0; i < primes_.size(); ++i)
        if (shared >> i & 1u) c *= primes_[i];
      auto& slot = out[ma ^ mb];
      slot += c;
      if (slot == 0) out.erase(ma ^ mb);
    }
  return out;
}

MultiquadraticField::Element MultiquadraticField::conjugate(const Element& a, std::size_t prime_index) const {
  Element out;
  for (const auto& [m, c] : a) out[m] = (m >> prime_index & 1u) ? Rational(-c) : c;
  return out;
}

MultiquadraticField::Element MultiquadraticField::inverse(const Element& a) const {
  if (a.empty()) throw InvalidInput("inverse of zero in a multiquadratic field");
  // Multiplying by the conjugate in sqrt(p_i) removes p_i; after all primes
  // the running product is rational.
  Element numerator = rational(1);
  Element current = a;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const Element c = conjugate(current, i);
    numerator = mul(numerator, c);
    current = mul(current, c);
  }
  if (current.size() != 1 || current.begin()->first != 0) throw Error("internal: norm is not rational");
  return mul(numerator, rational(1 / current.begin()->second));
}

std::string MultiquadraticField::to_string(const Element& a) const {
  if (a.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a) {
    std::string label;
    if (m != 0) {
      Int n = 1;
      for (std::size_t i = 0; i < primes_.size(); ++i)
        if (m >> i & 1u) n *= primes_[i];
      label = "sqrt(" + n.get_str() + ")";
    }
    s += coefficient_times(c, label, first);
    first = false;
  }
  return s;
}

// ---- density -------------------------------------------------------------------

HyperplaneDensity dense_in_hyperplane(const std::vector<RatVec>& rows, std::size_t m, const RealBasis& basis) {
  basis.validate();
  if (m == 0) throw InvalidInput("ambient dimension must be positive");
  check_layout(rows, m, basis);
  HyperplaneDensity out;
  if (m == 1) {
    out.dense = true;
    out.certificate.emplace_back("hyperplane", "the zero space");
    return out;
  }
  const std::size_t L = basis.size();
  const std::size_t mp = m - 1;
  std::vector<RatVec> projected;
  for (const auto& r : rows) projected.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(mp * L));
  const auto zbasis = rational_hermite_basis(projected, mp * L);
  const MultiquadraticField f = field_for(basis, zbasis);
  const std::size_t s = zbasis.size();
  out.certificate.emplace_back("projected_rank", std::to_string(s));

  FieldMatrix g;
  for (const auto& r : zbasis) g.push_back(field_vector(f, basis, r, mp));

  auto finish_dual = [&](std::vector<Element> w, const std::string& reason) {
    out.dense = false;
    out.dual = std::move(w);
    for (const auto& e : out.dual) out.dual_text.push_back(f.to_string(e));
    std::string text = "(";
    for (std::size_t i = 0; i < out.dual_text.size(); ++i) text += (i ? ", " : "") + out.dual_text[i];
    out.certificate.emplace_back("dual_reason", reason);
    out.certificate.emplace_back("dual", text + ")");
    if (!dual_annihilates(rows, m, basis, out.dual)) throw Error("internal: dual vector check failed");
    return out;
  };

  FieldMatrix reduced = g;
  const auto pivots = field_rref(f, reduced, mp);
  out.certificate.emplace_back("field_rank", std::to_string(pivots.size()));
  if (pivots.size() < mp) {
    auto kernel = field_nullspace(f, g, mp);
    return finish_dual(std::move(kernel.front()), "rank deficient over the coordinate field");
  }

  // Left kernel of G over F, split into rational conditions on n in Z^s.
  FieldMatrix gt(mp, std::vector<Element>(s));
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t c = 0; c < mp; ++c) gt[c][k] = g[k][c];
  const auto left = field_nullspace(f, gt, s);
  linalg::RatMatrix conditions;
  for (const auto& y : left) {
    std::set<std::uint32_t> masks;
    for (const auto& e : y)
      for (const auto& [mask, c] : e) masks.insert(mask);
    for (auto mask : masks) {
      RatVec row(s, 0);
      for (std::size_t k = 0; k < s; ++k) {
        auto it = y[k].find(mask);
        if (it != y[k].end()) row[k] = it->second;
      }
      conditions.push_back(std::move(row));
    }
  }
  const auto integer_targets = linalg::nullspace(conditions, s);
  if (integer_targets.empty()) {
    out.dense = true;
    out.certificate.emplace_back("dual_lattice", "trivial");
    return out;
  }
  const RatVec n = linalg::primitive_direction(integer_targets.front());
  // Solve G w = n; G has full column rank so the solution is unique.
  FieldMatrix aug = g;
  for (std::size_t k = 0; k < s; ++k) aug[k].push_back(f.rational(n[k]));
  const auto aug_pivots = field_rref(f, aug, mp);
  std::vector<Element> w(mp);
  for (std::size_t r = 0; r < aug_pivots.size(); ++r) w[aug_pivots[r]] = aug[r][mp];
  return finish_dual(std::move(w), "integer-valued functional on the generators");
}

bool dual_annihilates(const std::vector<RatVec>& rows, std::size_t m, const RealBasis& basis,
                      const std::vector<Element>& dual) {
  if (m < 2 || dual.size() != m - 1) return false;
  const MultiquadraticField f =
      basis.certified() ? MultiquadraticField::for_radicals(basis.radicals) : MultiquadraticField::for_radicals({});
  if (std::all_of(dual.begin(), dual.end(), [](const Element& e) { return e.empty(); })) return false;
  for (const auto& r : rows) {
    const auto v = field_vector(f, basis, r, m - 1);
    Element pairing;
    for (std::size_t c = 0; c + 1 < m; ++c) pairing = f.add(pairing, f.mul(dual[c], v[c]));
    if (pairing.empty()) continue;
    if (pairing.size() != 1 || pairing.begin()->first != 0 || pairing.begin()->second.get_den() != 1)
      return false;
  }
  return true;
}

DirectSumVerdict direct_sum_order_unit_good(const DirectSumInstance& d) {
  DirectSumVerdict out;
  out.kernel = kernel_of_sum_T(d);
  const RealBasis& basis = d.summands[0].basis;
  out.density = dense_in_hyperplane(out.kernel.rows, out.kernel.components, basis);
  out.order_unit_good = out.density.dense;
  auto& cert = out.certificate;
  cert.emplace_back("basis", basis.certified() ? "squarefree-radicals" : "asserted (verdict conditional)");
  cert.emplace_back("summand_case", "injective-summands: T(ker phi) = T(V)");
  std::string gens = "[";
  for (std::size_t i = 0; i < out.kernel.rows.size(); ++i)
    gens += (i ? ", " : "") + tuple_text(out.kernel.rows[i], out.kernel.components, basis);
  cert.emplace_back("T(V)_generators", gens + "]");
  cert.insert(cert.end(), out.density.certificate.begin(), out.density.certificate.end());
  return out;
}

std::string element_text(const RatVec& coords, std::size_t offset, const RealBasis& basis) {
  std::string s;
  bool first = true;
  for (std::size_t l = 0; l < basis.size(); ++l) {
    const Rational& c = coords[offset + l];
    if (c == 0) continue;
    s += coefficient_times(c, l == 0 ? std::string() : basis.labels[l], first);
    first = false;
  }
  return first ? "0" : s;
}

}  // namespace dimtrace::lattice
