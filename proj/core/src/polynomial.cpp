#include "dimtrace/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dimtrace/error.hpp"

namespace dimtrace::algebraic {

IntPolynomial::IntPolynomial(IntVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t degree) {
  IntVec v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::lowest_degree() const {
  if (is_zero()) throw InvalidInput("zero polynomial has no lowest term");
  std::size_t i = 0;
  while (coeffs_[i] == 0) ++i;
  return i;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_normal_form() const {
  if (is_zero()) return *this;
  Int g = content();
  if (leading() < 0) g = -g;
  IntVec v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  IntVec v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversal() const {
  IntVec v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::scale_roots(const Int& s) const {
  if (s == 0) throw InvalidInput("scaling roots by zero");
  IntVec v(coeffs_.size());
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) v[i] = coeffs_[i] * ipow(s, static_cast<unsigned long>(n - 1 - i));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::without_zero_roots() const {
  if (is_zero()) return *this;
  const std::size_t k = lowest_degree();
  return IntPolynomial(IntVec(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntVec v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  IntVec v;
  for (const auto& c : coeffs_) v.emplace_back(-c);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntVec v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RatCoeffs to_rational(const IntPolynomial& p) {
  RatCoeffs out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

IntPolynomial positive_primitive(const RatCoeffs& p) {
  const Int l = lcm_of_denominators(p);
  IntVec v;
  for (const auto& q : p) v.emplace_back(q.get_num() * (l / q.get_den()));
  IntPolynomial z(std::move(v));
  const Int g = z.content();
  if (g == 0) return z;
  IntVec w;
  for (const auto& c : z.coeffs()) w.emplace_back(c / g);
  return IntPolynomial(std::move(w));
}

RatCoeffs remainder(RatCoeffs a, const RatCoeffs& b) {
  auto trim = [](RatCoeffs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  RatCoeffs bb = b;
  trim(bb);
  if (bb.empty()) throw InvalidInput("division by the zero polynomial");
  trim(a);
  while (a.size() >= bb.size()) {
    const Rational f = a.back() / bb.back();
    const std::size_t shift = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
    trim(a);
  }
  return a;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  IntVec rem = a.coeffs();
  IntVec q(rem.size() - b.coeffs().size() + 1, 0);
  const Int& lb = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int& top = rem[k + b.coeffs().size() - 1];
    if (top % lb != 0) return false;
    q[k] = top / lb;
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) rem[k + i] -= q[k] * b.coeffs()[i];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(q));
  return true;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatCoeffs x = to_rational(a), y = to_rational(b);
  auto trim = [](RatCoeffs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(x);
  trim(y);
  while (!y.empty()) {
    RatCoeffs r = remainder(x, y);
    // Keep the sizes of intermediate coefficients in check.
    r = to_rational(positive_primitive(r));
    x = std::move(y);
    y = std::move(r);
  }
  return positive_primitive(x).primitive_normal_form();
}

IntPolynomial squarefree_part(const IntPolynomial& a) {
  if (a.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  const IntPolynomial g = gcd(a, a.derivative());
  IntPolynomial q;
  if (g.degree() <= 0) return a.primitive_normal_form();
  const IntPolynomial pa = a.primitive_normal_form();
  // Over Z, a primitive g divides primitive pa with integer quotient.
  if (!divides(g, pa, &q)) throw Error("internal: gcd does not divide its argument");
  return q.primitive_normal_form();
}

}  // namespace dimtrace::algebraic
