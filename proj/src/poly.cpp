#include "ecm/poly.hpp"

#include "ecm/edge_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecm {

HeightGrade grade_of(const Monomial& m) {
  HeightGrade g;
  for (const auto& [v, e] : m) g.insert(g.end(), e, v.height());
  std::sort(g.begin(), g.end());
  return g;
}

Poly Poly::constant(unsigned colors, const Rational& c) {
  Poly p(colors);
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(const CountVector& v) {
  Poly p(static_cast<unsigned>(v.size()));
  p.add_term({{v, 1u}}, Rational(1));
  return p;
}

void Poly::check_monomial(const Monomial& m) const {
  for (const auto& [v, e] : m) {
    if (v.size() != colors_)
      throw std::invalid_argument("variable x" + v.to_string() + " does not have length " + std::to_string(colors_));
    if (e == 0) throw std::invalid_argument("monomial with zero exponent");
  }
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  check_monomial(m);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.colors_ != colors_) throw std::invalid_argument("polynomials over different color counts");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  if (b.colors_ != a.colors_) throw std::invalid_argument("polynomials over different color counts");
  for (const auto& [m, c] : b.terms_) out.add_term(m, Rational(-c));
  return out;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.colors() != q.colors()) throw std::invalid_argument("polynomials over different color counts");
  Poly out(p.colors());
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) out.add_term(monomial_product(m1, m2), Rational(c1 * c2));
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<HeightGrade, const std::pair<const Monomial, Rational>*>> order;
  for (const auto& t : terms_) order.emplace_back(grade_of(t.first), &t);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  bool first = true;
  for (const auto& [grade, term] : order) {
    const auto& [m, c] = *term;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& [v, e] : m) {
      if (!factors.empty()) factors += " * ";
      factors += "x" + v.to_string();
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += ecm::to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += ecm::to_string(magnitude) + " * " + factors;
    }
  }
  return out;
}

namespace {

Scalar scalar_power(const Scalar& base, unsigned exponent) {
  Scalar result = Scalar::one(base.kind());
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent != 0) b = b * b;
  }
  return result;
}

}  // namespace

Scalar poly_substitute(const Poly& p, const EdgeModel& model) {
  if (model.colors() != p.colors())
    throw std::invalid_argument("model has " + std::to_string(model.colors()) + " colors, polynomial has " +
                                std::to_string(p.colors()));
  const ScalarKind kind = model.kind();
  Scalar total = Scalar::zero(kind);
  for (const auto& [m, c] : p.terms()) {
    Scalar term = Scalar(c).convert(kind);
    for (const auto& [v, e] : m) term = term * scalar_power(model.weight(v), e);
    total = total + term;
  }
  return total;
}

std::map<HeightGrade, Poly> height_grade(const Poly& p) {
  std::map<HeightGrade, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    auto it = out.try_emplace(grade_of(m), p.colors()).first;
    it->second.add_term(m, c);
  }
  return out;
}

}  // namespace ecm
