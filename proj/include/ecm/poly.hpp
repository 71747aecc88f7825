#pragma once

#include "ecm/count_vector.hpp"
#include "ecm/rational.hpp"
#include "ecm/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ecm {

class EdgeModel;

/// Product of variables x_v, stored as (v, exponent) pairs sorted by v.
using Monomial = std::vector<std::pair<CountVector, unsigned>>;

/// Multiset of variable heights of a monomial, sorted ascending.
using HeightGrade = std::vector<unsigned>;

HeightGrade grade_of(const Monomial& m);

/// Polynomial in the variables x_v (v ranging over count vectors of length d)
/// with exact rational coefficients.
class Poly {
 public:
  explicit Poly(unsigned colors) : colors_(colors) {}

  static Poly constant(unsigned colors, const Rational& c);
  /// The single variable x_v.
  static Poly variable(const CountVector& v);

  unsigned colors() const { return colors_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m, merging with an existing term.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Terms ordered by height grade, then monomial; e.g. "2 * x[1,0]^2 + x[0,1]".
  std::string to_string() const;

 private:
  void check_monomial(const Monomial& m) const;

  unsigned colors_;
  std::map<Monomial, Rational> terms_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

Poly poly_mul(const Poly& p, const Poly& q);

/// Ring homomorphism P_d -> backend of `model`: x_v goes to model.weight(v).
Scalar poly_substitute(const Poly& p, const EdgeModel& model);

/// Splits p into its homogeneous components by height grade. The components
/// have disjoint supports and sum to p.
std::map<HeightGrade, Poly> height_grade(const Poly& p);

}  // namespace ecm
