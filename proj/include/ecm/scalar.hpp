#pragma once

#include "ecm/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ecm {

using Complex = std::complex<double>;

enum class ScalarKind { rational, real, complex };

std::string_view to_string(ScalarKind kind);
ScalarKind parse_scalar_kind(std::string_view text);

/// Raised when two scalars of different backends meet in one operation.
class ScalarKindMismatch : public std::logic_error {
 public:
  ScalarKindMismatch(ScalarKind lhs, ScalarKind rhs);
};

/// A value in one of the three arithmetic backends. Arithmetic never coerces
/// between backends; use `convert` to change backend explicitly.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(double x) : value_(x) {}
  Scalar(Complex z) : value_(z) {}

  static Scalar zero(ScalarKind kind);
  static Scalar one(ScalarKind kind);

  ScalarKind kind() const { return static_cast<ScalarKind>(value_.index()); }

  const Rational& rational() const;
  double real() const;
  Complex complex() const;

  /// Explicit backend change. Rational -> real/complex rounds; real -> complex
  /// embeds; complex -> real requires a zero imaginary part; nothing converts
  /// to rational except a rational.
  Scalar convert(ScalarKind target) const;

  /// Real part as a double for any backend.
  double to_double() const;

  bool is_zero() const;
  std::string to_string() const;

  template <class T>
  const T& get() const { return std::get<T>(value_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double, Complex> value_;
};

/// |a-b| <= rel*max(|a|,|b|) + abs, for any matching pair of backends;
/// rational pairs compare exactly.
bool approx_equal(const Scalar& a, const Scalar& b, double rel = 1e-10, double abs = 1e-12);

}  // namespace ecm
