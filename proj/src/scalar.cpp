#include "ecm/scalar.hpp"

#include <cmath>
#include <sstream>

namespace ecm {

std::string_view to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::rational: return "rational";
    case ScalarKind::real: return "real";
    case ScalarKind::complex: return "complex";
  }
  return "?";
}

ScalarKind parse_scalar_kind(std::string_view text) {
  if (text == "rational") return ScalarKind::rational;
  if (text == "real") return ScalarKind::real;
  if (text == "complex") return ScalarKind::complex;
  throw std::invalid_argument("unknown scalar kind '" + std::string(text) + "'");
}

ScalarKindMismatch::ScalarKindMismatch(ScalarKind lhs, ScalarKind rhs)
    : std::logic_error("scalar backend mismatch: " + std::string(to_string(lhs)) + " vs " +
                       std::string(to_string(rhs))) {}

Scalar Scalar::zero(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::rational: return Scalar(Rational(0));
    case ScalarKind::real: return Scalar(0.0);
    case ScalarKind::complex: return Scalar(Complex(0.0, 0.0));
  }
  return {};
}

Scalar Scalar::one(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::rational: return Scalar(Rational(1));
    case ScalarKind::real: return Scalar(1.0);
    case ScalarKind::complex: return Scalar(Complex(1.0, 0.0));
  }
  return {};
}

const Rational& Scalar::rational() const {
  if (kind() != ScalarKind::rational) throw ScalarKindMismatch(kind(), ScalarKind::rational);
  return std::get<Rational>(value_);
}

double Scalar::real() const {
  if (kind() != ScalarKind::real) throw ScalarKindMismatch(kind(), ScalarKind::real);
  return std::get<double>(value_);
}

Complex Scalar::complex() const {
  if (kind() != ScalarKind::complex) throw ScalarKindMismatch(kind(), ScalarKind::complex);
  return std::get<Complex>(value_);
}

Scalar Scalar::convert(ScalarKind target) const {
  if (target == kind()) return *this;
  switch (target) {
    case ScalarKind::rational:
      throw std::invalid_argument("cannot convert a floating scalar to rational");
    case ScalarKind::real:
      if (kind() == ScalarKind::rational) return Scalar(ecm::to_double(rational()));
      if (complex().imag() != 0.0)
        throw std::invalid_argument("complex scalar with nonzero imaginary part is not real");
      return Scalar(complex().real());
    case ScalarKind::complex:
      if (kind() == ScalarKind::rational) return Scalar(Complex(ecm::to_double(rational()), 0.0));
      return Scalar(Complex(real(), 0.0));
  }
  return *this;
}

double Scalar::to_double() const {
  switch (kind()) {
    case ScalarKind::rational: return ecm::to_double(std::get<Rational>(value_));
    case ScalarKind::real: return std::get<double>(value_);
    case ScalarKind::complex: return std::get<Complex>(value_).real();
  }
  return 0.0;
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { using V = std::decay_t<decltype(v)>; return v == V(0); }, value_);
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind()) {
    case ScalarKind::rational: return ecm::to_string(std::get<Rational>(value_));
    case ScalarKind::real: os << std::get<double>(value_); break;
    case ScalarKind::complex: {
      auto z = std::get<Complex>(value_);
      os << '(' << z.real() << ',' << z.imag() << ')';
      break;
    }
  }
  return os.str();
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.kind() != b.kind()) throw ScalarKindMismatch(a.kind(), b.kind());
  switch (a.kind()) {
    case ScalarKind::rational: return Scalar(Rational(op(a.get<Rational>(), b.get<Rational>())));
    case ScalarKind::real: return Scalar(op(a.get<double>(), b.get<double>()));
    case ScalarKind::complex: return Scalar(op(a.get<Complex>(), b.get<Complex>()));
  }
  return {};
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) -> Scalar {
    using T = std::decay_t<decltype(v)>;
    return Scalar(T(-v));
  }, value_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.kind() == b.kind() && a.value_ == b.value_;
}

bool approx_equal(const Scalar& a, const Scalar& b, double rel, double abs) {
  if (a.kind() != b.kind()) throw ScalarKindMismatch(a.kind(), b.kind());
  if (a.kind() == ScalarKind::rational) return a == b;
  Complex x = a.convert(ScalarKind::complex).complex();
  Complex y = b.convert(ScalarKind::complex).complex();
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)) + abs;
}

}  // namespace ecm
