#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cyclecert/polynomial.hpp"

namespace cyclecert {

/// Quotient of polynomials kept in lowest terms: gcd(num, den) = 1 and den
/// has grlex-leading coefficient 1. Reduction happens at construction, so
/// equal functions compare equal structurally.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Polynomial& num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  /// Throws DivisionByZeroDenominator if den is the zero polynomial.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction variable(std::string_view name) { return Polynomial::variable(name); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(std::string_view var) const { return num_.depends_on(var) || den_.depends_on(var); }
  std::vector<std::string> vars() const { return merge_vars(num_.vars(), den_.vars()); }

  /// Numerator when the denominator is 1; throws NotPolynomial otherwise.
  const Polynomial& as_polynomial() const;

  RationalFunction derivative(std::string_view var) const;
  /// Homomorphic substitution; unbound variables pass through.
  /// Throws DivisionByZeroDenominator if the image denominator vanishes.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& bindings) const;
  RationalFunction bind(const std::map<std::string, Rational>& values) const;
  /// Throws DivisionByZeroDenominator at a pole, UnboundParameter on a free variable.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  RationalFunction pow(unsigned exponent) const;
  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& other) { return *this = *this + other; }
  RationalFunction& operator-=(const RationalFunction& other) { return *this = *this - other; }
  RationalFunction& operator*=(const RationalFunction& other) { return *this = *this * other; }
  RationalFunction& operator/=(const RationalFunction& other) { return *this = *this / other; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" when the denominator is 1, "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  struct Raw {};
  RationalFunction(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace cyclecert
