#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclecert/rational.hpp"

namespace cyclecert {

using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order, highest term first. Exponent vectors are
/// indexed by the (alphabetically sorted) variable list of their polynomial.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The variable list is kept sorted and trimmed to the variables that actually
/// occur, so two equal polynomials always have identical representations and
/// operator== is structural. Binary operations merge variable lists by name.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::string_view name);
  static Polynomial monomial(const Rational& coefficient,
                             const std::vector<std::pair<std::string, unsigned>>& powers);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  /// Value of a constant polynomial; throws UnboundParameter otherwise.
  Rational constant_value() const;

  bool depends_on(std::string_view var) const;
  unsigned total_degree() const;
  unsigned degree_in(std::string_view var) const;
  /// Coefficient of var^k viewed as a polynomial in the remaining variables.
  Polynomial coefficient_in(std::string_view var, unsigned k) const;
  /// Leading coefficient with respect to var (a polynomial free of var).
  Polynomial leading_coefficient_in(std::string_view var) const;
  /// Coefficient of the grlex-leading term.
  const Rational& leading_coefficient() const;

  Polynomial derivative(std::string_view var) const;
  /// Antiderivative in var with zero constant of integration.
  Polynomial integral(std::string_view var) const;

  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  Polynomial bind(const std::map<std::string, Rational>& values) const;
  /// Full evaluation; every variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Canonical rendering: grlex-descending terms, explicit `*` and `^`,
  /// rationals as `p/q`. Byte-stable and re-parseable.
  std::string to_string() const;

 private:
  Polynomial(std::vector<std::string> vars, TermMap terms);
  void canonicalize();
  Polynomial aligned(const std::vector<std::string>& vars) const;
  std::optional<std::size_t> index_of(std::string_view var) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Quotient a / b when b divides a exactly, std::nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over Q, normalized to leading coefficient 1
/// (0 only when both inputs are 0). Recursive primitive PRS in one variable
/// at a time with coefficients in the remaining ones.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Union of the variable lists, sorted.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace cyclecert
