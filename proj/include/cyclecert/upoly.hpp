#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclecert/polynomial.hpp"

namespace cyclecert {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The variable name only matters for rendering and conversion.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs, std::string var = "x");
  static UPoly constant(const Rational& c, std::string var = "x") { return UPoly({c}, std::move(var)); }
  static UPoly monomial(const Rational& c, unsigned degree, std::string var = "x");

  /// p must mention no variable other than var (a constant is accepted).
  /// Throws UnboundParameter naming any extra variable.
  static UPoly from_polynomial(const Polynomial& p, std::string_view var);
  /// Same, taking the single variable of p (or "x" for constants).
  static UPoly from_polynomial(const Polynomial& p);
  Polynomial to_polynomial() const;

  const std::vector<Rational>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  UPoly renamed(std::string var) const { return UPoly(c_, std::move(var)); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;
  /// Sign at +infinity (positive = true) or -infinity.
  int sign_at_infinity(bool positive) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Substitute var -> var^2 (p(u) becomes p(r^2)).
  UPoly compose_square() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  UPoly operator-() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  void trim();

  std::vector<Rational> c_;
  std::string var_ = "x";
};

/// Euclidean division; throws DivisionByZeroDenominator on b = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// a / b for b dividing a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);

struct SquareFreeDecomposition {
  Rational content;                                  // leading coefficient of p
  std::vector<std::pair<UPoly, unsigned>> factors;   // monic, square-free, pairwise coprime
};

/// Yun's algorithm: p = content * prod f_i^{m_i}. Constant factors are omitted.
SquareFreeDecomposition square_free_decomposition(const UPoly& p);
/// Product of the distinct irreducible factors, monic.
UPoly square_free_part(const UPoly& p);

}  // namespace cyclecert
