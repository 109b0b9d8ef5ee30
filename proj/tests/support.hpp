#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cyclecert/parser.hpp"
#include "cyclecert/rational_function.hpp"
#include "cyclecert/upoly.hpp"

namespace testing_support {

using namespace cyclecert;

inline RationalFunction rf(const std::string& text, const std::vector<std::string>& params = {}) {
  return parse_expression(text, {"x", "y"}, params);
}

inline Polynomial poly(const std::string& text, const std::vector<std::string>& params = {}) {
  return rf(text, params).as_polynomial();
}

inline UPoly upoly(const std::string& text, const std::string& var = "x") {
  return UPoly::from_polynomial(parse_expression(text, {var}).as_polynomial(), var);
}

inline Rational q(const std::string& text) { return parse_rational(text); }

inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long num_range = 10, long den_max = 6) {
    return frac(integer(-num_range, num_range), integer(1, den_max));
  }

  Rational nonzero_rational(long num_range = 10, long den_max = 6) {
    Rational r = 0;
    while (r == 0) r = rational(num_range, den_max);
    return r;
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  /// random polynomial in the given variables, total degree <= deg
  Polynomial polynomial(const std::vector<std::string>& vars, unsigned deg, int terms = 4) {
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
      std::vector<std::pair<std::string, unsigned>> powers;
      long budget = integer(0, deg);
      for (const auto& v : vars) {
        long e = integer(0, budget);
        budget -= e;
        powers.emplace_back(v, static_cast<unsigned>(e));
      }
      p += Polynomial::monomial(rational(), powers);
    }
    return p;
  }

  /// integer coefficients in [-range, range], exact degree deg (leading != 0)
  UPoly upoly(int deg, long range = 10, const std::string& var = "x") {
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(integer(-range, range));
    while (c.back() == 0) c.back() = integer(-range, range);
    return UPoly(c, var);
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace testing_support
