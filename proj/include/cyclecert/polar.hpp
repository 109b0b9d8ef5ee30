#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cyclecert/system.hpp"

namespace cyclecert {

/// Finite Fourier series c0 + sum_k (a_k cos(k t) + b_k sin(k t)).
class TrigPoly {
 public:
  using Harmonics = std::map<unsigned, std::pair<Rational, Rational>>;  // k -> (cos, sin)

  TrigPoly() = default;
  TrigPoly(const Rational& c) : const_(c) {}  // NOLINT(google-explicit-constructor)
  static TrigPoly cos(unsigned k, const Rational& coef = 1);
  static TrigPoly sin(unsigned k, const Rational& coef = 1);

  const Rational& constant() const { return const_; }
  const Harmonics& harmonics() const { return h_; }
  bool is_zero() const { return const_ == 0 && h_.empty(); }
  unsigned max_harmonic() const { return h_.empty() ? 0 : h_.rbegin()->first; }

  /// d/dt
  TrigPoly derivative() const;
  /// Value at an angle with cos t = c, sin t = s (c^2 + s^2 = 1 assumed).
  Rational evaluate(const Rational& c, const Rational& s) const;
  double evaluate(double t) const;
  /// c0 + sum_k (|a_k| + |b_k|), an upper bound of the maximum over t.
  Rational amplitude_bound() const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(TrigPoly a, const Rational& c);
  TrigPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.const_ == b.const_ && a.h_ == b.h_; }

  /// "c0 + a1*cos(t) + b1*sin(t) + a2*cos(2*t) ..."
  std::string to_string() const;

 private:
  void add_cos(long k, const Rational& c);
  void add_sin(long k, const Rational& c);
  void trim();
  Rational const_ = 0;
  Harmonics h_;
};

/// Polynomial in r with TrigPoly coefficients.
class PolarPoly {
 public:
  using Coeffs = std::map<unsigned, TrigPoly>;

  PolarPoly() = default;
  static PolarPoly term(unsigned power, const TrigPoly& coef);

  const Coeffs& coeffs() const { return c_; }
  TrigPoly coeff(unsigned power) const;
  bool is_zero() const { return c_.empty(); }
  /// Highest power of r, -1 for zero.
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first); }

  PolarPoly derivative_r() const;
  PolarPoly derivative_theta() const;
  /// Division by r^k; throws NotPolynomial if a lower power is present.
  PolarPoly divide_r(unsigned k) const;
  PolarPoly multiply_r(unsigned k) const;
  Rational evaluate(const Rational& r, const Rational& c, const Rational& s) const;
  double evaluate(double r, double t) const;

  PolarPoly& operator+=(const PolarPoly& o);
  PolarPoly& operator-=(const PolarPoly& o);
  friend PolarPoly operator+(PolarPoly a, const PolarPoly& b) { return a += b; }
  friend PolarPoly operator-(PolarPoly a, const PolarPoly& b) { return a -= b; }
  friend PolarPoly operator*(const PolarPoly& a, const PolarPoly& b);
  friend PolarPoly operator*(PolarPoly a, const Rational& c);
  friend PolarPoly operator*(const PolarPoly& a, const UPoly& radial);
  friend bool operator==(const PolarPoly& a, const PolarPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  Coeffs c_;
};

/// R = cos t P + sin t Q, Theta = (cos t Q - sin t P) / r at x = r cos t,
/// y = r sin t. Errors: NotPolynomial, NonzeroAtOrigin, UnboundParameter.
std::pair<PolarPoly, PolarPoly> to_polar(const SystemDef& sys);

/// p(u) with p(r^2) = average of R over t, divided by r. Throws ParityViolation.
UPoly radial_average(const PolarPoly& R);

struct PolarMs {
  UPoly p;  // in u
  UPoly w;  // in r, w(r) = r^2 p'(r^2)
  PolarPoly R;
  PolarPoly Theta;
  PolarPoly M;
};

/// M = R w'(r) + s (R_r + Theta_t + R/r) w(r)
PolarMs polar_ms(const SystemDef& sys, const Rational& s);

/// mu_i = amplitude bound of the r^i coefficient; returns Phi(r) = sum mu_i r^i.
UPoly mu_bounds(const PolarPoly& M, std::map<unsigned, Rational>* mu = nullptr);

struct PolarCertificate {
  Rational s;
  UPoly p;
  UPoly w;
  int d = 0;
  std::size_t n_plus = 0;
  std::map<unsigned, Rational> mu;
  UPoly phi;
  SignCertificate phi_sign;
  PolarPoly M;
  std::optional<int> bound;
  std::string note;
  std::string lower_bound_note;

  bool certified() const { return bound.has_value(); }
};

/// Errors: ZeroW, plus those of to_polar.
PolarCertificate certify_polar(const SystemDef& sys, const Rational& s, bool unique_critical_point = false);

}  // namespace cyclecert
