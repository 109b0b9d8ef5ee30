#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecert/rational_function.hpp"
#include "cyclecert/upoly.hpp"

namespace cyclecert {

/// Interval of the real line with rational or infinite endpoints.
/// Infinite endpoints (std::nullopt) are always open.
class IntervalQ {
 public:
  IntervalQ(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed);

  static IntervalQ real_line() { return {std::nullopt, false, std::nullopt, false}; }
  static IntervalQ open(const Rational& lo, const Rational& hi) { return {lo, false, hi, false}; }
  static IntervalQ closed(const Rational& lo, const Rational& hi) { return {lo, true, hi, true}; }
  static IntervalQ point(const Rational& q) { return {q, true, q, true}; }
  /// (lo, +inf) or [lo, +inf)
  static IntervalQ above(const Rational& lo, bool closed = false) { return {lo, closed, std::nullopt, false}; }
  /// (-inf, hi) or (-inf, hi]
  static IntervalQ below(const Rational& hi, bool closed = false) { return {std::nullopt, false, hi, closed}; }

  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool is_point() const { return lo_ && hi_ && *lo_ == *hi_; }
  bool bounded() const { return lo_ && hi_; }

  bool contains(const Rational& q) const;
  /// A rational point inside the interval (midpoint, or one unit past a finite end).
  Rational sample() const;

  /// "(0, inf)", "[-1, 1]", "{3/2}" ...
  std::string to_string() const;

  friend bool operator==(const IntervalQ& a, const IntervalQ& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
  }

 private:
  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
  bool lo_closed_ = false;
  bool hi_closed_ = false;
};

/// One real root: an isolating interval (open with rational ends, or a single
/// rational point) and its multiplicity.
struct IsolatedRoot {
  IntervalQ interval;
  unsigned multiplicity = 1;
};

struct RootReport {
  std::vector<IsolatedRoot> roots;  // ascending, pairwise disjoint
  std::size_t total_distinct = 0;
};

/// Sign variation data of one Sturm evaluation, kept as evidence.
struct SturmTrace {
  std::size_t chain_length = 0;
  std::size_t variations_lo = 0;
  std::size_t variations_hi = 0;
  std::size_t count = 0;  // distinct roots in the interval, endpoints included when closed
};

/// Number of distinct real roots of p in the interval. Endpoint roots are
/// deflated before the Sturm chain is evaluated. Throws ZeroPolynomial on p = 0.
std::size_t sturm_count(const UPoly& p, const IntervalQ& interval);
SturmTrace sturm_trace(const UPoly& p, const IntervalQ& interval);
/// Polynomial overload: p must be univariate, else UnboundParameter.
std::size_t sturm_count(const Polynomial& p, const IntervalQ& interval);

/// Square-free decomposition + dyadic bisection of Sturm-isolated intervals.
RootReport isolate_roots(const UPoly& p);
RootReport isolate_roots(const Polynomial& p);

/// Shrinks an isolating interval of a root of the square-free polynomial sqf
/// below the given width (a no-op for point intervals).
IntervalQ refine_root(const UPoly& sqf, IntervalQ interval, const Rational& width);

/// Compares the unique root of sqf inside `root` with q: -1, 0 or 1.
int compare_root(const UPoly& sqf, const IntervalQ& root, const Rational& q);

/// Whether the root isolated by `root` lies in `interval`.
bool root_in_interval(const UPoly& sqf, const IntervalQ& root, const IntervalQ& interval);

enum class SignVerdict {
  StrictlyNegative,
  StrictlyPositive,
  NonPositiveZeroMeasure,
  NonNegativeZeroMeasure,
  Indeterminate,
};

std::string to_string(SignVerdict v);
/// +1, -1, or 0 for Indeterminate.
int verdict_sign(SignVerdict v);
bool verdict_strict(SignVerdict v);
SignVerdict make_verdict(int sign, bool strict);

enum class SignMode { Strict, ZeroMeasure };

struct SignEvidence {
  SturmTrace sturm;              // on p (strict mode) or on its odd-multiplicity part
  std::string sturm_polynomial;  // which polynomial the chain was built from
  Rational sample_point;
  Rational sample_value;
  std::vector<IsolatedRoot> zeros;  // zeros of p inside the interval
  std::string note;
};

struct SignCertificate {
  UPoly poly;
  IntervalQ interval = IntervalQ::real_line();
  SignVerdict verdict = SignVerdict::Indeterminate;
  SignEvidence evidence;
};

/// Never unsound: a verdict other than Indeterminate is backed by an exact
/// Sturm count of zero sign changes plus an exact sample value.
SignCertificate certify_sign(const UPoly& p, const IntervalQ& interval, SignMode mode);

/// b(x)^2 - 4 a(x) c(x) for V = a y^2 + b y + c; the denominator of V must
/// not involve y. Throws WrongDegree if deg_y(V) != 2.
RationalFunction discriminant_y(const RationalFunction& V, std::string_view y = "y");

}  // namespace cyclecert
