#include "cyclecert/real_roots.hpp"

#include <algorithm>
#include <sstream>

#include "cyclecert/error.hpp"

namespace cyclecert {

IntervalQ::IntervalQ(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_ && lo_closed), hi_closed_(hi_ && hi_closed) {
  if (lo_ && hi_ && *lo_ > *hi_) {
    throw Error(ErrorKind::SchemaError, "interval with lo > hi: " + cyclecert::to_string(*lo_) + " > " +
                                            cyclecert::to_string(*hi_));
  }
}

bool IntervalQ::contains(const Rational& q) const {
  if (lo_ && (q < *lo_ || (q == *lo_ && !lo_closed_))) return false;
  if (hi_ && (q > *hi_ || (q == *hi_ && !hi_closed_))) return false;
  return true;
}

Rational IntervalQ::sample() const {
  if (lo_ && hi_) return (*lo_ + *hi_) / 2;
  if (lo_) return *lo_ + 1;
  if (hi_) return *hi_ - 1;
  return 0;
}

std::string IntervalQ::to_string() const {
  if (is_point()) return "{" + cyclecert::to_string(*lo_) + "}";
  std::ostringstream os;
  os << (lo_closed_ ? '[' : '(') << (lo_ ? cyclecert::to_string(*lo_) : std::string("-inf")) << ", "
     << (hi_ ? cyclecert::to_string(*hi_) : std::string("inf")) << (hi_closed_ ? ']' : ')');
  return os.str();
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& sqf) {
  std::vector<UPoly> chain{sqf};
  if (sqf.degree() <= 0) return chain;
  chain.push_back(sqf.derivative());
  while (true) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    UPoly r = -divmod(a, b).second;
    if (r.is_zero()) break;
    // positive rescaling keeps every sign in the chain
    chain.push_back(r * Rational(1 / abs(r.leading())));
  }
  return chain;
}

std::size_t variations(const std::vector<UPoly>& chain, const std::optional<Rational>& at, bool plus_infinity) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = at ? sgn(p(*at)) : p.sign_at_infinity(plus_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

UPoly linear_factor(const Rational& root, const std::string& var) { return UPoly({-root, Rational(1)}, var); }

}  // namespace

SturmTrace sturm_trace(const UPoly& p, const IntervalQ& interval) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm count of the zero polynomial");
  SturmTrace trace;
  UPoly sqf = square_free_part(p);
  if (interval.is_point()) {
    trace.chain_length = 1;
    trace.count = sqf(*interval.lo()) == 0 ? 1 : 0;
    return trace;
  }
  std::size_t endpoint_roots = 0;
  if (interval.lo() && sqf.degree() > 0 && sqf(*interval.lo()) == 0) {
    if (interval.lo_closed()) ++endpoint_roots;
    sqf = exact_quotient(sqf, linear_factor(*interval.lo(), sqf.var()));
  }
  if (interval.hi() && sqf.degree() > 0 && sqf(*interval.hi()) == 0) {
    if (interval.hi_closed()) ++endpoint_roots;
    sqf = exact_quotient(sqf, linear_factor(*interval.hi(), sqf.var()));
  }
  auto chain = sturm_chain(sqf);
  trace.chain_length = chain.size();
  trace.variations_lo = variations(chain, interval.lo(), false);
  trace.variations_hi = variations(chain, interval.hi(), true);
  trace.count = trace.variations_lo - trace.variations_hi + endpoint_roots;
  return trace;
}

std::size_t sturm_count(const UPoly& p, const IntervalQ& interval) { return sturm_trace(p, interval).count; }

std::size_t sturm_count(const Polynomial& p, const IntervalQ& interval) {
  return sturm_count(UPoly::from_polynomial(p), interval);
}

RootReport isolate_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root isolation of the zero polynomial");
  RootReport report;
  if (p.degree() <= 0) return report;
  UPoly sqf = square_free_part(p);
  // Cauchy bound of the monic square-free part, rounded up to a power of two
  Rational bound = 0;
  for (int k = 0; k < sqf.degree(); ++k) bound = std::max(bound, Rational(abs(sqf.coeffs()[static_cast<std::size_t>(k)])));
  bound += 1;
  Rational box = 1;
  while (box <= bound) box *= 2;

  struct Pending {
    Rational lo, hi;
    std::size_t count;
  };
  std::vector<IntervalQ> found;
  std::vector<Pending> stack{{-box, box, sturm_count(sqf, IntervalQ::open(-box, box))}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      found.push_back(IntervalQ::open(cur.lo, cur.hi));
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    if (sqf(mid) == 0) found.push_back(IntervalQ::point(mid));
    stack.push_back({mid, cur.hi, sturm_count(sqf, IntervalQ::open(mid, cur.hi))});
    stack.push_back({cur.lo, mid, sturm_count(sqf, IntervalQ::open(cur.lo, mid))});
  }
  std::sort(found.begin(), found.end(), [](const IntervalQ& a, const IntervalQ& b) { return *a.lo() < *b.lo(); });

  auto decomposition = square_free_decomposition(p);
  for (const auto& interval : found) {
    IsolatedRoot root{interval, 0};
    for (const auto& [factor, m] : decomposition.factors) {
      bool hit = interval.is_point() ? factor(*interval.lo()) == 0 : sturm_count(factor, interval) == 1;
      if (hit) {
        root.multiplicity = m;
        break;
      }
    }
    report.roots.push_back(root);
  }
  report.total_distinct = report.roots.size();
  return report;
}

RootReport isolate_roots(const Polynomial& p) { return isolate_roots(UPoly::from_polynomial(p)); }

IntervalQ refine_root(const UPoly& sqf, IntervalQ interval, const Rational& width) {
  while (!interval.is_point() && *interval.hi() - *interval.lo() > width) {
    Rational lo = *interval.lo();
    Rational hi = *interval.hi();
    Rational mid = (lo + hi) / 2;
    if (sqf(mid) == 0) return IntervalQ::point(mid);
    interval = sturm_count(sqf, IntervalQ::open(lo, mid)) == 1 ? IntervalQ::open(lo, mid) : IntervalQ::open(mid, hi);
  }
  return interval;
}

int compare_root(const UPoly& sqf, const IntervalQ& root, const Rational& q) {
  if (root.is_point()) return cmp(*root.lo(), q) < 0 ? -1 : (*root.lo() == q ? 0 : 1);
  if (q <= *root.lo()) return 1;
  if (q >= *root.hi()) return -1;
  if (sqf(q) == 0) return 0;
  return sturm_count(sqf, IntervalQ::open(*root.lo(), q)) == 1 ? -1 : 1;
}

bool root_in_interval(const UPoly& sqf, const IntervalQ& root, const IntervalQ& interval) {
  if (interval.lo()) {
    int c = compare_root(sqf, root, *interval.lo());
    if (c < 0 || (c == 0 && !interval.lo_closed())) return false;
  }
  if (interval.hi()) {
    int c = compare_root(sqf, root, *interval.hi());
    if (c > 0 || (c == 0 && !interval.hi_closed())) return false;
  }
  return true;
}

std::string to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::StrictlyNegative: return "StrictlyNegative";
    case SignVerdict::StrictlyPositive: return "StrictlyPositive";
    case SignVerdict::NonPositiveZeroMeasure: return "NonPositiveZeroMeasure";
    case SignVerdict::NonNegativeZeroMeasure: return "NonNegativeZeroMeasure";
    case SignVerdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

int verdict_sign(SignVerdict v) {
  switch (v) {
    case SignVerdict::StrictlyNegative:
    case SignVerdict::NonPositiveZeroMeasure: return -1;
    case SignVerdict::StrictlyPositive:
    case SignVerdict::NonNegativeZeroMeasure: return 1;
    case SignVerdict::Indeterminate: return 0;
  }
  return 0;
}

bool verdict_strict(SignVerdict v) { return v == SignVerdict::StrictlyNegative || v == SignVerdict::StrictlyPositive; }

SignVerdict make_verdict(int sign, bool strict) {
  if (sign > 0) return strict ? SignVerdict::StrictlyPositive : SignVerdict::NonNegativeZeroMeasure;
  if (sign < 0) return strict ? SignVerdict::StrictlyNegative : SignVerdict::NonPositiveZeroMeasure;
  return SignVerdict::Indeterminate;
}

SignCertificate certify_sign(const UPoly& p, const IntervalQ& interval, SignMode mode) {
  SignCertificate cert;
  cert.poly = p;
  cert.interval = interval;
  cert.evidence.sample_point = interval.sample();
  if (p.is_zero()) {
    cert.evidence.note = "identically zero";
    return cert;
  }
  cert.evidence.sample_value = p(cert.evidence.sample_point);

  if (mode == SignMode::Strict) {
    cert.evidence.sturm = sturm_trace(p, interval);
    cert.evidence.sturm_polynomial = p.to_string();
    if (cert.evidence.sturm.count != 0) {
      cert.evidence.note = "has " + std::to_string(cert.evidence.sturm.count) + " distinct root(s) in the interval";
      auto report = isolate_roots(p);
      UPoly sqf = square_free_part(p);
      for (const auto& r : report.roots) {
        if (root_in_interval(sqf, r.interval, interval)) cert.evidence.zeros.push_back(r);
      }
      return cert;
    }
    int s = sgn(cert.evidence.sample_value);
    // root-free interval: the sign is constant, and agrees with the leading
    // behaviour on unbounded ends
    if (!interval.hi() && p.sign_at_infinity(true) != s) return cert;
    if (!interval.lo() && p.sign_at_infinity(false) != s) return cert;
    cert.verdict = make_verdict(s, true);
    return cert;
  }

  // zero-measure: the sign can only flip at roots of odd multiplicity
  auto decomposition = square_free_decomposition(p);
  UPoly odd = UPoly::constant(decomposition.content, p.var());
  for (const auto& [factor, m] : decomposition.factors) {
    if (m % 2 == 1) odd = odd * factor;
  }
  cert.evidence.sturm = sturm_trace(odd, interval);
  cert.evidence.sturm_polynomial = odd.to_string();
  UPoly sqf = square_free_part(p);
  if (p.degree() > 0) {
    for (const auto& r : isolate_roots(p).roots) {
      if (root_in_interval(sqf, r.interval, interval)) cert.evidence.zeros.push_back(r);
    }
  }
  if (cert.evidence.sturm.count != 0) {
    cert.evidence.note = "odd-multiplicity root inside the interval: sign changes";
    return cert;
  }
  int s = sgn(odd(cert.evidence.sample_point));
  cert.verdict = make_verdict(s, cert.evidence.zeros.empty());
  if (!cert.evidence.zeros.empty()) {
    cert.evidence.note = "vanishes only at " + std::to_string(cert.evidence.zeros.size()) + " isolated point(s)";
  }
  return cert;
}

RationalFunction discriminant_y(const RationalFunction& V, std::string_view y) {
  if (V.den().depends_on(y)) {
    throw Error(ErrorKind::WrongDegree, "denominator of " + V.to_string() + " depends on " + std::string(y));
  }
  const Polynomial& num = V.num();
  if (num.degree_in(y) != 2) {
    throw Error(ErrorKind::WrongDegree, "expected degree 2 in " + std::string(y) + ", got " +
                                            std::to_string(num.degree_in(y)) + " for " + V.to_string());
  }
  Polynomial a = num.coefficient_in(y, 2);
  Polynomial b = num.coefficient_in(y, 1);
  Polynomial c = num.coefficient_in(y, 0);
  return {b * b - Rational(4) * a * c, V.den() * V.den()};
}

}  // namespace cyclecert
