#include "cyclecert/constructions.hpp"

#include <sstream>

#include "cyclecert/error.hpp"

namespace cyclecert {

namespace {

const RationalFunction kX = RationalFunction::variable("x");
const RationalFunction kY = RationalFunction::variable("y");

RationalFunction rf(const Rational& q) { return RationalFunction(q); }

}  // namespace

Polynomial antiderivative_from_zero(const Polynomial& g) { return g.integral("x"); }

ConstructionResult lienard_v2(const LienardSpec& spec) {
  const RationalFunction& F = spec.F;
  RationalFunction g(spec.g);
  RationalFunction G(antiderivative_from_zero(spec.g));
  RationalFunction dF = F.derivative("x");
  const Rational& s = spec.s;
  const Rational& c0 = spec.c0;
  const Rational& c1 = spec.c1;

  ConstructionResult out;
  out.system = SystemDef{kY - F, -g, {}};
  out.s = s;
  out.V = (rf(s * (s + 1) / 2) * F * F + rf(c1 * s) * F + rf(Rational(2)) * G + rf(c0)) + (rf(s) * F + rf(c1)) * kY +
          kY * kY;
  out.M = rf(-s * (s + 1) * (s + 2) / 2) * F * F * dF - rf(s * (s + 1) * c1) * F * dF - rf(s + 2) * g * F -
          rf(2 * s) * dF * G - rf(s * c0) * dF - rf(c1) * g;
  out.notes = "V_2 with c0 = " + to_string(c0) + ", c1 = " + to_string(c1) + "; M depends on x only";
  return out;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (std::size_t k = c; k < columns; ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

MtRecurrenceResult mt_recurrence(const SystemDef& sys_in, const Rational& s, unsigned n, unsigned degree_cap) {
  SystemDef sys = sys_in.bound();
  if (!sys.P.is_polynomial() || !sys.Q.is_polynomial()) {
    throw Error(ErrorKind::WrongShape, "P and Q must be polynomial");
  }
  const Polynomial& P = sys.P.as_polynomial();
  const Polynomial& Q = sys.Q.as_polynomial();
  if (P.degree_in("y") > 1 || Q.degree_in("y") > 2) {
    throw Error(ErrorKind::WrongShape, "expected x' = p0(x) + p1(x) y, y' = q0(x) + q1(x) y + q2(x) y^2");
  }
  if (P.coefficient_in("y", 1).is_zero()) throw Error(ErrorKind::WrongShape, "p1 vanishes identically");
  if (n == 0) throw Error(ErrorKind::WrongShape, "n must be positive");

  const std::size_t width = degree_cap + 1;
  const std::size_t columns = (n + 1) * width;
  std::vector<Polynomial> basis_v(columns);
  std::vector<Polynomial> basis_m(columns);
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned k = 0; k <= degree_cap; ++k) {
      std::size_t col = i * width + k;
      basis_v[col] = Polynomial::monomial(1, {{"x", k}, {"y", i}});
      basis_m[col] = compute_ms(sys, {RationalFunction(basis_v[col]), s}).as_polynomial();
    }
  }

  MtRecurrenceResult result;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::vector<Rational>> null;
  for (unsigned j = n + 1; j >= 1; --j) {
    std::map<unsigned, std::vector<Rational>> by_power;
    for (std::size_t col = 0; col < columns; ++col) {
      Polynomial cj = basis_m[col].coefficient_in("y", j);
      for (unsigned e = 0; e <= cj.degree_in("x"); ++e) {
        Polynomial ce = cj.coefficient_in("x", e);
        if (ce.is_zero()) continue;
        auto& row = by_power[e];
        if (row.empty()) row.assign(columns, Rational(0));
        row[col] = ce.constant_value();
      }
    }
    for (auto& [e, row] : by_power) rows.push_back(std::move(row));
    null = nullspace(rows, columns);
    bool has_vn = std::any_of(null.begin(), null.end(), [&](const std::vector<Rational>& v) {
      for (std::size_t col = n * width; col < columns; ++col) {
        if (v[col] != 0) return true;
      }
      return false;
    });
    if (!has_vn) {
      result.failed_step = "y^" + std::to_string(j) + " row (v_" + std::to_string(j - 1) + ")";
      return result;
    }
  }

  std::optional<Polynomial> rep;
  for (const auto& v : null) {
    Polynomial V;
    bool vn = false;
    for (std::size_t col = 0; col < columns; ++col) {
      if (v[col] == 0) continue;
      V += basis_v[col] * v[col];
      vn = vn || col >= n * width;
    }
    result.family.push_back(V);
    if (vn && !rep) rep = V;
  }
  result.found = true;
  ConstructionResult cr;
  cr.system = sys;
  cr.V = *rep;
  cr.s = s;
  cr.M = compute_ms(sys, {cr.V, s});
  std::ostringstream notes;
  notes << "ansatz family of dimension " << result.family.size() << " (x-degree <= " << degree_cap
        << ", y-degree <= " << n << "); representative has v_" << n << " != 0";
  cr.notes = notes.str();
  result.representative = cr;
  return result;
}

SecondMethodResult second_method_derive(const Polynomial& h0, const Polynomial& h1, const Polynomial& h2,
                                        const Polynomial& v2) {
  const Rational third(1, 3);
  SecondMethodResult r;
  r.v2 = v2;
  r.v1 = v2.derivative("x") + Rational(2, 3) * v2 * h2;
  r.v0 = Rational(1, 2) * (r.v1.derivative("x") + Rational(4, 3) * v2 * h1 - third * r.v1 * h2);
  r.residual = r.v0.derivative("x") + third * r.v1 * h1 - Rational(4, 3) * h2 * r.v0 + Rational(2) * v2 * h0;
  r.M2 = r.v1 * h0 - Rational(2, 3) * h1 * r.v0;
  Polynomial y = Polynomial::variable("y");
  r.V2 = r.v0 + r.v1 * y + r.v2 * y * y;
  return r;
}

SystemDef kolmogorov_system(const KolmogorovSpec& spec) {
  Polynomial x = Polynomial::variable("x");
  Polynomial y = Polynomial::variable("y");
  return SystemDef{x * (spec.g0 + spec.g1 * y), y * (spec.h0 + spec.h1 * y + spec.h2 * y * y), {}};
}

KolmogorovResult kolmogorov_check(const KolmogorovSpec& spec) {
  if (spec.g1.is_zero()) throw Error(ErrorKind::ZeroG1, "g1 vanishes identically");
  if (!spec.interval.lo() || *spec.interval.lo() < 0) {
    throw Error(ErrorKind::SchemaError, "the interval must lie in (0, inf), got " + spec.interval.to_string());
  }
  Polynomial x = Polynomial::variable("x");
  const Rational& l = spec.lambda;
  KolmogorovResult r;
  r.S = x * (spec.g0.derivative("x") * spec.g1 - spec.g0 * spec.g1.derivative("x")) + l * spec.h0 * spec.g1 -
        Rational(1 + l) * spec.g0 * spec.h1;
  r.T = Rational(2 + l) * spec.h2 * spec.g1;

  Polynomial target;
  if (r.T.is_zero()) {
    target = r.S;
    r.certified_function = "S";
    r.notes = "T vanishes identically; the divergence has the sign of S";
  } else if (r.S.is_zero()) {
    target = r.T;
    r.certified_function = "T";
    r.notes = "S vanishes identically; the divergence has the sign of T y^2";
  } else {
    target = r.S * r.T;
    r.certified_function = "S*T";
  }
  r.certificate = certify_sign(UPoly::from_polynomial(target, "x"), spec.interval, SignMode::ZeroMeasure);
  r.no_periodic_orbits = r.certificate.verdict != SignVerdict::Indeterminate;
  if (r.certified_function == "S*T") {
    // S*T >= 0 is not enough when S and T change sign together: S + T y^2 then
    // changes sign across that vertical line. Both must keep one sign.
    auto cs = certify_sign(UPoly::from_polynomial(r.S, "x"), spec.interval, SignMode::ZeroMeasure);
    auto ct = certify_sign(UPoly::from_polynomial(r.T, "x"), spec.interval, SignMode::ZeroMeasure);
    int ss = verdict_sign(cs.verdict);
    int st = verdict_sign(ct.verdict);
    r.no_periodic_orbits = verdict_sign(r.certificate.verdict) > 0 && ss != 0 && ss == st;
    if (verdict_sign(r.certificate.verdict) > 0 && !r.no_periodic_orbits) {
      r.notes = "S*T >= 0 but S and T change sign together, so S + T y^2 is not one-signed";
    }
  }
  if (r.no_periodic_orbits) {
    r.notes += std::string(r.notes.empty() ? "" : "; ") + "no periodic orbits in " + spec.interval.to_string() +
               " x (0, inf)";
  } else {
    r.notes += std::string(r.notes.empty() ? "" : "; ") + "sign condition not certified";
  }
  return r;
}

MasseraResult massera_check(const Polynomial& f, const Polynomial& g, const IntervalQ& interval) {
  if (g.is_zero() || g.constant_term() != 0) {
    throw Error(ErrorKind::GOriginViolation, "g must vanish at the origin, g = " + g.to_string());
  }
  if (!interval.contains(0)) {
    throw Error(ErrorKind::GOriginViolation, "the interval " + interval.to_string() + " must contain 0");
  }
  UPoly ug = UPoly::from_polynomial(g, "x");
  UPoly gsqf = square_free_part(ug);
  for (const auto& root : isolate_roots(ug).roots) {
    if (root_in_interval(gsqf, root.interval, interval) && compare_root(gsqf, root.interval, 0) != 0) {
      throw Error(ErrorKind::GOriginViolation, "g has a root other than 0 in " + interval.to_string() + " at " +
                                                   root.interval.to_string());
    }
  }

  RationalFunction F(f);
  RationalFunction Gf(g);
  RationalFunction G(antiderivative_from_zero(g));
  RationalFunction two(Rational(2));

  MasseraResult out;
  out.construction.system = SystemDef{kY, -F * kY - Gf, {}};
  out.construction.s = -1;
  out.construction.V = kY * kY + two * G * F / Gf * kY + two * G;
  out.u = F + two * G * (F / Gf).derivative("x");
  out.construction.M = out.u * kY * kY;
  out.construction.notes = "V = y^2 + (2 G f / g) y + 2 G, s = -1";

  const Polynomial& un = out.u.num();
  const Polynomial& ud = out.u.den();
  if (!ud.is_constant()) {
    auto den = certify_sign(UPoly::from_polynomial(ud, "x"), interval, SignMode::Strict);
    if (!verdict_strict(den.verdict)) {
      out.certificate = den;
      out.certificate.verdict = SignVerdict::Indeterminate;
      out.notes = "the denominator of f + 2G(f/g)' vanishes in the interval";
      return out;
    }
  }
  out.certificate = certify_sign(UPoly::from_polynomial(un * ud, "x"), interval, SignMode::ZeroMeasure);
  bool only_origin = true;
  UPoly sqf = un.is_constant() ? UPoly::constant(1) : square_free_part(UPoly::from_polynomial(un, "x"));
  for (const auto& z : out.certificate.evidence.zeros) {
    if (compare_root(sqf, z.interval, 0) != 0) only_origin = false;
  }
  try {
    out.topology = analyze_quadratic_curve(out.construction.V, Region::strip(interval));
  } catch (const Error& e) {
    out.topology.curve_class = CurveClass::Unsupported;
    out.topology.narrative = e.what();
  }
  if (out.certificate.verdict == SignVerdict::Indeterminate) {
    out.notes = "f + 2G(f/g)' changes sign or vanishes identically on " + interval.to_string();
  } else if (!only_origin) {
    out.notes = "f + 2G(f/g)' vanishes away from x = 0 in " + interval.to_string();
  } else {
    out.bound = 1;
    out.notes = "at most one periodic orbit lying entirely in the strip " + interval.to_string() +
                " x R; when it exists it is a hyperbolic limit cycle. Orbits leaving the strip are not covered.";
  }
  return out;
}

std::string to_string(LotkaVolterraOutcome o) {
  switch (o) {
    case LotkaVolterraOutcome::NoLimitCycles: return "NoLimitCycles";
    case LotkaVolterraOutcome::Integrable: return "Integrable";
    case LotkaVolterraOutcome::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

SystemDef lotka_volterra_system(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                const Rational& e, const Rational& f) {
  Polynomial x = Polynomial::variable("x");
  Polynomial y = Polynomial::variable("y");
  return SystemDef{x * (a * x + b * y + Polynomial(c)), y * (d * x + e * y + Polynomial(f)), {}};
}

LotkaVolterraResult lotka_volterra_dulac(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                         const Rational& e, const Rational& f) {
  LotkaVolterraResult r;
  Rational det = a * e - b * d;
  if (det != 0) {
    // a A + d B = -2a - d, b A + e B = -2e - b
    Rational r1 = Rational(-2 * a - d);
    Rational r2 = Rational(-2 * e - b);
    r.A = Rational((r1 * e - d * r2) / det);
    r.B = Rational((a * r2 - b * r1) / det);
    r.R = Rational((a * b * f + c * e * d - a * e * f - a * c * e) / det);
    if (*r.R != 0) {
      r.outcome = LotkaVolterraOutcome::NoLimitCycles;
      r.explanation = "div(x^A y^B X) = R x^A y^B with R = " + to_string(*r.R) +
                      " != 0: no limit cycles in the open quadrant";
    } else {
      r.outcome = LotkaVolterraOutcome::Integrable;
      r.explanation = "R = 0: x^A y^B is an integrating factor, the system is integrable in the open quadrant"
                      " and has no limit cycles";
    }
    return r;
  }
  r.outcome = LotkaVolterraOutcome::Degenerate;
  // ranks of [a b; d e] and [a b c; d e f]
  bool coeff_zero = a == 0 && b == 0 && d == 0 && e == 0;
  bool aug_rank2 = a * f - c * d != 0 || b * f - c * e != 0;
  if (coeff_zero && c == 0 && f == 0) {
    r.explanation = "ae - bd = 0: the trivial system x' = 0, y' = 0, no periodic orbits";
  } else if (coeff_zero || aug_rank2) {
    r.explanation = "ae - bd = 0 and the lines ax + by + c = 0, dx + ey + f = 0 do not meet: critical points lie on"
                    " the axes only, no periodic orbits";
  } else {
    r.explanation = "ae - bd = 0 and the lines coincide: a reparametrization of x' = g x, y' = h y,"
                    " no periodic orbits";
  }
  return r;
}

}  // namespace cyclecert
