#include "cyclecert/dulac.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cyclecert/error.hpp"

namespace cyclecert {

namespace {

// known parameter values are substituted, other symbols stay free
SystemDef partially_bound(const SystemDef& sys) {
  if (sys.params.empty()) return sys;
  return SystemDef{sys.P.bind(sys.params), sys.Q.bind(sys.params), {}};
}

}  // namespace

RationalFunction compute_ms(const SystemDef& system, const DulacCandidate& cand) {
  SystemDef sys = partially_bound(system);
  RationalFunction V = system.params.empty() ? cand.V : cand.V.bind(system.params);
  return V.derivative("x") * sys.P + V.derivative("y") * sys.Q + RationalFunction(cand.s) * sys.divergence() * V;
}

RationalFunction compute_div_dx(const SystemDef& system, const RationalFunction& D) {
  SystemDef sys = partially_bound(system);
  RationalFunction d = system.params.empty() ? D : D.bind(system.params);
  return d.derivative("x") * sys.P + d.derivative("y") * sys.Q + d * sys.divergence();
}

RationalFunction monomial_weight_divergence(const SystemDef& system, const Rational& A, const Rational& B) {
  SystemDef sys = partially_bound(system);
  RationalFunction x = RationalFunction::variable("x");
  RationalFunction y = RationalFunction::variable("y");
  return RationalFunction(A) * sys.P / x + RationalFunction(B) * sys.Q / y + sys.divergence();
}

std::string to_string(BoundKind kind) { return kind == BoundKind::NoCycles ? "NoCycles" : "AtMost"; }

namespace {

void require_xy(const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (v != "x" && v != "y") throw Error(ErrorKind::UnboundParameter, "parameter '" + v + "' has no value");
  }
}

unsigned min_exponent(const Polynomial& p, std::string_view var) {
  const auto& vars = p.vars();
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) return 0;
  auto idx = static_cast<std::size_t>(it - vars.begin());
  unsigned m = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : p.terms()) m = std::min(m, e[idx]);
  return m;
}

SignVerdict product(SignVerdict a, SignVerdict b) {
  int s = verdict_sign(a) * verdict_sign(b);
  return make_verdict(s, verdict_strict(a) && verdict_strict(b));
}

// sum of one-signed terms: strict as soon as one term is strict
SignVerdict sum(const std::vector<SignVerdict>& terms) {
  int s = verdict_sign(terms.front());
  bool strict = false;
  for (auto v : terms) {
    if (verdict_sign(v) != s || s == 0) return SignVerdict::Indeterminate;
    strict = strict || verdict_strict(v);
  }
  return make_verdict(s, strict);
}

std::string zeros_text(const SignCertificate& c) {
  std::string out;
  for (const auto& z : c.evidence.zeros) {
    if (!out.empty()) out += ", ";
    out += c.poly.var() + " " + (z.interval.is_point() ? "= " + to_string(*z.interval.lo()) : "in " + z.interval.to_string());
  }
  return out;
}

// f(x, y) = sum_j u_j(var) other^j; every group one-signed with a common sign
std::optional<TwoVariableSignEvidence> grouped(const Polynomial& f, const std::string& var, const std::string& other,
                                               const IntervalQ& var_extent, const IntervalQ& other_extent) {
  unsigned deg = f.degree_in(other);
  std::vector<std::pair<unsigned, Polynomial>> groups;
  for (unsigned j = 0; j <= deg; ++j) {
    Polynomial u = f.coefficient_in(other, j);
    if (!u.is_zero()) groups.emplace_back(j, u);
  }
  if (groups.size() > 4 || groups.size() < 2) return std::nullopt;
  TwoVariableSignEvidence ev;
  ev.shape = "sum of " + std::to_string(groups.size()) + " terms u_j(" + var + ")*" + other + "^j";
  std::vector<SignVerdict> terms;
  std::vector<std::string> zero_parts;
  for (const auto& [j, u] : groups) {
    SignCertificate cu = certify_sign(UPoly::from_polynomial(u, var), var_extent, SignMode::ZeroMeasure);
    SignVerdict v = cu.verdict;
    std::string label = "term " + other + "^" + std::to_string(j) + ": factor in " + var;
    ev.factors.emplace_back(label, cu);
    if (j > 0) {
      SignCertificate cy = certify_sign(UPoly::monomial(1, j, other), other_extent, SignMode::ZeroMeasure);
      v = product(v, cy.verdict);
      ev.factors.emplace_back("term " + other + "^" + std::to_string(j) + ": " + other + "^" + std::to_string(j), cy);
    }
    terms.push_back(v);
    if (!verdict_strict(v)) {
      std::string z = zeros_text(cu);
      if (j > 0) z += std::string(z.empty() ? "" : ", ") + other + " = 0";
      zero_parts.push_back(z);
    }
  }
  ev.verdict = sum(terms);
  if (ev.verdict == SignVerdict::Indeterminate) {
    ev.note = "terms are not one-signed with a common sign";
  } else if (!verdict_strict(ev.verdict)) {
    // the zero set lies inside the zero set of every summand
    auto best = std::min_element(zero_parts.begin(), zero_parts.end(),
                                 [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
    ev.zero_set = "contained in {" + *best + "}";
  }
  return ev;
}

}  // namespace

TwoVariableSignEvidence certify_two_variable(const Polynomial& f, const Region& region) {
  require_xy(f.vars());
  const IntervalQ Ix = region.x_extent();
  const IntervalQ Iy = region.y_extent();
  TwoVariableSignEvidence ev;
  if (f.is_zero()) {
    ev.shape = "zero";
    ev.note = "identically zero";
    return ev;
  }
  unsigned a = min_exponent(f, "x");
  unsigned b = min_exponent(f, "y");
  Polynomial mono = Polynomial::monomial(1, {{"x", a}, {"y", b}});
  Polynomial rest = *divide_exact(f, mono);

  std::vector<std::string> zero_parts;
  SignVerdict content = SignVerdict::StrictlyPositive;
  if (a > 0) {
    auto c = certify_sign(UPoly::monomial(1, a, "x"), Ix, SignMode::ZeroMeasure);
    content = product(content, c.verdict);
    if (!c.evidence.zeros.empty()) zero_parts.push_back("x = 0");
    ev.factors.emplace_back("content x^" + std::to_string(a), c);
  }
  if (b > 0) {
    auto c = certify_sign(UPoly::monomial(1, b, "y"), Iy, SignMode::ZeroMeasure);
    content = product(content, c.verdict);
    if (!c.evidence.zeros.empty()) zero_parts.push_back("y = 0");
    ev.factors.emplace_back("content y^" + std::to_string(b), c);
  }

  TwoVariableSignEvidence inner;
  if (rest.is_constant()) {
    inner.shape = "constant";
    inner.verdict = make_verdict(sgn(rest.constant_value()), true);
  } else if (!rest.depends_on("y") || !rest.depends_on("x")) {
    std::string var = rest.depends_on("x") ? "x" : "y";
    inner.shape = "univariate in " + var;
    auto c = certify_sign(UPoly::from_polynomial(rest, var), var == "x" ? Ix : Iy, SignMode::ZeroMeasure);
    inner.verdict = c.verdict;
    if (!c.evidence.zeros.empty()) inner.zero_set = "lines " + zeros_text(c);
    if (c.verdict == SignVerdict::Indeterminate) inner.note = c.evidence.note;
    inner.factors.emplace_back("factor in " + var, c);
  } else if (auto W = as_radial(rest)) {
    inner.shape = "radial in u = x^2 + y^2";
    auto c = certify_sign(*W, IntervalQ::above(0, true), SignMode::ZeroMeasure);
    inner.verdict = c.verdict;
    bool circles = std::any_of(c.evidence.zeros.begin(), c.evidence.zeros.end(), [&](const IsolatedRoot& r) {
      return compare_root(square_free_part(*W), r.interval, 0) > 0;
    });
    if (circles) {
      inner.verdict = SignVerdict::Indeterminate;
      inner.note = "vanishes on a circle x^2 + y^2 = const > 0, which may be a periodic orbit";
    } else if (!c.evidence.zeros.empty()) {
      inner.zero_set = "the origin";
    }
    if (c.verdict == SignVerdict::Indeterminate) inner.note = c.evidence.note;
    inner.factors.emplace_back("factor in u", c);
  } else if (auto g = grouped(rest, "x", "y", Ix, Iy)) {
    inner = *g;
  } else if (auto h = grouped(rest, "y", "x", Iy, Ix)) {
    inner = *h;
  } else {
    throw Error(ErrorKind::UnsupportedShape, "cannot certify the sign of " + f.to_string() +
                                                 ": not univariate, radial, or a sum of at most 4 separable terms");
  }

  ev.shape = (a > 0 || b > 0) ? mono.to_string() + " * (" + inner.shape + ")" : inner.shape;
  ev.verdict = product(content, inner.verdict);
  for (auto& fac : inner.factors) ev.factors.push_back(std::move(fac));
  ev.note = inner.note;
  if (!inner.zero_set.empty()) zero_parts.push_back(inner.zero_set);
  if (ev.verdict != SignVerdict::Indeterminate && !verdict_strict(ev.verdict)) {
    std::string z;
    for (const auto& part : zero_parts) z += (z.empty() ? "" : "; ") + part;
    ev.zero_set = z;
  }
  return ev;
}

TwoVariableSignEvidence certify_two_variable(const RationalFunction& f, const Region& region) {
  TwoVariableSignEvidence num = certify_two_variable(f.num(), region);
  if (f.den().is_constant()) return num;
  TwoVariableSignEvidence den = certify_two_variable(f.den(), region);
  TwoVariableSignEvidence ev = num;
  ev.shape = "(" + num.shape + ") / (" + den.shape + ")";
  for (auto& fac : den.factors) ev.factors.emplace_back("denominator " + fac.first, fac.second);
  if (!verdict_strict(den.verdict)) {
    ev.verdict = SignVerdict::Indeterminate;
    ev.note = "denominator " + f.den().to_string() + " is not certified nonvanishing on the region";
    return ev;
  }
  ev.verdict = product(num.verdict, den.verdict);
  return ev;
}

DulacCertificate certify_direct(const SystemDef& sys_in, const DulacCandidate& cand_in, const Region& region) {
  SystemDef sys = sys_in.bound();
  DulacCandidate cand{bind_params(cand_in.V, sys_in.params), cand_in.s};
  if (cand.V.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "candidate V is identically zero");

  DulacCertificate cert;
  cert.candidate = cand;
  cert.region = region;
  cert.m_s = compute_ms(sys, cand);
  cert.topology.ell_region = region_ell(region);
  if (cert.m_s.is_zero()) {
    cert.sign.shape = "zero";
    cert.sign.note = "M_s vanishes identically; no Dulac certificate";
    return cert;
  }
  cert.sign = certify_two_variable(cert.m_s, region);
  if (cert.sign.verdict == SignVerdict::Indeterminate) return cert;

  // D = |V|^(1/s) needs a one-signed denominator of V
  if (!cand.V.den().is_constant()) {
    auto den = certify_two_variable(cand.V.den(), region);
    if (!verdict_strict(den.verdict)) {
      cert.sign.verdict = SignVerdict::Indeterminate;
      cert.sign.note = "denominator of V vanishes in the region";
      return cert;
    }
  }

  // topology of {V = 0}
  std::optional<int> v_sign_outside;
  std::string topology_error;
  const Polynomial& vn = cand.V.num();
  try {
    if (vn.degree_in("y") == 2) {
      cert.topology = analyze_quadratic_curve(cand.V, region);
      if (cert.topology.curve_class == CurveClass::QuadraticInY) {
        UPoly a = UPoly::from_polynomial(vn.coefficient_in("y", 2), "x");
        v_sign_outside = sgn(a(region.x_extent().sample()));
      }
    } else if (auto W = as_radial(vn)) {
      UPoly w = W->renamed("r").compose_square();
      if (w.degree() > 0) {
        cert.topology = analyze_radial(w);
        v_sign_outside = W->sign_at_infinity(true);
      } else {
        cert.topology.curve_class = CurveClass::Radial;
        cert.topology.narrative = "V is a nonzero constant: {V = 0} is empty";
        v_sign_outside = sgn(W->coeff(0));
      }
      if (region.kind() != Region::Kind::Plane) {
        cert.topology.narrative += " Counted in the whole plane, an upper bound for the region.";
      }
    } else {
      cert.topology.curve_class = CurveClass::Unsupported;
      cert.topology.narrative = "V is neither quadratic in y nor radial";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotMonic && e.kind() != ErrorKind::WrongDegree) throw;
    cert.topology.curve_class = CurveClass::Unsupported;
    cert.topology.narrative = e.what();
  }
  cert.topology.ell_region = region_ell(region);

  if (cand.s < 0 && cert.topology.curve_class == CurveClass::Unsupported) {
    throw Error(ErrorKind::TopologyUnsupported, "s < 0 needs l(W,V), but " + cert.topology.narrative);
  }

  if (cand.s > 0) {
    cert.cycles_outside = cert.topology.ell_region;
  } else if (cand.s == 0) {
    cert.cycles_outside = 0;
  } else {
    cert.cycles_outside = cert.topology.ell_curve;
  }
  // an invariant oval inside {V=0} would make M_s vanish along it, but the
  // certified zero set of M_s is made of lines and points
  cert.cycles_on_curve = 0;
  cert.bound = cert.cycles_outside + cert.cycles_on_curve;
  cert.bound_kind = *cert.bound == 0 ? BoundKind::NoCycles : BoundKind::AtMost;

  std::ostringstream note;
  if (*cert.bound == 0) {
    note << "no limit cycles in the " << region.describe() << ".";
  } else {
    int den_sign = sgn(cand.V.den().leading_coefficient());
    if (!cand.V.den().is_constant()) {
      Rational x0 = region.x_extent().sample();
      Rational y0 = region.y_extent().sample();
      den_sign = sgn(cand.V.den().evaluate({{"x", x0}, {"y", y0}}));
    }
    int s_sign = sgn(cand.s);
    int dm = v_sign_outside.value_or(0) * den_sign * s_sign * verdict_sign(cert.sign.verdict);
    std::string where = "the bounded components of {V = 0}, surrounding them";
    if (auto W = as_radial(vn); W && W->degree() == 1) {
      Rational rho = -W->coeff(0) / W->coeff(1);
      if (rho > 0) where = rho == 1 ? "the unit circle" : "the circle x^2 + y^2 = " + to_string(rho);
    }
    note << "any limit cycle lies outside " << where << ", and is hyperbolic";
    if (dm < 0) {
      note << " and stable (div(DX) < 0 there).";
    } else if (dm > 0) {
      note << " and unstable (div(DX) > 0 there).";
    } else {
      note << ".";
    }
    note << " Existence is not asserted.";
  }
  cert.stability_note = note.str();
  return cert;
}

}  // namespace cyclecert
