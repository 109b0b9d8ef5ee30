#include "cyclecert/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "cyclecert/constructions.hpp"
#include "cyclecert/dulac.hpp"
#include "cyclecert/error.hpp"
#include "cyclecert/parser.hpp"
#include "cyclecert/polar.hpp"

namespace cyclecert {

using json = nlohmann::ordered_json;

namespace {

// ---- argument access -------------------------------------------------------

struct Args {
  const ProblemSpec& spec;

  bool has(const std::string& key) const { return spec.args.count(key) > 0; }
  const std::string& text(const std::string& key) const { return spec.args.at(key); }

  RationalFunction expr(const std::string& key, const std::vector<std::string>& vars) const {
    return parse_expression(text(key), vars, spec.param_names()).bind(spec.system.params);
  }
  RationalFunction expr_xy(const std::string& key) const { return expr(key, {"x", "y"}); }
  Polynomial poly_x(const std::string& key) const {
    RationalFunction f = expr(key, {"x"});
    if (!f.is_polynomial()) throw Error(ErrorKind::NotPolynomial, "'" + key + "' must be a polynomial in x");
    return f.as_polynomial();
  }
  Rational constant(const std::string& key) const {
    RationalFunction f = expr(key, {});
    if (!f.is_constant()) throw Error(ErrorKind::UnboundParameter, "'" + key + "' does not evaluate to a number");
    return f.evaluate({});
  }
  unsigned count(const std::string& key) const { return static_cast<unsigned>(std::stoul(text(key))); }
  Region region() const { return has("region") ? parse_region(text("region")) : Region::plane(); }
  IntervalQ interval(const IntervalQ& fallback) const {
    return has("interval") ? parse_interval(text("interval")) : fallback;
  }
};

// ---- serialization ---------------------------------------------------------

json j_roots(const std::vector<IsolatedRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back({{"interval", r.interval.to_string()}, {"multiplicity", r.multiplicity}});
  return out;
}

json j_sign(const SignCertificate& c) {
  return {
      {"polynomial", c.poly.to_string()},
      {"interval", c.interval.to_string()},
      {"verdict", to_string(c.verdict)},
      {"sturm",
       {{"polynomial", c.evidence.sturm_polynomial},
        {"chain_length", c.evidence.sturm.chain_length},
        {"variations_lo", c.evidence.sturm.variations_lo},
        {"variations_hi", c.evidence.sturm.variations_hi},
        {"roots_in_interval", c.evidence.sturm.count}}},
      {"sample_point", to_string(c.evidence.sample_point)},
      {"sample_value", to_string(c.evidence.sample_value)},
      {"zeros", j_roots(c.evidence.zeros)},
      {"note", c.evidence.note},
  };
}

json j_two_variable(const TwoVariableSignEvidence& e) {
  json factors = json::array();
  for (const auto& [label, cert] : e.factors) {
    json f = j_sign(cert);
    f["label"] = label;
    factors.push_back(std::move(f));
  }
  return {{"shape", e.shape}, {"verdict", to_string(e.verdict)}, {"zero_set", e.zero_set}, {"note", e.note},
          {"factors", factors}};
}

json j_topology(const CurveTopologyReport& t) {
  json singular = json::array();
  for (const auto& s : t.singular_points) singular.push_back(s.to_string());
  return {
      {"curve_class", to_string(t.curve_class)},
      {"bounded_components", t.bounded_components},
      {"smooth_ovals", t.smooth_ovals},
      {"isolated_points", t.isolated_points},
      {"unbounded_branches", t.unbounded_branches},
      {"singular_points", singular},
      {"ell_region", t.ell_region},
      {"ell_curve", t.ell_curve},
      {"boundary_contact", t.boundary_contact},
      {"narrative", t.narrative},
  };
}

json j_system(const SystemDef& sys) { return {{"P", sys.P.to_string()}, {"Q", sys.Q.to_string()}}; }

json j_bound(const std::optional<int>& bound) { return bound ? json(*bound) : json(nullptr); }

json j_dulac(const DulacCertificate& c) {
  return {
      {"V", c.candidate.V.to_string()},
      {"s", to_string(c.candidate.s)},
      {"region", c.region.describe()},
      {"M_s", c.m_s.to_string()},
      {"sign", j_two_variable(c.sign)},
      {"topology", j_topology(c.topology)},
      {"bound", j_bound(c.bound)},
      {"bound_kind", c.bound_kind ? json(to_string(*c.bound_kind)) : json(nullptr)},
      {"cycles_outside_curve", c.cycles_outside},
      {"cycles_on_curve", c.cycles_on_curve},
      {"stability_note", c.stability_note},
  };
}

json j_polar(const PolarCertificate& c) {
  json mu = json::object();
  for (const auto& [i, v] : c.mu) mu["r^" + std::to_string(i)] = to_string(v);
  return {
      {"s", to_string(c.s)},
      {"p", c.p.to_string()},
      {"w", c.w.to_string()},
      {"d", c.d},
      {"n_plus", c.n_plus},
      {"M", c.M.to_string()},
      {"mu", mu},
      {"phi", c.phi.to_string()},
      {"phi_sign", j_sign(c.phi_sign)},
      {"bound", j_bound(c.bound)},
      {"note", c.note},
      {"lower_bound_note", c.lower_bound_note},
  };
}

json j_construction(const ConstructionResult& c) {
  return {{"system", j_system(c.system)}, {"V", c.V.to_string()},     {"s", to_string(c.s)},
          {"M", c.M.to_string()},         {"cofactor", c.cofactor.to_string()}, {"notes", c.notes}};
}

std::string plural(int k) { return k == 1 ? "limit cycle" : "limit cycles"; }

// Fills status, bound and summary from a Dulac certificate.
void adopt_dulac(Report& rep, const DulacCertificate& c, const std::string& label) {
  rep.certificate["dulac"] = j_dulac(c);
  rep.curve = c.candidate.V;
  std::ostringstream sum;
  if (c.certified()) {
    rep.status = ReportStatus::Certified;
    rep.bound = c.bound;
    rep.bound_kind = to_string(*c.bound_kind);
    if (*c.bound == 0) {
      sum << "certified: no limit cycles in the " << c.region.describe();
    } else {
      sum << "certified: at most " << *c.bound << " " << plural(*c.bound) << " in the " << c.region.describe();
    }
    sum << " (" << label << ", s = " << to_string(c.candidate.s) << ", M_s " << to_string(c.sign.verdict) << ")";
    if (!c.stability_note.empty()) sum << "\n" << c.stability_note;
  } else {
    rep.status = ReportStatus::Inconclusive;
    sum << "inconclusive: M_s = " << c.m_s.to_string() << " could not be certified one-signed ("
        << to_string(c.sign.verdict) << ")";
    if (!c.sign.note.empty()) sum << "\n" << c.sign.note;
  }
  rep.human_summary = sum.str();
}

// A construction that produced a candidate but whose Dulac step raised.
void adopt_dulac_failure(Report& rep, const Error& e) {
  rep.status = ReportStatus::Inconclusive;
  rep.certificate["dulac_error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  rep.human_summary = std::string("inconclusive: candidate built but not certifiable: ") + e.what();
}

void run_direct(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  DulacCandidate cand{a.expr_xy("V"), a.constant("s")};
  rep.certificate["system"] = j_system(spec.system.bound());
  adopt_dulac(rep, certify_direct(spec.system, cand, a.region()), "direct Dulac candidate");
}

void run_polar(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  bool unique = a.has("unique_critical_point") && a.text("unique_critical_point") == "true";
  rep.certificate["system"] = j_system(spec.system.bound());
  PolarCertificate c = certify_polar(spec.system, a.constant("s"), unique);
  rep.certificate["polar"] = j_polar(c);
  // W(x^2 + y^2) with W(u) = u p'(u)
  UPoly W = UPoly::monomial(1, 1, "u") * c.p.renamed("u").derivative();
  Polynomial u = Polynomial::variable("x").pow(2) + Polynomial::variable("y").pow(2);
  rep.curve = RationalFunction(W.to_polynomial().substitute({{"u", u}}));
  std::ostringstream sum;
  if (c.certified()) {
    rep.status = ReportStatus::Certified;
    rep.bound = c.bound;
    rep.bound_kind = *c.bound == 0 ? "NoCycles" : "AtMost";
    sum << "certified: at most " << *c.bound << " " << plural(*c.bound) << " in the plane (polar method, s = "
        << to_string(c.s) << ", N+ = " << c.n_plus << ")\n"
        << c.note;
    if (!c.lower_bound_note.empty()) sum << "\n" << c.lower_bound_note;
  } else {
    rep.status = ReportStatus::Inconclusive;
    sum << "inconclusive: Phi(r) = " << c.phi.to_string() << " is not certified one-signed on (0, inf) ("
        << to_string(c.phi_sign.verdict) << ")\n"
        << c.note;
  }
  rep.human_summary = sum.str();
}

void run_lienard(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  LienardSpec ls{a.expr("F", {"x"}), a.poly_x("g"), a.constant("s")};
  if (a.has("c0")) ls.c0 = a.constant("c0");
  if (a.has("c1")) ls.c1 = a.constant("c1");
  ConstructionResult c = lienard_v2(ls);
  rep.certificate["construction"] = j_construction(c);
  rep.certificate["discriminant_y"] = discriminant_y(c.V).to_string();
  try {
    adopt_dulac(rep, certify_direct(c.system, {c.V, c.s}, a.region()), "Lienard V_2");
  } catch (const Error& e) {
    adopt_dulac_failure(rep, e);
  }
}

void run_kolmogorov(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  KolmogorovSpec ks{a.poly_x("g0"), a.poly_x("g1"), a.poly_x("h0"), a.poly_x("h1"), a.poly_x("h2"),
                    a.constant("lambda"), a.interval(IntervalQ::above(0))};
  KolmogorovResult r = kolmogorov_check(ks);
  rep.certificate["system"] = j_system(kolmogorov_system(ks));
  rep.certificate["kolmogorov"] = {
      {"lambda", to_string(ks.lambda)},
      {"interval", ks.interval.to_string()},
      {"S", r.S.to_string()},
      {"T", r.T.to_string()},
      {"certified_function", r.certified_function},
      {"sign", j_sign(r.certificate)},
      {"no_periodic_orbits", r.no_periodic_orbits},
      {"notes", r.notes},
  };
  std::string strip = "strip " + ks.interval.to_string() + " x (0, inf)";
  if (r.no_periodic_orbits) {
    rep.status = ReportStatus::Certified;
    rep.bound = 0;
    rep.bound_kind = "NoCycles";
    rep.human_summary = "certified: no periodic orbits in the " + strip + " (" + r.certified_function + " is " +
                        to_string(r.certificate.verdict) + ")";
  } else {
    rep.status = ReportStatus::Inconclusive;
    rep.human_summary = "inconclusive: " + r.notes;
  }
}

void run_massera(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  IntervalQ interval = a.interval(IntervalQ::real_line());
  MasseraResult r = massera_check(a.poly_x("f"), a.poly_x("g"), interval);
  rep.curve = r.construction.V;
  rep.certificate["construction"] = j_construction(r.construction);
  rep.certificate["massera"] = {
      {"interval", interval.to_string()}, {"u", r.u.to_string()}, {"sign", j_sign(r.certificate)},
      {"topology", j_topology(r.topology)}, {"bound", j_bound(r.bound)}, {"notes", r.notes},
  };
  if (r.bound) {
    rep.status = ReportStatus::Certified;
    rep.bound = r.bound;
    rep.bound_kind = *r.bound == 0 ? "NoCycles" : "AtMost";
    rep.human_summary = "certified: at most " + std::to_string(*r.bound) +
                        " periodic orbit lying entirely in the strip " + interval.to_string() + " x R\n" + r.notes;
  } else {
    rep.status = ReportStatus::Inconclusive;
    rep.human_summary = "inconclusive: " + r.notes;
  }
}

void run_lotka_volterra(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  Rational c[6];
  const char* keys[6] = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 6; ++i) c[i] = a.constant(keys[i]);
  LotkaVolterraResult r = lotka_volterra_dulac(c[0], c[1], c[2], c[3], c[4], c[5]);
  auto opt = [](const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); };
  rep.certificate["system"] = j_system(lotka_volterra_system(c[0], c[1], c[2], c[3], c[4], c[5]));
  rep.certificate["lotka_volterra"] = {{"outcome", to_string(r.outcome)},
                                       {"A", opt(r.A)},
                                       {"B", opt(r.B)},
                                       {"R", opt(r.R)},
                                       {"explanation", r.explanation}};
  rep.status = ReportStatus::Certified;
  rep.bound = 0;
  rep.bound_kind = "NoCycles";
  rep.human_summary = "certified: no limit cycles in the open quadrant (+, +)\n" + r.explanation;
}

void run_mt_recurrence(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  MtRecurrenceResult r = mt_recurrence(spec.system, a.constant("s"), a.count("n"), a.count("degree_cap"));
  json family = json::array();
  for (const auto& v : r.family) family.push_back(v.to_string());
  rep.certificate["system"] = j_system(spec.system.bound());
  rep.certificate["recurrence"] = {{"found", r.found}, {"failed_step", r.failed_step}, {"family", family}};
  if (!r.found || !r.representative) {
    rep.status = ReportStatus::Inconclusive;
    rep.human_summary = "inconclusive: no polynomial ansatz solution (" + r.failed_step + ")";
    return;
  }
  rep.certificate["construction"] = j_construction(*r.representative);
  try {
    adopt_dulac(rep, certify_direct(r.representative->system, {r.representative->V, r.representative->s}, a.region()),
                "recurrence candidate");
  } catch (const Error& e) {
    adopt_dulac_failure(rep, e);
  }
}

void run_second_method(Report& rep, const ProblemSpec& spec) {
  Args a{spec};
  Polynomial h0 = a.poly_x("h0");
  Polynomial h1 = a.poly_x("h1");
  Polynomial h2 = a.poly_x("h2");
  SecondMethodResult r = second_method_derive(h0, h1, h2, a.poly_x("v2"));
  Polynomial y = Polynomial::variable("y");
  SystemDef sys{y, h0 + h1 * y + h2 * y * y + y.pow(3), {}};
  rep.certificate["system"] = j_system(sys);
  rep.certificate["second_method"] = {{"v0", r.v0.to_string()},
                                      {"v1", r.v1.to_string()},
                                      {"v2", r.v2.to_string()},
                                      {"V", r.V2.to_string()},
                                      {"M2", r.M2.to_string()},
                                      {"residual", r.residual.to_string()}};
  rep.curve = RationalFunction(r.V2);
  if (!r.residual.is_zero()) {
    rep.status = ReportStatus::Inconclusive;
    rep.human_summary = "inconclusive: the y-coefficient residual " + r.residual.to_string() + " is not zero";
    return;
  }
  try {
    adopt_dulac(rep, certify_direct(sys, {RationalFunction(r.V2), Rational(-2, 3)}, a.region()), "second-method V_2");
  } catch (const Error& e) {
    adopt_dulac_failure(rep, e);
  }
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

// p(x, y) as a polynomial in y with coefficients in x; row(y0) gives p(., y0).
struct UPolyGrid {
  std::vector<UPoly> coeffs;
  explicit UPolyGrid(const Polynomial& p) {
    for (unsigned k = 0; k <= p.degree_in("y"); ++k) coeffs.push_back(UPoly::from_polynomial(p.coefficient_in("y", k), "x"));
  }
  UPoly row(const Rational& y) const {
    UPoly out;
    Rational power = 1;
    for (const auto& c : coeffs) {
      out += c * power;
      power *= y;
    }
    return out;
  }
};

}  // namespace

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Certified:
      return "certified";
    case ReportStatus::Inconclusive:
      return "inconclusive";
    case ReportStatus::Error:
      return "error";
  }
  return "error";
}

int Report::exit_code_hint() const {
  switch (status) {
    case ReportStatus::Certified:
      return 0;
    case ReportStatus::Inconclusive:
      return 2;
    case ReportStatus::Error:
      return 1;
  }
  return 1;
}

json Report::to_json() const {
  return {
      {"schema_version", kReportSchemaVersion},
      {"tool_version", kToolVersion},
      {"method", method},
      {"status", to_string(status)},
      {"bound", j_bound(bound)},
      {"bound_kind", bound_kind.empty() ? json(nullptr) : json(bound_kind)},
      {"certificate", certificate},
      {"human_summary", human_summary},
      {"exit_code_hint", exit_code_hint()},
  };
}

Report run_certificate(const ProblemSpec& spec) {
  Report rep;
  rep.method = spec.method;
  json params = json::object();
  for (const auto& [k, v] : spec.system.params) params[k] = to_string(v);
  rep.certificate["params"] = params;
  try {
    if (spec.method == "direct") {
      run_direct(rep, spec);
    } else if (spec.method == "polar") {
      run_polar(rep, spec);
    } else if (spec.method == "lienard") {
      run_lienard(rep, spec);
    } else if (spec.method == "kolmogorov") {
      run_kolmogorov(rep, spec);
    } else if (spec.method == "massera") {
      run_massera(rep, spec);
    } else if (spec.method == "lotka-volterra") {
      run_lotka_volterra(rep, spec);
    } else if (spec.method == "mt-recurrence") {
      run_mt_recurrence(rep, spec);
    } else if (spec.method == "second-method") {
      run_second_method(rep, spec);
    } else {
      throw Error(ErrorKind::SchemaError, "unknown method '" + spec.method + "'");
    }
  } catch (const Error& e) {
    rep.status = ReportStatus::Error;
    rep.bound.reset();
    rep.bound_kind.clear();
    rep.certificate["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    rep.human_summary = std::string("error: ") + e.what();
  }
  // soundness guard: no bound without certified status and vice versa
  if (rep.status != ReportStatus::Certified) {
    rep.bound.reset();
    rep.bound_kind.clear();
  } else if (!rep.bound) {
    rep.status = ReportStatus::Inconclusive;
  }
  return rep;
}

void export_curve_samples(const RationalFunction& V_in, const Window& w, int resolution,
                          const std::filesystem::path& path) {
  if (resolution < 2) throw Error(ErrorKind::SchemaError, "resolution must be at least 2");
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw Error(ErrorKind::SchemaError, "empty sampling window");
  for (const auto& v : V_in.vars()) {
    if (v != "x" && v != "y") throw Error(ErrorKind::UnboundParameter, "V still depends on '" + v + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOError, "cannot write '" + path.string() + "'");

  // grid coordinates and signs are exact; only the printed coordinates are rounded
  const int n = resolution;
  std::vector<Rational> gx(n), gy(n);
  std::vector<double> dx(n), dy(n);
  for (int i = 0; i < n; ++i) {
    gx[i] = Rational(w.x0 + (w.x1 - w.x0) * i / (n - 1));
    gy[i] = Rational(w.y0 + (w.y1 - w.y0) * i / (n - 1));
    dx[i] = to_double(gx[i]);
    dy[i] = to_double(gy[i]);
  }
  auto xs = [&](int i) { return dx[i]; };
  auto ys = [&](int j) { return dy[j]; };
  std::vector<int> sign(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> int& { return sign[static_cast<std::size_t>(j) * n + i]; };
  UPolyGrid num(V_in.num()), den(V_in.den());
  for (int j = 0; j < n; ++j) {
    auto nrow = num.row(gy[j]);
    auto drow = den.row(gy[j]);
    for (int i = 0; i < n; ++i) at(i, j) = cyclecert::sign(nrow(gx[i])) * cyclecert::sign(drow(gx[i]));
  }

  out << "# cyclecert curve samples: floating-point sampling, NOT a certificate\n";
  out << "# V = " << V_in.to_string() << "\n";
  out << "kind,x,y,sign\n";
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) out << "grid," << fmt_double(xs(i)) << "," << fmt_double(ys(j)) << "," << at(i, j) << "\n";
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n && at(i, j) * at(i + 1, j) < 0) {
        out << "crossing," << fmt_double((xs(i) + xs(i + 1)) / 2) << "," << fmt_double(ys(j)) << ",0\n";
      }
      if (j + 1 < n && at(i, j) * at(i, j + 1) < 0) {
        out << "crossing," << fmt_double(xs(i)) << "," << fmt_double((ys(j) + ys(j + 1)) / 2) << ",0\n";
      }
    }
  }
  if (!out) throw Error(ErrorKind::IOError, "write failed for '" + path.string() + "'");
}

}  // namespace cyclecert
