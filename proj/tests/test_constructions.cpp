#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "cyclecert/constructions.hpp"
#include "cyclecert/error.hpp"

using namespace cyclecert;
using namespace testing_support;

namespace {

Polynomial px(const std::string& text) { return poly(text); }

// whether V is a linear combination of the family, by exact elimination
bool in_span(const std::vector<Polynomial>& family, const Polynomial& V) {
  std::vector<Exponents> monos;
  auto index_of = [&](const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      // coordinates in (x, y) order regardless of which variables p carries
      Exponents full{0, 0};
      for (std::size_t i = 0; i < p.vars().size(); ++i) full[p.vars()[i] == "x" ? 0 : 1] = e[i];
      if (std::find(monos.begin(), monos.end(), full) == monos.end()) monos.push_back(full);
    }
  };
  for (const auto& f : family) index_of(f);
  index_of(V);
  auto coords = [&](const Polynomial& p) {
    std::vector<Rational> out(monos.size(), Rational(0));
    for (std::size_t m = 0; m < monos.size(); ++m) {
      out[m] = p.coefficient_in("x", monos[m][0]).coefficient_in("y", monos[m][1]).constant_term();
    }
    return out;
  };
  // columns: family members then V; rows: monomials
  std::size_t cols = family.size() + 1;
  std::vector<std::vector<Rational>> rows(monos.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    auto c = coords(j < family.size() ? family[j] : V);
    for (std::size_t m = 0; m < monos.size(); ++m) rows[m][j] = c[m];
  }
  for (const auto& v : nullspace(rows, cols)) {
    if (v.back() != 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("lienard_v2 examples") {
  LienardSpec rational_f{rf("x*(1 - x^2)/(1 + x^2)"), px("x"), -1};
  auto r = lienard_v2(rational_f);
  CHECK(r.V == rf("y^2 - x*(1 - x^2)/(1 + x^2)*y + x^2"));
  CHECK(r.M == rf("-4*x^4/(1 + x^2)^2"));
  CHECK(compute_ms(r.system, {r.V, r.s}) == r.M);
  CHECK(discriminant_y(r.V) == rf("-x^2*(x^2 + 3)*(3*x^2 + 1)/(1 + x^2)^2"));
  auto cert = certify_direct(r.system, {r.V, r.s}, Region::plane());
  REQUIRE(cert.certified());
  CHECK(*cert.bound == 1);

  auto center = lienard_v2({RationalFunction(), px("x"), frac(-3, 2)});
  CHECK(center.V == rf("x^2 + y^2"));
  CHECK(center.M.is_zero());

  auto cubic = lienard_v2({rf("x^3 - x"), px("x"), -1});
  CHECK(cubic.M == rf("2*x^4"));
  CHECK(antiderivative_from_zero(px("3*x^2 + 2")) == px("x^3 + 2*x"));
}

TEST_CASE("property: lienard_v2 construction consistency") {
  Rng rng(5001);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction F(rng.polynomial({"x"}, 4), rng.polynomial({"x"}, 2) + Polynomial(Rational(7)));
    Polynomial g = rng.polynomial({"x"}, 3);
    LienardSpec spec{F, g, rng.rational(), rng.rational(), rng.rational()};
    auto r = lienard_v2(spec);
    RationalFunction m = compute_ms(r.system, {r.V, r.s});
    CHECK(m == r.M * r.cofactor);
    CHECK(!r.M.depends_on("y"));
    CHECK(r.system.P == rf("y") - F);
  }
}

TEST_CASE("mt_recurrence examples") {
  // van der Pol in Lienard form
  SystemDef vdp{rf("y - (x^3/3 - x)"), rf("-x"), {}};
  auto found = mt_recurrence(vdp, -1, 2, 6);
  REQUIRE(found.found);
  REQUIRE(found.representative.has_value());
  CHECK(!found.representative->M.depends_on("y"));
  CHECK(compute_ms(vdp, {found.representative->V, -1}) == found.representative->M);
  for (const auto& V : found.family) CHECK(!compute_ms(vdp, {V, -1}).depends_on("y"));
  for (Rational c0 : {Rational(0), Rational(5)}) {
    for (Rational c1 : {Rational(0), frac(-1, 2)}) {
      auto l = lienard_v2({rf("x^3/3 - x"), px("x"), -1, c0, c1});
      CHECK(in_span(found.family, l.V.as_polynomial()));
    }
  }

  SystemDef linear{rf("y"), rf("-x"), {}};
  auto lin = mt_recurrence(linear, frac(7, 3), 2, 4);
  REQUIRE(lin.found);
  CHECK(in_span(lin.family, px("x^2 + y^2")));
  CHECK(compute_ms(linear, {rf("x^2 + y^2"), frac(7, 3)}).is_zero());

  CHECK_THROWS_AS(mt_recurrence(SystemDef{rf("y^2"), rf("x"), {}}, -1, 2, 4), Error);
  CHECK_THROWS_AS(mt_recurrence(SystemDef{rf("x"), rf("y"), {}}, -1, 2, 4), Error);
  CHECK_THROWS_AS(mt_recurrence(SystemDef{rf("y/(1+x^2)"), rf("x"), {}}, -1, 2, 4), Error);
}

TEST_CASE("mt_recurrence reports NotFound") {
  SystemDef sys{rf("(1 + x^2)*y"), rf("-x - y^2"), {}};
  auto r = mt_recurrence(sys, -1, 2, 8);
  CHECK(!r.found);
  CHECK(!r.representative.has_value());
  CHECK(r.failed_step.find("row") != std::string::npos);
}

TEST_CASE("second_method_derive examples") {
  Polynomial zero;
  auto t1 = second_method_derive(zero, zero, zero, px("1"));
  CHECK(t1.v1.is_zero());
  CHECK(t1.v0.is_zero());
  CHECK(t1.M2.is_zero());
  CHECK(t1.residual.is_zero());
  auto t2 = second_method_derive(zero, zero, zero, px("x"));
  CHECK(t2.v1 == px("1"));
  CHECK(t2.v0.is_zero());
  CHECK(t2.M2.is_zero());
  CHECK(t2.residual.is_zero());
  auto t3 = second_method_derive(px("1"), zero, px("x"), px("1"));
  CHECK(t3.v1 == px("2*x/3"));
  CHECK(t3.v0 == px("1/3 - x^2/9"));
  CHECK(t3.M2 == px("2*x/3"));
  CHECK(t3.residual == px("2 - 2*x/3 + 4*x^3/27"));
}

TEST_CASE("property: second method matches the full expansion") {
  Rng rng(5002);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial h0 = rng.polynomial({"x"}, 3);
    Polynomial h1 = rng.polynomial({"x"}, 2);
    Polynomial h2 = rng.polynomial({"x"}, 2);
    Polynomial v2 = rng.polynomial({"x"}, 3);
    auto r = second_method_derive(h0, h1, h2, v2);
    Polynomial y = Polynomial::variable("y");
    SystemDef sys{RationalFunction(y), RationalFunction(h0 + h1 * y + h2 * y * y + y * y * y), {}};
    RationalFunction m = compute_ms(sys, {RationalFunction(r.V2), frac(-2, 3)});
    CHECK(m == RationalFunction(r.M2 + r.residual * y));
  }
}

TEST_CASE("kolmogorov_check examples") {
  const Rational a = 2, b = 3, c = -1, d = 1, e = frac(1, 2), f = 4, l = frac(1, 3);
  KolmogorovSpec lv{Polynomial(c) + a * px("x"), Polynomial(b), Polynomial(f) + d * px("x"), Polynomial(e), Polynomial(),
                    l};
  auto r = kolmogorov_check(lv);
  CHECK(r.T.is_zero());
  CHECK(r.S == a * b * px("x") + l * (Polynomial(f) + d * px("x")) * b - Rational(1 + l) * (Polynomial(c) + a * px("x")) * e);
  CHECK(r.certified_function == "S");

  KolmogorovSpec both_zero{Polynomial(), Polynomial(1), Polynomial(1), Polynomial(), Polynomial(), 0};
  auto z = kolmogorov_check(both_zero);
  CHECK(z.S.is_zero());
  CHECK(z.T.is_zero());
  CHECK(z.certificate.verdict == SignVerdict::Indeterminate);
  CHECK(!z.no_periodic_orbits);

  // S = x - 1 and T = 3 (x - 1): the product is a square, yet S + T y^2 flips sign at x = 1
  KolmogorovSpec joint{Polynomial(), Polynomial(1), px("x - 1"), Polynomial(), px("x - 1"), 1, IntervalQ::open(frac(1, 2), 2)};
  auto jr = kolmogorov_check(joint);
  CHECK(jr.certificate.verdict == SignVerdict::NonNegativeZeroMeasure);
  CHECK(!jr.no_periodic_orbits);
  CHECK(eval_d(jr.S + jr.T, 0.75) * eval_d(jr.S + jr.T, 1.5) < 0);

  KolmogorovSpec opposite{Polynomial(), Polynomial(1), px("-1"), Polynomial(), px("1"), 1, IntervalQ::open(1, 2)};
  auto op = kolmogorov_check(opposite);
  CHECK(op.certificate.verdict == SignVerdict::StrictlyNegative);
  CHECK(!op.no_periodic_orbits);

  KolmogorovSpec no_g1 = lv;
  no_g1.g1 = Polynomial();
  try {
    kolmogorov_check(no_g1);
    FAIL("expected ZeroG1");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ZeroG1);
  }
}

TEST_CASE("property: alternate form of S") {
  Rng rng(5003);
  for (int trial = 0; trial < 50; ++trial) {
    KolmogorovSpec k;
    k.g0 = rng.polynomial({"x"}, 3);
    k.g1 = rng.polynomial({"x"}, 2) + Polynomial(Rational(rng.integer(1, 5)));
    k.h0 = rng.polynomial({"x"}, 3);
    k.h1 = rng.polynomial({"x"}, 2);
    k.h2 = rng.polynomial({"x"}, 2);
    k.lambda = rng.rational();
    auto r = kolmogorov_check(k);
    CHECK(kolmogorov_alternate_s(k) == RationalFunction(r.S));
    CHECK(r.T == Rational(2 + k.lambda) * k.h2 * k.g1);
  }
}

TEST_CASE("property: Kolmogorov divergence probe") {
  auto st = kolmogorov_probe(5004, 20, 50, 1e-6);
  CHECK(st.instances == 20);
  CHECK(st.points == 20 * 50);
  CHECK(st.magnitude_failures == 0);
  CHECK(st.sign_failures == 0);
  MESSAGE("worst relative deviation " << st.worst_relative);
}

TEST_CASE("massera_check examples") {
  auto figure_eight = massera_check(px("-4 + x^2 + x^4"), px("x"), IntervalQ::real_line());
  CHECK(figure_eight.construction.V == rf("y^2 + (-4 + x^2 + x^4)*x*y + x^2"));
  CHECK(figure_eight.construction.M == rf("2*(1 + 2*x^2)*x^2*y^2"));
  CHECK(compute_ms(figure_eight.construction.system, {figure_eight.construction.V, -1}) == figure_eight.construction.M);
  CHECK(figure_eight.certificate.verdict == SignVerdict::NonNegativeZeroMeasure);
  REQUIRE(figure_eight.bound.has_value());
  CHECK(*figure_eight.bound == 1);
  CHECK(figure_eight.topology.bounded_components == 1);
  CHECK(figure_eight.topology.smooth_ovals == 0);
  CHECK(figure_eight.topology.ell_curve == 1);

  auto classic = massera_check(px("x^2 - 1"), px("x"), IntervalQ::real_line());
  CHECK(classic.u == rf("2*x^2"));
  // oracle: u = f + 2 G (f/g)' expanded by hand with G = x^2/2
  RationalFunction f = rf("x^2 - 1");
  CHECK(classic.u == f + rf("x^2") * (f / rf("x")).derivative("x"));
  REQUIRE(classic.bound.has_value());
  CHECK(*classic.bound == 1);

  auto center = massera_check(Polynomial(), px("x"), IntervalQ::real_line());
  CHECK(center.construction.M.is_zero());
  CHECK(center.certificate.verdict == SignVerdict::Indeterminate);
  CHECK(!center.bound.has_value());

  for (const auto& [g, I] : std::vector<std::pair<std::string, IntervalQ>>{
           {"x + 1", IntervalQ::real_line()}, {"x*(x - 1)", IntervalQ::open(-2, 2)}, {"x", IntervalQ::open(1, 2)}}) {
    try {
      massera_check(px("x^2 - 1"), px(g), I);
      FAIL("expected GOriginViolation");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GOriginViolation);
    }
  }
  // the root at 1 is outside the strip
  CHECK_NOTHROW(massera_check(px("x^2 - 1"), px("x*(x - 1)"), IntervalQ::open(frac(-1, 2), frac(1, 2))));
}

TEST_CASE("property: Massera's theorem as a special case") {
  Rng rng(5005);
  int covered = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f;
    if (trial % 2 == 0) {
      f = Polynomial(Rational(-rng.integer(1, 9)));
      for (unsigned k = 1; k <= 3; ++k) f += frac(rng.integer(0, 5), rng.integer(1, 3)) * Polynomial::monomial(1, {{"x", 2 * k}});
    } else {
      f = rng.polynomial({"x"}, 4) - Polynomial(Rational(rng.integer(1, 5)));
    }
    if (f.constant_term() >= 0) continue;
    UPoly xfp = UPoly::from_polynomial(px("x") * f.derivative("x"), "x");
    if (xfp.is_zero()) continue;
    auto hyp = certify_sign(xfp, IntervalQ::real_line(), SignMode::ZeroMeasure);
    if (hyp.verdict != SignVerdict::NonNegativeZeroMeasure) continue;
    bool only_origin = true;
    for (const auto& z : hyp.evidence.zeros) only_origin = only_origin && z.interval.contains(0);
    if (!only_origin) continue;
    ++covered;
    auto r = massera_check(f, px("x"), IntervalQ::real_line());
    CHECK(r.certificate.verdict == SignVerdict::NonNegativeZeroMeasure);
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == 1);
  }
  CHECK(covered >= 50);
}

TEST_CASE("lotka_volterra_dulac examples") {
  auto r = lotka_volterra_dulac(1, 2, 1, 3, 4, 1);
  CHECK(r.outcome == LotkaVolterraOutcome::NoLimitCycles);
  CHECK(*r.A == -5);
  CHECK(*r.B == 0);
  CHECK(*r.R == -3);
  CHECK(compute_div_dx(lotka_volterra_system(1, 2, 1, 3, 4, 1), rf("1/x^5")) == rf("-3/x^5"));

  auto node = lotka_volterra_dulac(1, 0, 0, 0, 1, 0);
  CHECK(*node.A == -2);
  CHECK(*node.B == -2);
  CHECK(*node.R == 0);
  CHECK(node.outcome == LotkaVolterraOutcome::Integrable);

  // classic predator-prey: a = e = 0
  auto classic = lotka_volterra_dulac(0, -1, 1, 1, 0, -1);
  CHECK(classic.outcome == LotkaVolterraOutcome::Integrable);
  CHECK(lotka_volterra_dulac(1, 2, 3, 2, 4, 5).outcome == LotkaVolterraOutcome::Degenerate);
  CHECK(lotka_volterra_dulac(1, 2, 3, 2, 4, 6).outcome == LotkaVolterraOutcome::Degenerate);
  CHECK(!lotka_volterra_dulac(0, 0, 0, 0, 0, 0).explanation.empty());
}

TEST_CASE("property: Lotka-Volterra R against the divergence expansion") {
  Rng rng(5006);
  int done = 0;
  while (done < 50) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational(), d = rng.rational(), e = rng.rational(),
             f = rng.rational();
    if (a * e - b * d == 0) continue;
    ++done;
    auto r = lotka_volterra_dulac(a, b, c, d, e, f);
    REQUIRE(r.R.has_value());
    Polynomial expansion = lv_weighted_divergence(a, b, c, d, e, f, *r.A, *r.B);
    REQUIRE(expansion.is_constant());
    CHECK(expansion.constant_term() == *r.R);
    SystemDef sys = lotka_volterra_system(a, b, c, d, e, f);
    CHECK(monomial_weight_divergence(sys, *r.A, *r.B) == RationalFunction(*r.R));
    CHECK((r.outcome == LotkaVolterraOutcome::NoLimitCycles) == (*r.R != 0));
  }
}

TEST_CASE("nullspace") {
  auto basis = nullspace({{1, 2, 3}, {2, 4, 6}}, 3);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(nullspace({{1, 0}, {0, 1}}, 2).empty());
}
