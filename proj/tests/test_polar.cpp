#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "cyclecert/dulac.hpp"
#include "cyclecert/error.hpp"
#include "cyclecert/polar.hpp"

using namespace cyclecert;
using namespace testing_support;

namespace {

TrigPoly random_trig(Rng& rng) {
  TrigPoly t(rng.rational());
  for (unsigned k = 1; k <= 3; ++k) {
    if (rng.integer(0, 1)) t += TrigPoly::cos(k, rng.rational());
    if (rng.integer(0, 1)) t += TrigPoly::sin(k, rng.rational());
  }
  return t;
}

}  // namespace

TEST_CASE("trig products and rendering") {
  CHECK(TrigPoly::cos(1) * TrigPoly::cos(1) == TrigPoly(frac(1, 2)) + TrigPoly::cos(2, frac(1, 2)));
  CHECK(TrigPoly::sin(1) * TrigPoly::sin(1) == TrigPoly(frac(1, 2)) - TrigPoly::cos(2, frac(1, 2)));
  CHECK(TrigPoly::sin(1) * TrigPoly::cos(1) == TrigPoly::sin(2, frac(1, 2)));
  CHECK(TrigPoly::sin(3) * TrigPoly::sin(3) + TrigPoly::cos(3) * TrigPoly::cos(3) == TrigPoly(1));
  CHECK((TrigPoly(2) + TrigPoly::cos(1) + TrigPoly::sin(2, frac(3, 4))).to_string() == "2 + cos(t) + 3/4*sin(2*t)");
  CHECK(TrigPoly::sin(2, 3).derivative() == TrigPoly::cos(2, 6));
  CHECK((TrigPoly(-10) + TrigPoly::sin(2, frac(3, 4))).amplitude_bound() == frac(-37, 4));
  CHECK((TrigPoly::cos(1) - TrigPoly::cos(1)).is_zero());
}

TEST_CASE("property: trig arithmetic agrees with evaluation") {
  Rng rng(4001);
  for (int trial = 0; trial < 100; ++trial) {
    TrigPoly f = random_trig(rng);
    TrigPoly g = random_trig(rng);
    Rational u = rng.rational();
    auto [c, s] = half_angle(u);
    CHECK((f * g).evaluate(c, s) == f.evaluate(c, s) * g.evaluate(c, s));
    CHECK((f + g).evaluate(c, s) == f.evaluate(c, s) + g.evaluate(c, s));
    double t = 2 * std::atan(to_double(u));
    CHECK(f.evaluate(t) == doctest::Approx(to_double(f.evaluate(c, s))));
    CHECK(f.amplitude_bound() >= f.evaluate(c, s));
  }
}

TEST_CASE("to_polar examples") {
  auto [R, Theta] = to_polar(SystemDef{rf("-y"), rf("x"), {}});
  CHECK(R.is_zero());
  CHECK(Theta == PolarPoly::term(0, TrigPoly(1)));
  auto [R2, Theta2] = to_polar(SystemDef{rf("x"), rf("y"), {}});
  CHECK(R2 == PolarPoly::term(1, TrigPoly(1)));
  CHECK(Theta2.is_zero());
  auto [R12, Theta12] = to_polar(two_circle_system(0, 0, 0));
  CHECK(R12.coeff(1).constant() == 2);
  CHECK(R12.coeff(3).constant() == -3);
  CHECK(R12.coeff(5).constant() == 1);
  CHECK(R12.coeff(2).constant() == 0);
  CHECK_THROWS_AS(to_polar(SystemDef{rf("1 + x"), rf("y"), {}}), Error);
  CHECK_THROWS_AS(to_polar(SystemDef{rf("x/(1 + x^2)"), rf("y"), {}}), Error);
  try {
    to_polar(SystemDef{rf("x + 3"), rf("y"), {}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonzeroAtOrigin);
  }
}

TEST_CASE("radial_average examples") {
  auto [R, Theta] = to_polar(two_circle_system(frac(1, 8), frac(1, 15), frac(1, 20)));
  CHECK(radial_average(R) == upoly("2 - 3*u + u^2", "u"));
  CHECK(radial_average(PolarPoly()).is_zero());
  CHECK(radial_average(PolarPoly::term(3, TrigPoly::cos(1) * TrigPoly::cos(1))) == upoly("u/2", "u"));
  try {
    radial_average(PolarPoly::term(2, TrigPoly(1)));
    FAIL("expected ParityViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParityViolation);
  }
}

TEST_CASE("polar_ms examples") {
  auto zero = polar_ms(two_circle_system(0, 0, 0), -1);
  CHECK(zero.p == upoly("2 - 3*u + u^2", "u"));
  CHECK(zero.w == upoly("r^2*(2*r^2 - 3)", "r"));
  CHECK(zero.M.coeff(4).constant() == -10);
  CHECK(zero.M.coeff(8) == TrigPoly(-4));
  CHECK(mu_bounds(zero.M) == upoly("-10*r^4 + 12*r^6 - 4*r^8", "r"));

  auto rotation = polar_ms(SystemDef{rf("-y"), rf("x"), {}}, -1);
  CHECK(rotation.w.is_zero());
  CHECK(rotation.M.is_zero());

  const Rational a = frac(1, 8), b = frac(1, 15), c = frac(1, 20);
  auto full = polar_ms(two_circle_system(a, b, c), -1);
  CHECK(full.M == expected_polar_m(a, b, c));
  CHECK(full.M.coeff(4).to_string() == expected_polar_m(a, b, c).coeff(4).to_string());
}

TEST_CASE("property: the expected expansion holds for random parameters") {
  Rng rng(4002);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK(polar_ms(two_circle_system(a, b, c), -1).M == expected_polar_m(a, b, c));
  }
}

TEST_CASE("mu_bounds examples") {
  std::map<unsigned, Rational> mu;
  mu_bounds(PolarPoly::term(4, TrigPoly(-10) + TrigPoly::sin(2, frac(3, 4))), &mu);
  CHECK(mu.at(4) == frac(-37, 4));

  const Rational a = frac(1, 8), b = frac(1, 15), c = frac(1, 20);
  auto ms = polar_ms(two_circle_system(a, b, c), -1);
  UPoly phi = mu_bounds(ms.M, &mu);
  CHECK(mu.at(4) <= -10 + frac(9, 4) * (abs(a) + abs(c)));
  CHECK(mu.at(5) <= frac(9, 4) * abs(b));
  CHECK(mu.at(6) <= 12 + abs(a) + abs(c));
  CHECK(mu.at(7) <= abs(b));
  CHECK(mu.at(8) == -4);
  for (const auto& [i, m] : mu) CHECK(phi.coeff(i) == m);

  // dense sampling oracle
  for (const auto& [i, coef] : ms.M.coeffs()) {
    double worst = -1e300;
    for (int k = 0; k < 360; ++k) worst = std::max(worst, coef.evaluate(k * std::numbers::pi / 180.0));
    CHECK(to_double(mu.at(i)) >= worst - 1e-12);
  }
}

TEST_CASE("certify_polar examples") {
  auto cert = certify_polar(two_circle_system(frac(1, 8), frac(1, 15), frac(1, 20)), -1, true);
  CHECK(cert.p == upoly("2 - 3*u + u^2", "u"));
  CHECK(cert.w == upoly("r^2*(2*r^2 - 3)", "r"));
  CHECK(cert.d == 4);
  CHECK(cert.n_plus == 2);
  CHECK(cert.phi_sign.verdict == SignVerdict::StrictlyNegative);
  REQUIRE(cert.certified());
  CHECK(*cert.bound == 2);
  CHECK(cert.note.find("hyperbolic") != std::string::npos);
  CHECK(cert.lower_bound_note.find("at least") != std::string::npos);

  auto big = certify_polar(two_circle_system(100, 0, 0), -1);
  CHECK(big.mu.at(4) == -10 + frac(9, 4) * 100);
  CHECK(big.phi_sign.verdict != SignVerdict::StrictlyNegative);
  CHECK(!big.certified());

  SystemDef circular{rf("x*(1 - x^2 - y^2) - y"), rf("y*(1 - x^2 - y^2) + x"), {}};
  auto circ = certify_polar(circular, -1);
  CHECK(circ.p == upoly("1 - u", "u"));
  CHECK(circ.w == upoly("-r^2", "r"));
  CHECK(circ.M == PolarPoly::term(4, TrigPoly(-2)));
  CHECK(circ.phi == upoly("-2*r^4", "r"));
  CHECK(circ.n_plus == 1);
  REQUIRE(circ.certified());
  CHECK(*circ.bound == 1);

  try {
    certify_polar(SystemDef{rf("-y"), rf("x"), {}}, -1);
    FAIL("expected ZeroW");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroW);
  }
}

TEST_CASE("property: Cartesian and polar M agree exactly") {
  Rng rng(4003);
  std::vector<SystemDef> systems{two_circle_system(frac(1, 8), frac(1, 15), frac(1, 20)), two_circle_system(2, -1, frac(3, 7)),
                                 cubic_damping_system(1), cubic_damping_system(frac(3, 5))};
  for (const auto& sys : systems) {
    for (Rational s : {Rational(-1), frac(1, 2), Rational(0)}) {
      auto ms = polar_ms(sys, s);
      UPoly W = UPoly(ms.p.derivative().coeffs(), "u") * UPoly::monomial(1, 1, "u");
      CHECK(W.renamed("r").compose_square() == ms.w);
      RationalFunction V(W.to_polynomial().substitute({{"u", poly("x^2 + y^2")}}));
      RationalFunction cart = compute_ms(sys, {V, s});
      for (int k = 0; k < 100; ++k) {
        Rational r = frac(rng.integer(1, 40), rng.integer(1, 12));
        auto [c, sn] = half_angle(rng.rational(20, 7));
        Rational polar_value = ms.M.evaluate(r, c, sn);
        Rational cart_value = cart.evaluate({{"x", r * c}, {"y", r * sn}});
        CHECK(polar_value == cart_value);
      }
    }
  }
}

TEST_CASE("property: domination, w-p consistency, degree accounting") {
  Rng rng(4004);
  for (int trial = 0; trial < 30; ++trial) {
    SystemDef sys = trial % 2 ? two_circle_system(rng.rational(), rng.rational(), rng.rational()) : cubic_damping_system(rng.nonzero_rational());
    Rational s = rng.rational(3, 2);
    auto ms = polar_ms(sys, s);
    UPoly phi = mu_bounds(ms.M);
    // w(r) - r^2 p'(r^2) == 0
    UPoly check = ms.w - UPoly::monomial(1, 2, "r") * ms.p.derivative().renamed("r").compose_square();
    CHECK(check.is_zero());
    int n = static_cast<int>(sys.degree());
    if (!ms.w.is_zero()) CHECK(ms.M.degree() <= n + ms.w.degree() - 1);
    for (int k = 0; k < 40; ++k) {
      Rational r = frac(rng.integer(1, 50), rng.integer(1, 10));
      auto [c, sn] = half_angle(rng.rational(30, 7));
      CHECK(phi(r) >= ms.M.evaluate(r, c, sn));
    }
  }
}
